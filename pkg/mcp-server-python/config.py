"""
Configuration module for the polygon-zcl MCP server and CLI.

Provides centralized configuration management with support for:
- Environment variables
- Default values
- Path resolution
- Logging configuration
"""

import logging
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

# Load environment variables from .env file at project root
# config.py is in mcp-server-python/, so .env is in parent directory
_env_path = Path(__file__).resolve().parent.parent / ".env"
load_dotenv(dotenv_path=_env_path)


def _parse_bool(env_var: str, default: bool) -> bool:
    """Parse a boolean value from an environment variable."""
    value = os.getenv(env_var)
    if value is None:
        return default
    return value.lower() in ("true", "1", "t", "y", "yes")


def _parse_int(env_var: str, default: int) -> int:
    """Parse an integer from an environment variable, falling back on bad input."""
    value = os.getenv(env_var)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError:
        logging.getLogger(__name__).warning(
            f"Ignoring non-integer {env_var}={value!r}; using {default}"
        )
        return default


class Config:
    """
    Configuration class for polygon-zcl settings.

    Supports configuration via environment variables (and .env file) with sensible defaults.
    All paths are resolved relative to the repository root.
    """

    def __init__(self):
        """Initialize configuration from environment variables and defaults."""
        self._repo_root = self._find_repo_root()

        # Logging configuration
        self.log_level = os.getenv("POLYGONZCL_LOG_LEVEL", "INFO").upper()
        self.log_file = self._resolve_log_path()

        # Server configuration
        self.server_name = os.getenv("POLYGONZCL_SERVER_NAME", "polygon-zcl-mcp-server")

        # Enumeration cache
        self.cache_dir = self._resolve_repo_path(os.getenv("POLYGONZCL_CACHE_DIR", "data/cache"))

        # Compute limits
        self.threads = max(1, _parse_int("POLYGONZCL_THREADS", 1))
        self.search_budget = _parse_int("POLYGONZCL_SEARCH_BUDGET", 1_000_000)
        self.max_enumeration_n = _parse_int("POLYGONZCL_MAX_ENUMERATION_N", 9)
        self.max_generic_n = _parse_int("POLYGONZCL_MAX_GENERIC_N", 12)
        self.allow_large = _parse_bool("POLYGONZCL_ALLOW_LARGE", False)

        # Analysis behaviour
        self.verify_certificates = _parse_bool("POLYGONZCL_VERIFY_CERTIFICATES", True)
        self.zero_length_denominator = _parse_int("POLYGONZCL_ZERO_LENGTH_DENOMINATOR", 1000)

    def _find_repo_root(self) -> Path:
        """
        Find the repository root directory.

        Returns:
            Path to repository root (parent of mcp-server-python/)
        """
        return Path(__file__).resolve().parent.parent

    def _resolve_repo_path(self, value: str) -> Path:
        """Resolve a path setting; relative values are taken from the repository root."""
        path = Path(value)
        if path.is_absolute():
            return path
        return self._repo_root / path

    def _resolve_log_path(self) -> Optional[Path]:
        """
        Resolve the log file path from environment.

        If POLYGONZCL_LOG_FILE is set, logs will be written to that file.
        Otherwise, logs go to stderr only.

        Returns:
            Path to log file, or None for stderr-only logging
        """
        log_env = os.getenv("POLYGONZCL_LOG_FILE")
        if not log_env:
            return None
        return self._resolve_repo_path(log_env)

    def enumeration_limit(self) -> Optional[int]:
        """Largest n accepted by enumeration, or None when caps are lifted."""
        return None if self.allow_large else self.max_enumeration_n

    def generic_limit(self) -> Optional[int]:
        """Largest n accepted by the subset-sum genericity test, or None when lifted."""
        return None if self.allow_large else self.max_generic_n

    def setup_logging(self):
        """
        Configure logging based on configuration settings.

        Sets up logging to stderr and optionally to a file.
        Log level is controlled by POLYGONZCL_LOG_LEVEL.
        """
        numeric_level = getattr(logging, self.log_level, logging.INFO)

        formatter = logging.Formatter(
            fmt="%(asctime)s - %(name)s - %(levelname)s - %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
        )

        root_logger = logging.getLogger()
        root_logger.setLevel(numeric_level)

        # Remove existing handlers to avoid duplicates
        root_logger.handlers.clear()

        stderr_handler = logging.StreamHandler()
        stderr_handler.setLevel(numeric_level)
        stderr_handler.setFormatter(formatter)
        root_logger.addHandler(stderr_handler)

        if self.log_file:
            self.log_file.parent.mkdir(parents=True, exist_ok=True)

            file_handler = logging.FileHandler(self.log_file)
            file_handler.setLevel(numeric_level)
            file_handler.setFormatter(formatter)
            root_logger.addHandler(file_handler)

            logging.info(f"Logging to file: {self.log_file}")

        logging.debug(f"Log level set to: {self.log_level}")
        logging.debug(f"Repository root: {self._repo_root}")
        logging.debug(f"Cache directory: {self.cache_dir}")

    def validate(self) -> list[str]:
        """
        Validate configuration and return any warnings.

        Returns:
            List of warning messages (empty if all valid)
        """
        warnings = []

        if self.search_budget < 1:
            warnings.append(
                f"Search budget {self.search_budget} is not positive; every zcl search will fail."
            )

        if self.allow_large:
            warnings.append(
                "POLYGONZCL_ALLOW_LARGE is set: enumeration and genericity caps are lifted."
            )

        if self.cache_dir.exists() and not os.access(self.cache_dir, os.W_OK):
            warnings.append(f"Cache directory not writable: {self.cache_dir}")

        if self.log_file:
            log_dir = self.log_file.parent
            if not log_dir.exists():
                try:
                    log_dir.mkdir(parents=True, exist_ok=True)
                except Exception as e:
                    warnings.append(f"Cannot create log directory {log_dir}: {e}")
            elif not os.access(log_dir, os.W_OK):
                warnings.append(f"Log directory not writable: {log_dir}")

        return warnings


# Global configuration instance
config = Config()


def get_config() -> Config:
    """
    Get the global configuration instance.

    Returns:
        Global Config instance
    """
    return config
