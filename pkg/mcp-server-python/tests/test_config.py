"""
Unit tests for configuration module.

Tests configuration loading, path resolution, limits and validation.
"""

import logging
import os
from pathlib import Path
from unittest.mock import patch

from config import Config, get_config


class TestConfig:
    """Test suite for Config class."""

    def test_default_configuration(self):
        """Test that default configuration values are set correctly."""
        with patch.dict(os.environ, {}, clear=True):
            config = Config()

            assert config.log_level == "INFO"
            assert config.log_file is None
            assert config.server_name == "polygon-zcl-mcp-server"
            assert config.threads == 1
            assert config.search_budget == 1_000_000
            assert config.max_enumeration_n == 9
            assert config.max_generic_n == 12
            assert config.allow_large is False
            assert config.verify_certificates is True
            assert config.zero_length_denominator == 1000

            assert config._repo_root.exists()
            assert config._repo_root.is_dir()

    def test_cache_dir_default_is_under_repo_root(self):
        with patch.dict(os.environ, {}, clear=True):
            config = Config()
            assert config.cache_dir == config._repo_root / "data" / "cache"

    def test_cache_dir_absolute(self):
        with patch.dict(os.environ, {"POLYGONZCL_CACHE_DIR": "/tmp/polygon-cache"}, clear=True):
            assert Config().cache_dir == Path("/tmp/polygon-cache")

    def test_cache_dir_relative(self):
        with patch.dict(os.environ, {"POLYGONZCL_CACHE_DIR": "custom/cache"}, clear=True):
            config = Config()
            assert config.cache_dir == config._repo_root / "custom" / "cache"

    def test_integer_overrides(self):
        env = {
            "POLYGONZCL_THREADS": "4",
            "POLYGONZCL_SEARCH_BUDGET": "500",
            "POLYGONZCL_MAX_ENUMERATION_N": "8",
        }
        with patch.dict(os.environ, env, clear=True):
            config = Config()
            assert config.threads == 4
            assert config.search_budget == 500
            assert config.max_enumeration_n == 8

    def test_invalid_integer_falls_back(self):
        with patch.dict(os.environ, {"POLYGONZCL_THREADS": "many"}, clear=True):
            assert Config().threads == 1

    def test_threads_at_least_one(self):
        with patch.dict(os.environ, {"POLYGONZCL_THREADS": "0"}, clear=True):
            assert Config().threads == 1

    def test_boolean_parsing(self):
        for value in ("true", "1", "yes", "T"):
            with patch.dict(os.environ, {"POLYGONZCL_ALLOW_LARGE": value}, clear=True):
                assert Config().allow_large is True
        with patch.dict(os.environ, {"POLYGONZCL_VERIFY_CERTIFICATES": "false"}, clear=True):
            assert Config().verify_certificates is False

    def test_limits(self):
        with patch.dict(os.environ, {}, clear=True):
            config = Config()
            assert config.enumeration_limit() == 9
            assert config.generic_limit() == 12
        with patch.dict(os.environ, {"POLYGONZCL_ALLOW_LARGE": "true"}, clear=True):
            config = Config()
            assert config.enumeration_limit() is None
            assert config.generic_limit() is None

    def test_log_level_uppercased(self):
        with patch.dict(os.environ, {"POLYGONZCL_LOG_LEVEL": "debug"}, clear=True):
            assert Config().log_level == "DEBUG"

    def test_log_file_relative_to_repo(self):
        with patch.dict(os.environ, {"POLYGONZCL_LOG_FILE": "logs/server.log"}, clear=True):
            config = Config()
            assert config.log_file == config._repo_root / "logs" / "server.log"


class TestConfigValidation:
    """Tests for Config.validate."""

    def test_clean_configuration(self, tmp_path):
        with patch.dict(os.environ, {"POLYGONZCL_CACHE_DIR": str(tmp_path)}, clear=True):
            assert Config().validate() == []

    def test_non_positive_budget(self, tmp_path):
        env = {"POLYGONZCL_SEARCH_BUDGET": "0", "POLYGONZCL_CACHE_DIR": str(tmp_path)}
        with patch.dict(os.environ, env, clear=True):
            warnings = Config().validate()
            assert any("budget" in w.lower() for w in warnings)

    def test_allow_large_warns(self, tmp_path):
        env = {"POLYGONZCL_ALLOW_LARGE": "true", "POLYGONZCL_CACHE_DIR": str(tmp_path)}
        with patch.dict(os.environ, env, clear=True):
            warnings = Config().validate()
            assert any("POLYGONZCL_ALLOW_LARGE" in w for w in warnings)

    def test_log_directory_created(self, tmp_path):
        log_file = tmp_path / "logs" / "server.log"
        env = {"POLYGONZCL_LOG_FILE": str(log_file), "POLYGONZCL_CACHE_DIR": str(tmp_path)}
        with patch.dict(os.environ, env, clear=True):
            assert Config().validate() == []
            assert log_file.parent.exists()


class TestSetupLogging:
    """Tests for Config.setup_logging."""

    def test_stderr_handler_and_level(self):
        with patch.dict(os.environ, {"POLYGONZCL_LOG_LEVEL": "WARNING"}, clear=True):
            Config().setup_logging()
            root = logging.getLogger()
            assert root.level == logging.WARNING
            assert len(root.handlers) == 1

    def test_file_handler(self, tmp_path):
        log_file = tmp_path / "server.log"
        with patch.dict(os.environ, {"POLYGONZCL_LOG_FILE": str(log_file)}, clear=True):
            Config().setup_logging()
            root = logging.getLogger()
            assert any(isinstance(h, logging.FileHandler) for h in root.handlers)
            logging.getLogger("test").warning("written")
            for handler in root.handlers:
                handler.flush()
            assert "written" in log_file.read_text()
            for handler in list(root.handlers):
                if isinstance(handler, logging.FileHandler):
                    handler.close()
                    root.removeHandler(handler)


def test_get_config_returns_global_instance():
    assert get_config() is get_config()
