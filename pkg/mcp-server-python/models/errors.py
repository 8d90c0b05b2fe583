"""
Error model for the polygon-zcl tools.

Provides structured error codes, sanitized error messages and the mapping
from error codes to CLI exit codes.
"""

from enum import Enum
from typing import Optional


class ErrorCode(str, Enum):
    """Structured error codes shared by the MCP tools and the CLI."""

    VALIDATION_ERROR = "VALIDATION_ERROR"
    PARSE_ERROR = "PARSE_ERROR"
    NOT_ANTICHAIN = "NOT_ANTICHAIN"
    NOT_GENERIC = "NOT_GENERIC"
    EMPTY_SPACE = "EMPTY_SPACE"
    NOT_REALIZABLE = "NOT_REALIZABLE"
    SIZE_LIMIT = "SIZE_LIMIT"
    DISCONNECTED = "DISCONNECTED"
    NO_PARTITION = "NO_PARTITION"
    ISO_VIOLATION = "ISO_VIOLATION"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"
    CERTIFICATE_FAILED = "CERTIFICATE_FAILED"
    INTERNAL_ERROR = "INTERNAL_ERROR"


_EXIT_CODES = {
    ErrorCode.VALIDATION_ERROR: 2,
    ErrorCode.PARSE_ERROR: 2,
    ErrorCode.NOT_ANTICHAIN: 2,
    ErrorCode.NOT_GENERIC: 3,
    ErrorCode.EMPTY_SPACE: 3,
    ErrorCode.NOT_REALIZABLE: 3,
    ErrorCode.DISCONNECTED: 3,
    ErrorCode.SIZE_LIMIT: 3,
    ErrorCode.BUDGET_EXCEEDED: 4,
}


class ToolError(Exception):
    """Base exception for tool errors with structured error information."""

    def __init__(
        self,
        code: ErrorCode,
        message: str,
        retryable: bool = False,
        original_error: Optional[Exception] = None,
    ):
        """
        Initialize a tool error.

        Args:
            code: The error code
            message: Human-readable error message
            retryable: Whether the operation can be retried
            original_error: The original exception if this wraps another error
        """
        self.code = code
        self.message = message
        self.retryable = retryable
        self.original_error = original_error
        super().__init__(message)

    def to_dict(self) -> dict:
        """Convert error to dictionary format for MCP response."""
        return {
            "error": {"code": self.code.value, "message": self.message, "retryable": self.retryable}
        }


def exit_code_for(code: ErrorCode | str) -> int:
    """
    Map an error code to the CLI exit code.

    2 is a usage or parse problem, 3 a domain failure (not realizable,
    empty space, ...), 4 an exhausted search budget and 1 anything else.
    """
    try:
        code = ErrorCode(code)
    except ValueError:
        return 1
    return _EXIT_CODES.get(code, 1)


def sanitize_stack_trace(error_msg: str) -> str:
    """
    Remove stack traces from error messages.

    Args:
        error_msg: The original error message

    Returns:
        Error message without stack trace
    """
    lines = error_msg.split("\n")
    if lines:
        return lines[0].strip()
    return error_msg


def create_validation_error(message: str) -> ToolError:
    """Create a validation error."""
    return ToolError(code=ErrorCode.VALIDATION_ERROR, message=message, retryable=False)


def create_parse_error(text: str, reason: str) -> ToolError:
    """
    Create a parse error for genetic-code or length-vector notation.

    Args:
        text: The offending input text
        reason: What is wrong with it

    Returns:
        ToolError with PARSE_ERROR code
    """
    return ToolError(code=ErrorCode.PARSE_ERROR, message=f"Cannot parse {text!r}: {reason}")


def create_not_antichain_error(first: str, second: str) -> ToolError:
    """Create an error for two genes that are comparable under dominance."""
    return ToolError(
        code=ErrorCode.NOT_ANTICHAIN,
        message=f"Genes {first} and {second} are comparable; genes must form an antichain",
    )


def create_not_generic_error(lengths: str) -> ToolError:
    """Create an error for a length vector with a subset summing to half the total."""
    return ToolError(
        code=ErrorCode.NOT_GENERIC,
        message=f"Length vector ({lengths}) is not generic: some subset sums to half the total",
    )


def create_empty_space_error(n: int) -> ToolError:
    """Create an error for a length vector whose longest side is long."""
    return ToolError(
        code=ErrorCode.EMPTY_SPACE,
        message=f"Polygon space is empty: side {n} is longer than all other sides together",
    )


def create_not_realizable_error(code_text: str) -> ToolError:
    """Create an error for a genetic code no generic length vector realizes."""
    return ToolError(
        code=ErrorCode.NOT_REALIZABLE,
        message=f"Genetic code <{code_text}> is not realized by any generic length vector",
    )


def create_size_limit_error(what: str, n: int, limit: int) -> ToolError:
    """
    Create an error for an input beyond the configured desk-scale caps.

    Args:
        what: Operation that refused the input
        n: Requested number of sides
        limit: Configured maximum

    Returns:
        ToolError with SIZE_LIMIT code
    """
    return ToolError(
        code=ErrorCode.SIZE_LIMIT,
        message=(
            f"{what} supports n <= {limit}, got n = {n}; "
            "set POLYGONZCL_ALLOW_LARGE=true to lift the cap"
        ),
    )


def create_disconnected_error(code_text: str) -> ToolError:
    """Create an error for the code of the disconnected space T^m + T^m."""
    return ToolError(
        code=ErrorCode.DISCONNECTED,
        message=f"Genetic code <{code_text}> describes a disconnected space (two tori)",
    )


def create_no_partition_error(k: int) -> ToolError:
    """Create an error when no gee pair splits [k]."""
    return ToolError(
        code=ErrorCode.NO_PARTITION,
        message=f"No pair of gees admits a partition of [{k}]",
    )


def create_iso_violation_error(relation: str) -> ToolError:
    """Create an error for a ring relation that fails under the genus-2 isomorphism."""
    return ToolError(
        code=ErrorCode.ISO_VIOLATION,
        message=f"Isomorphism check failed: {relation}",
    )


def create_budget_exceeded_error(budget: int) -> ToolError:
    """Create an error for a zero-divisor search that visited too many partial products."""
    return ToolError(
        code=ErrorCode.BUDGET_EXCEEDED,
        message=f"Search exceeded the budget of {budget} partial products",
        retryable=True,
    )


def create_certificate_failed_error(code_text: str, k: int) -> ToolError:
    """Create an error for a lower-bound certificate that evaluated to zero."""
    return ToolError(
        code=ErrorCode.CERTIFICATE_FAILED,
        message=f"Certificate product for <{code_text}> at level {k} evaluated to zero",
    )


def create_internal_error(message: str, original_error: Optional[Exception] = None) -> ToolError:
    """
    Create an internal error for unexpected exceptions.

    Args:
        message: Description of the internal error
        original_error: The original exception

    Returns:
        ToolError with INTERNAL_ERROR code
    """
    sanitized_message = sanitize_stack_trace(message)

    return ToolError(
        code=ErrorCode.INTERNAL_ERROR,
        message=f"Internal error: {sanitized_message}",
        retryable=True,
        original_error=original_error,
    )
