"""MCP tool handler for verify_tables."""

from typing import Any, Dict

from pydantic import ValidationError

from models.errors import ToolError, create_internal_error
from schemas.verify_tables import VerifyTablesRequest, VerifyTablesResponse
from utils.acceptance import run_acceptance
from utils.pydantic_error_mapper import map_pydantic_validation_error


def verify_tables(args: Dict[str, Any]) -> Dict[str, Any]:
    """
    Recompute the reference tables and report each value as passed or failed.

    Args:
        args: Dictionary containing:
            - full (bool): Include the n = 8 census breakdown (minutes; default false)
            - threads (int): Worker processes for census runs

    Returns:
        VerifyTablesResponse as a dict.
    """
    try:
        request = VerifyTablesRequest.model_validate(args)
        items = run_acceptance(full=request.full, workers=request.threads)
        failed = sum(1 for item in items if not item.passed)
        return VerifyTablesResponse(
            items=items,
            passed=len(items) - failed,
            failed=failed,
            all_passed=failed == 0,
        ).model_dump()

    except ValidationError as e:
        return map_pydantic_validation_error(e).to_dict()

    except ToolError as e:
        return e.to_dict()

    except Exception as e:
        return create_internal_error(message=str(e), original_error=e).to_dict()
