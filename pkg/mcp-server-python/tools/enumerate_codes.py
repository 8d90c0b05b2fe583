"""
MCP tool handler for enumerate_codes.

Enumerates every realizable genetic code for n sides (or loads the cached
census), attaches the zcl statistics of each code and, with ``classify``,
the census summary.
"""

from typing import Any, Dict

from pydantic import ValidationError

from models.errors import ToolError, create_internal_error
from schemas.enumerate_codes import EnumerateCodesRequest, EnumerateCodesResponse
from utils.census_cache import load_census
from utils.classification import summarize
from utils.pydantic_error_mapper import map_pydantic_validation_error


def enumerate_codes(args: Dict[str, Any]) -> Dict[str, Any]:
    """
    Census of realizable codes for one n.

    Args:
        args: Dictionary containing:
            - n (int): Number of sides, 4 <= n <= POLYGONZCL_MAX_ENUMERATION_N
            - classify (bool): Verify certificates and add the summary (default false)
            - use_cache (bool): Read/write the CSV cache (default true)
            - threads (int): Worker processes (default POLYGONZCL_THREADS)

    Returns:
        EnumerateCodesResponse as a dict, or {"error": {...}} with
        VALIDATION_ERROR or SIZE_LIMIT.
    """
    try:
        request = EnumerateCodesRequest.model_validate(args)

        # Bounds are cheap; only certificate checks are skipped without classify
        codes, records, cached = load_census(
            request.n,
            use_cache=request.use_cache,
            workers=request.threads,
            verify=None if request.classify else False,
        )
        summary = summarize(request.n, codes, records) if request.classify else None

        return EnumerateCodesResponse(
            n=request.n,
            count=len(records),
            cached=cached,
            records=records,
            summary=summary,
        ).model_dump()

    except ValidationError as e:
        return map_pydantic_validation_error(e).to_dict()

    except ToolError as e:
        return e.to_dict()

    except Exception as e:
        return create_internal_error(message=str(e), original_error=e).to_dict()
