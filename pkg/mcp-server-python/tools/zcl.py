"""
MCP tool handler for zcl.

Reports the zcl and TC intervals of a connected code, optionally backed by
a direct search for long nonzero products of barred classes in the
canonical ring.
"""

import logging
from typing import Any, Dict

from pydantic import ValidationError

from models.errors import ToolError, create_internal_error
from schemas.zcl import SearchSummary, ZclRequest, ZclResponse
from tools.analyze import INEXACT_WARNING, build_oracle_annotation
from utils.code_notation import format_code
from utils.cohomology import build_canonical_ring
from utils.pydantic_error_mapper import map_pydantic_validation_error
from utils.validation import resolve_code
from utils.zcl_bounds import tc_bounds, zcl_bounds
from utils.zero_divisors import barred_generators, find_longest_product

logger = logging.getLogger(__name__)


def zcl(args: Dict[str, Any]) -> Dict[str, Any]:
    """
    zcl bounds for one code.

    Args:
        args: Dictionary containing:
            - lengths (str) or code (str) with n (int): The polygon space
            - gees (bool): Read ``code`` as gee notation
            - verify (bool): Check the certificate product (default from config)
            - search (bool): Also search products of barred classes
            - degree_one (bool): Restrict the search to degree-one bars
            - max_len (int): Longest product to try (default 2m)
            - budget (int): Cap on partial products (default POLYGONZCL_SEARCH_BUDGET)

    Returns:
        ZclResponse as a dict, or {"error": {...}} with DISCONNECTED,
        CERTIFICATE_FAILED or BUDGET_EXCEEDED among others.
    """
    try:
        request = ZclRequest.model_validate(args)
        code = resolve_code(request.lengths, request.code, request.n, request.gees).code

        canonical, exact = build_canonical_ring(code)
        bounds = zcl_bounds(code, ring=canonical, verify=request.verify)
        tc_lower, tc_upper = tc_bounds(code, bounds)
        warnings = [] if exact else [INEXACT_WARNING]

        search = None
        if request.search:
            degrees = (1,) if request.degree_one else None
            names = [
                f"bar({b.name})"
                for i, b in enumerate(canonical.basis)
                if i != canonical.unit and (degrees is None or b.degree in degrees)
            ]
            result = find_longest_product(
                canonical,
                barred_generators(canonical, degrees),
                max_len=request.max_len,
                budget=request.budget,
            )
            search = SearchSummary(
                length=result.length,
                witness=[names[i] for i in result.witness],
                generators=len(names),
                states=result.states,
            )
            if result.length < bounds.lower and degrees is None and request.max_len is None:
                logger.warning(
                    f"Search on {code} found length {result.length}, "
                    f"lower bound is {bounds.lower}"
                )
                warnings.append(f"search found only {result.length} factors")

        return ZclResponse(
            code=format_code(code),
            bounds=bounds,
            tc_lower=tc_lower,
            tc_upper=tc_upper,
            search=search,
            oracle=build_oracle_annotation(code, request.budget),
            warnings=warnings,
        ).model_dump()

    except ValidationError as e:
        return map_pydantic_validation_error(e).to_dict()

    except ToolError as e:
        return e.to_dict()

    except Exception as e:
        return create_internal_error(message=str(e), original_error=e).to_dict()
