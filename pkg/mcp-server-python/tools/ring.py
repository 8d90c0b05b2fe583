"""
MCP tool handler for ring.

Dumps the canonical cohomology ring of a code: basis classes with their
kind, index set and degree, and the nonzero structure constants as exact
rationals.
"""

from typing import Any, Dict

from pydantic import ValidationError

from models.errors import ToolError, create_internal_error
from schemas.ring import RingRequest, RingResponse
from utils.cohomology import (
    betti,
    build_canonical_ring,
    ring_to_json,
    validate_ring,
    verify_poincare,
)
from utils.genus2 import GENUS2_CODE, check_vw_iso
from utils.pydantic_error_mapper import map_pydantic_validation_error
from utils.validation import resolve_code


def ring(args: Dict[str, Any]) -> Dict[str, Any]:
    """
    Canonical ring of a connected code.

    Args:
        args: Dictionary containing:
            - lengths (str) or code (str) with n (int): The polygon space
            - gees (bool): Read ``code`` as gee notation
            - check (bool): Add Poincaré duality and the associativity /
              graded-commutativity sweep (default false)

    Returns:
        RingResponse as a dict; for <632> the exotic products of the true
        ring are listed. {"error": {...}} with DISCONNECTED for the
        disconnected code.
    """
    try:
        request = RingRequest.model_validate(args)
        code = resolve_code(request.lengths, request.code, request.n, request.gees).code

        canonical, exact = build_canonical_ring(code)
        dump = ring_to_json(canonical)
        exotic = [p.describe() for p in check_vw_iso()] if code == GENUS2_CODE else []

        return RingResponse(
            name=dump["name"],
            m=dump["m"],
            model_exact=exact,
            betti=betti(code),
            basis=dump["basis"],
            products=dump["products"],
            poincare=verify_poincare(canonical) if request.check else None,
            violations=validate_ring(canonical) if request.check else None,
            exotic_products=exotic,
        ).model_dump()

    except ValidationError as e:
        return map_pydantic_validation_error(e).to_dict()

    except ToolError as e:
        return e.to_dict()

    except Exception as e:
        return create_internal_error(message=str(e), original_error=e).to_dict()
