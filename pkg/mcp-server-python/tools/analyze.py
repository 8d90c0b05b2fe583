"""
MCP tool handler for analyze.

Runs the whole pipeline for one polygon space: code, realizing lengths,
Betti numbers, zcl and TC bounds with their certificate, and the genus-2
annotation when the code is <632>.
"""

from typing import Any, Dict, Optional

from pydantic import ValidationError

from models.errors import ToolError, create_internal_error
from models.genetic_code import GeneticCode
from schemas.analyze import AnalyzeRequest, AnalyzeResponse, OracleAnnotation
from utils.classification import build_record
from utils.cohomology import betti, build_canonical_ring
from utils.genetics import is_connected
from utils.genus2 import oracle_zcl
from utils.pydantic_error_mapper import map_pydantic_validation_error
from utils.validation import resolve_code
from utils.zcl_bounds import zcl_bounds

INEXACT_WARNING = "canonical model; exotic products possible (m < 2s), zcl is an interval"
DISCONNECTED_WARNING = "disconnected space (two disjoint tori); no ring or zcl bounds"


def build_oracle_annotation(
    code: GeneticCode, budget: Optional[int] = None
) -> Optional[OracleAnnotation]:
    """zcl in the true ring when one is known for ``code``, else None."""
    oracle = oracle_zcl(code, budget)
    if oracle is None:
        return None
    return OracleAnnotation(
        ring=oracle.ring_name,
        zcl=oracle.zcl,
        witness=list(oracle.witness),
        tc_lower=oracle.zcl + 1,
        tc_upper=2 * code.n - 5,
        states=oracle.search.states,
    )


def analyze(args: Dict[str, Any]) -> Dict[str, Any]:
    """
    Analyze one polygon space given by ``lengths`` or by ``code`` and ``n``.

    Args:
        args: Dictionary containing:
            - lengths (str): Side lengths "a,b/c,...", 0 meaning a tiny side
            - code (str) and n (int): Genetic code text, e.g. "9421,95" with n=9
            - gees (bool): Read ``code`` as gee notation
            - verify (bool): Check the certificate product (default from config)
            - budget (int): Cap for the genus-2 product search

    Returns:
        AnalyzeResponse as a dict, or {"error": {...}} with PARSE_ERROR,
        NOT_GENERIC, EMPTY_SPACE, NOT_REALIZABLE, BUDGET_EXCEEDED, ...
    """
    try:
        request = AnalyzeRequest.model_validate(args)
        resolved = resolve_code(
            request.lengths, request.code, request.n, request.gees, allow_zero=True
        )
        code = resolved.code

        warnings: list[str] = []
        bounds = None
        betti_vector = None
        if is_connected(code):
            ring, exact = build_canonical_ring(code)
            bounds = zcl_bounds(code, ring=ring, verify=request.verify)
            betti_vector = betti(code)
            if not exact:
                warnings.append(INEXACT_WARNING)
        else:
            warnings.append(DISCONNECTED_WARNING)

        return AnalyzeResponse(
            record=build_record(code, bounds),
            lengths=resolved.lengths.as_strings(),
            lengths_given=resolved.lengths_given,
            betti=betti_vector,
            certificate=bounds.certificate if bounds else None,
            warnings=warnings,
            oracle=build_oracle_annotation(code, request.budget),
        ).model_dump()

    except ValidationError as e:
        return map_pydantic_validation_error(e).to_dict()

    except ToolError as e:
        return e.to_dict()

    except Exception as e:
        return create_internal_error(message=str(e), original_error=e).to_dict()
