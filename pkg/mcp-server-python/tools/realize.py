"""MCP tool handler for realize."""

from typing import Any, Dict

from pydantic import ValidationError

from models.errors import ToolError, create_internal_error, create_not_realizable_error
from schemas.realize import RealizeRequest, RealizeResponse
from utils.code_notation import format_code, parse_code
from utils.genetics import genetic_code
from utils.pydantic_error_mapper import map_pydantic_validation_error
from utils.realizability import solve_realization


def realize(args: Dict[str, Any]) -> Dict[str, Any]:
    """
    Find an integer length vector with a given genetic code.

    Args:
        args: Dictionary containing:
            - code (str): Genetic code text, e.g. "8531"
            - n (int): Number of sides
            - gees (bool): Read ``code`` as gee notation, e.g. "7531" for n=8

    Returns:
        RealizeResponse as a dict (witness, LP slack, round-trip check), or
        {"error": {...}} with PARSE_ERROR, NOT_ANTICHAIN or NOT_REALIZABLE.
    """
    try:
        request = RealizeRequest.model_validate(args)
        code = parse_code(request.code, request.n, gees=request.gees)

        realization = solve_realization(code)
        if realization is None:
            raise create_not_realizable_error(format_code(code))

        slack = realization.slack
        return RealizeResponse(
            code=format_code(code),
            lengths=realization.lengths.as_strings(),
            slack=f"{slack.numerator}/{slack.denominator}",
            round_trip=genetic_code(realization.lengths) == code,
        ).model_dump()

    except ValidationError as e:
        return map_pydantic_validation_error(e).to_dict()

    except ToolError as e:
        return e.to_dict()

    except Exception as e:
        return create_internal_error(message=str(e), original_error=e).to_dict()
