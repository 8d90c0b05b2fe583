"""
Input resolution shared by the MCP tools and the CLI.

A polygon space is named either by a length vector or by a genetic code
together with n. Both surfaces funnel through ``resolve_code`` so that the
same text produces the same code, the same errors and the same exit codes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from config import config
from models.errors import create_validation_error
from models.genetic_code import GeneticCode, LengthVector
from utils.code_notation import parse_code, parse_lengths
from utils.genetics import genetic_code
from utils.realizability import realize

MIN_N = 3


@dataclass(frozen=True)
class ResolvedInput:
    """
    A code plus a length vector realizing it: the given one, or the LP
    witness when the code was given (None if realizability was not asked).
    """

    code: GeneticCode
    lengths: Optional[LengthVector] = None
    lengths_given: bool = False


def zero_length() -> Fraction:
    """Length substituted for sides written as 0."""
    return Fraction(1, max(1, config.zero_length_denominator))


def validate_n(n: Optional[int], required: bool = True) -> Optional[int]:
    """
    Validate the number of sides.

    Raises:
        ToolError: VALIDATION_ERROR if n is missing (when required), not an
            integer or below 3
    """
    if n is None:
        if required:
            raise create_validation_error("Invalid n: required with a genetic code")
        return None
    if isinstance(n, bool) or not isinstance(n, int):
        raise create_validation_error(f"Invalid n type: expected integer, got {type(n).__name__}")
    if n < MIN_N:
        raise create_validation_error(f"Invalid n: {n} is below minimum of {MIN_N}")
    return n


def resolve_code(
    lengths: Optional[str] = None,
    code: Optional[str] = None,
    n: Optional[int] = None,
    gees: bool = False,
    allow_zero: bool = False,
    realizable: bool = True,
) -> ResolvedInput:
    """
    Turn exactly one of ``lengths`` or (``code``, ``n``) into a GeneticCode.

    With ``allow_zero`` a side written as 0 becomes ``zero_length()``. A
    code given as text is checked for realizability unless ``realizable``
    is False.

    Raises:
        ToolError: VALIDATION_ERROR when both or neither input is given;
            PARSE_ERROR, NOT_ANTICHAIN, NOT_GENERIC, EMPTY_SPACE or
            NOT_REALIZABLE from the notation, genetics and LP layers
    """
    if (lengths is None) == (code is None):
        raise create_validation_error("Provide exactly one of lengths or code (with n)")

    if lengths is not None:
        if n is not None:
            raise create_validation_error("n is implied by lengths; do not pass both")
        vector = parse_lengths(lengths, zero_length() if allow_zero else None)
        return ResolvedInput(code=genetic_code(vector), lengths=vector, lengths_given=True)

    validate_n(n)
    parsed = parse_code(code, n, gees=gees)
    if not realizable:
        return ResolvedInput(code=parsed)
    return ResolvedInput(code=parsed, lengths=realize(parsed))
