"""
Text notation for genetic codes and length vectors.

Genetic codes are written gene by gene: a run of digits lists one-digit
elements ("9421"), braces list arbitrary integers ("{10,4,2,1}"), and genes
are separated by "," or ";". Whitespace is ignored and the whole code may be
wrapped in angle brackets. Length vectors are comma separated integers or
exact fractions "p/q"; decimals are refused so that genericity stays exact.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional

from models.errors import create_parse_error
from models.genetic_code import GeneticCode, LengthVector
from models.poset import IndexSubset

_TOKEN = re.compile(r"\{([^{}]*)\}|(\d+)|([,;])")
_LENGTH = re.compile(r"(\d+)(?:/(\d+))?")
_WRAPPERS = (("<", ">"), ("⟨", "⟩"))


def _strip_wrappers(text: str) -> str:
    for left, right in _WRAPPERS:
        if text.startswith(left) and text.endswith(right):
            return text[len(left) : -len(right)]
    return text


def _brace_gene(original: str, body: str) -> list[int]:
    items = body.split(",")
    if any(not part.isdigit() for part in items):
        raise create_parse_error(original, f"'{{{body}}}' is not a comma separated integer list")
    return [int(part) for part in items]


def _digit_gene(original: str, digits: str) -> list[int]:
    if "0" in digits:
        raise create_parse_error(original, f"digit 0 is not an element (gene '{digits}')")
    return [int(d) for d in digits]


def parse_code(text: str, n: int, gees: bool = False) -> GeneticCode:
    """
    Parse gene notation into a canonical GeneticCode for n sides.

    With ``gees`` set the text lists gees instead (genes without n, as in
    "7531" for the gene {8,7,5,3,1} when n = 8) and n is added to each.

    Raises:
        ToolError: PARSE_ERROR for malformed text, repeated elements, elements
            outside [n] or genes missing n; NOT_ANTICHAIN for comparable genes.
    """
    compact = _strip_wrappers("".join(text.split()))
    if not compact:
        raise create_parse_error(text, "empty genetic code")

    genes: list[list[int]] = []
    expect_gene = True
    position = 0
    while position < len(compact):
        match = _TOKEN.match(compact, position)
        if match is None:
            raise create_parse_error(text, f"unexpected character {compact[position]!r}")
        brace_body, digits, separator = match.groups()
        if separator is not None:
            if expect_gene:
                raise create_parse_error(text, "missing gene before separator")
            expect_gene = True
        else:
            if not expect_gene:
                raise create_parse_error(text, "genes must be separated by ',' or ';'")
            if brace_body is not None:
                genes.append(_brace_gene(text, brace_body))
            else:
                genes.append(_digit_gene(text, digits))
            expect_gene = False
        position = match.end()
    if expect_gene:
        raise create_parse_error(text, "trailing separator")

    if gees:
        for gene in genes:
            if n in gene:
                raise create_parse_error(text, f"gee {''.join(map(str, gene))} contains n = {n}")
            gene.append(n)

    for gene in genes:
        label = "".join(str(x) for x in gene)
        if len(set(gene)) != len(gene):
            raise create_parse_error(text, f"gene {label} repeats an element")
        if any(x < 1 or x > n for x in gene):
            raise create_parse_error(text, f"gene {label} has elements outside 1..{n}")
        if n not in gene:
            raise create_parse_error(text, f"gene {label} does not contain n = {n}")

    return GeneticCode(n, tuple(IndexSubset(tuple(g)) for g in genes))


def format_code(code: GeneticCode) -> str:
    """Inverse of ``parse_code``: "9421,95" or "{10,4,2,1},{10,5}"."""
    return code.label


def parse_lengths(text: str, zero_length: Optional[Fraction] = None) -> LengthVector:
    """
    Parse "a,b/c,..." into a sorted LengthVector.

    A side written as 0 stands for a very small side; it is replaced by
    ``zero_length`` when given and refused otherwise.
    """
    parts = [part.strip() for part in re.split(r"[,;]", text.strip())]
    if not parts or any(not part for part in parts):
        raise create_parse_error(text, "expected comma separated lengths")

    values: list[Fraction] = []
    for part in parts:
        if "." in part:
            raise create_parse_error(text, f"decimal {part!r} refused; write it as p/q")
        match = _LENGTH.fullmatch(part)
        if match is None:
            raise create_parse_error(text, f"{part!r} is not an integer or fraction p/q")
        numerator, denominator = match.groups()
        if denominator is not None and int(denominator) == 0:
            raise create_parse_error(text, f"{part!r} has a zero denominator")
        value = Fraction(int(numerator), int(denominator or 1))
        if value == 0:
            if zero_length is None:
                raise create_parse_error(text, "side lengths must be positive")
            value = zero_length
        values.append(value)

    return LengthVector.sorted_from(values)
