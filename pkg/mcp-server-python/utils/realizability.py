"""
Realizability of genetic codes by exact rational linear programming.

For a code with genes G and minimal long sets L the program is

    maximize   eps
    subject to eps <= l_1 <= l_2 <= ... <= l_n,  l_1 + ... + l_n <= 1,
               2 * l(G) - l(all) + eps <= 0     for every gene G,
               l(all) - 2 * l(A + n) + eps <= 0  for every A in L,
               l, eps >= 0,

and the code is realizable iff the optimum eps is positive. Every row but
the normalization is homogeneous, so a positive optimum has l(all) = 1.
Dominance is monotone for nondecreasing lengths, so the remaining subsets
containing n are implied with the same slack.

All right-hand sides are nonnegative, so the slack basis is feasible and a
single primal phase with Bland's rule solves the program over Fractions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

from config import config
from models.errors import create_internal_error, create_not_realizable_error
from models.genetic_code import GeneticCode, LengthVector
from models.poset import IndexSubset
from utils.genetics import genetic_code

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Realization:
    """Integer witness for a code plus the optimal slack of the normalized program."""

    lengths: LengthVector
    slack: Fraction


@dataclass(frozen=True)
class Program:
    """maximize objective . x subject to rows . x <= rhs, x >= 0."""

    objective: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]

    def satisfied_by(self, point: Sequence[Fraction]) -> bool:
        if any(x < 0 for x in point):
            return False
        return all(
            sum(a * x for a, x in zip(row, point)) <= b for row, b in zip(self.rows, self.rhs)
        )


class _Tableau:
    """Dense rational tableau; requires rhs >= 0 so the slack basis is feasible."""

    def __init__(self, program: Program):
        count = len(program.rows)
        self.variables = len(program.objective)
        self.width = self.variables + count
        self.rows = [
            [Fraction(a) for a in row]
            + [Fraction(int(i == k)) for k in range(count)]
            + [Fraction(b)]
            for i, (row, b) in enumerate(zip(program.rows, program.rhs))
        ]
        self.cost = [Fraction(-c) for c in program.objective] + [Fraction(0)] * (count + 1)
        self.basis = [self.variables + i for i in range(count)]
        self.pivots = 0

    def _pivot(self, r: int, j: int) -> None:
        p = self.rows[r][j]
        pivot_row = [x / p for x in self.rows[r]]
        self.rows[r] = pivot_row
        for i, row in enumerate(self.rows):
            f = row[j]
            if i != r and f:
                self.rows[i] = [x - f * y for x, y in zip(row, pivot_row)]
        f = self.cost[j]
        if f:
            self.cost = [x - f * y for x, y in zip(self.cost, pivot_row)]
        self.basis[r] = j
        self.pivots += 1

    def solve(self) -> None:
        """Bland's rule: lowest entering index, ratio ties to the lowest basic index."""
        while True:
            entering = next((j for j in range(self.width) if self.cost[j] < 0), None)
            if entering is None:
                return
            ratios = [
                (row[-1] / row[entering], self.basis[i], i)
                for i, row in enumerate(self.rows)
                if row[entering] > 0
            ]
            if not ratios:
                raise create_internal_error("Realization program is unbounded")
            self._pivot(min(ratios)[2], entering)

    @property
    def value(self) -> Fraction:
        return self.cost[-1]

    def point(self) -> list[Fraction]:
        values = [Fraction(0)] * self.variables
        for i, j in enumerate(self.basis):
            if j < self.variables:
                values[j] = self.rows[i][-1]
        return values


def _subset_row(n: int, subset: IndexSubset, sign: int) -> list[int]:
    """Coefficients of sign * (2 * l(subset) - l(all)) over l_1..l_n."""
    row = [-sign] * n
    for i in subset:
        row[i - 1] += 2 * sign
    return row


def build_program(code: GeneticCode) -> Program:
    """Variables l_1..l_n then eps."""
    n = code.n
    rows: list[list[int]] = []

    rows.append([-1] + [0] * (n - 1) + [1])
    for i in range(n - 1):
        row = [0] * (n + 1)
        row[i], row[i + 1] = 1, -1
        rows.append(row)
    for gene in code.genes:
        rows.append(_subset_row(n, gene, 1) + [1])
    for mask in code.minimal_long():
        rows.append(_subset_row(n, IndexSubset.from_mask(mask).with_element(n), -1) + [1])
    rhs = [0] * len(rows)

    rows.append([1] * n + [0])
    rhs.append(1)
    return Program(
        objective=tuple([0] * n + [1]),
        rows=tuple(tuple(row) for row in rows),
        rhs=tuple(rhs),
    )


def _integer_witness(values: list[Fraction]) -> LengthVector:
    scale = lcm(*(v.denominator for v in values))
    integers = [int(v * scale) for v in values]
    common = gcd(*integers)
    return LengthVector(tuple(Fraction(x // common) for x in integers))


def solve_realization(code: GeneticCode) -> Optional[Realization]:
    """
    Run the program; None when the optimum slack is not positive.

    Raises:
        ToolError: INTERNAL_ERROR if the optimal point violates the program or
            its witness does not reproduce ``code``.
    """
    program = build_program(code)
    tableau = _Tableau(program)
    tableau.solve()
    slack = tableau.value
    logger.debug(f"Realization program for {code}: slack {slack} after {tableau.pivots} pivots")
    if slack <= 0:
        return None

    point = tableau.point()
    if not program.satisfied_by(point) or point[-1] != slack:
        raise create_internal_error(f"Realization point for <{code.label}> violates its program")
    witness = _integer_witness(point[: code.n])
    limit = config.generic_limit()
    if (limit is None or code.n <= limit) and genetic_code(witness) != code:
        raise create_internal_error(f"Witness {witness} does not reproduce <{code.label}>")
    return Realization(lengths=witness, slack=slack)


def is_realizable(code: GeneticCode) -> bool:
    return solve_realization(code) is not None


def realize(code: GeneticCode) -> LengthVector:
    """
    Integer length vector with genetic code ``code`` (the LP witness scaled to coprime integers).

    Raises:
        ToolError: NOT_REALIZABLE when no generic length vector has this code.
    """
    realization = solve_realization(code)
    if realization is None:
        raise create_not_realizable_error(code.label)
    return realization.lengths
