"""
Zero divisors in the tensor square of a graded ring.

Products in R ⊗ R carry the Koszul sign

    (a ⊗ b)(c ⊗ d) = (-1)^(|b||c|) ac ⊗ bd,

and the barred class of u is u ⊗ 1 - 1 ⊗ u, which the multiplication map
sends to zero. Lower bounds for zcl are certified by products of barred
classes that evaluate to a nonzero tensor.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from config import config
from models.errors import create_budget_exceeded_error, create_no_partition_error
from models.genetic_code import GeneticCode
from models.poset import IndexSubset, find_partition
from models.ring import GradedRing, RingElement
from models.tensor import TensorElement

logger = logging.getLogger(__name__)


def tensor_multiply(ring: GradedRing, x: TensorElement, y: TensorElement) -> TensorElement:
    """Bilinear Koszul-signed product in R ⊗ R."""
    out: dict[tuple[int, int], Fraction] = {}
    for (a, b), p in x.terms:
        b_degree = ring.degree(b)
        for (c, d), q in y.terms:
            left = ring.product(a, c)
            if left.is_zero():
                continue
            right = ring.product(b, d)
            if right.is_zero():
                continue
            coefficient = p * q
            if (b_degree * ring.degree(c)) % 2:
                coefficient = -coefficient
            for i, r in left.terms:
                for j, s in right.terms:
                    out[(i, j)] = out.get((i, j), Fraction(0)) + coefficient * r * s
    return TensorElement.from_dict(out)


def unit_tensor(ring: GradedRing) -> TensorElement:
    return TensorElement.pure(ring.unit, ring.unit)


def bar(ring: GradedRing, u: int) -> TensorElement:
    """u ⊗ 1 - 1 ⊗ u."""
    return TensorElement.from_dict({(u, ring.unit): 1, (ring.unit, u): -1})


def mult_map(ring: GradedRing, x: TensorElement) -> RingElement:
    """Cup product R ⊗ R -> R, a ⊗ b -> ab, without signs."""
    out: dict[int, Fraction] = {}
    for (a, b), c in x.terms:
        for k, r in ring.product(a, b).terms:
            out[k] = out.get(k, Fraction(0)) + c * r
    return RingElement.from_dict(out)


def evaluate_product(ring: GradedRing, factors: Sequence[TensorElement]) -> TensorElement:
    """Left-to-right product of tensor factors, stopping early at zero."""
    value = unit_tensor(ring)
    for factor in factors:
        value = tensor_multiply(ring, value, factor)
        if value.is_zero():
            break
    return value


@dataclass(frozen=True)
class Certificate:
    """Evaluated product of barred classes together with the names of its factors."""

    value: TensorElement
    factors: tuple[str, ...]
    gees: tuple[IndexSubset, IndexSubset]
    partition: tuple[IndexSubset, IndexSubset]

    @property
    def length(self) -> int:
        return len(self.factors)

    def is_nonzero(self) -> bool:
        return not self.value.is_zero()

    def describe(self) -> str:
        return " * ".join(self.factors)


def _certificate_factors(
    ring: GradedRing, first: IndexSubset, second: IndexSubset, close_with_second: bool
) -> tuple[list[TensorElement], list[str]]:
    index = {(b.kind, b.index_set): i for i, b in enumerate(ring.basis)}
    elements: list[TensorElement] = []
    names: list[str] = []

    def add(kind: str, subset: IndexSubset) -> None:
        i = index[(kind, subset)]
        elements.append(bar(ring, i))
        names.append(f"bar({ring.basis[i].name})")

    for i in first:
        add("V", IndexSubset.of(i))
    add("W", first)
    for j in second:
        add("V", IndexSubset.of(j))
    if close_with_second:
        add("W", second)
    return elements, names


def certificate_product(
    code: GeneticCode, k: int, ring: GradedRing
) -> Certificate:
    """
    Product prod_{i in S} bar(V_i) * bar(W_S) * prod_{j in T} bar(V_j), times
    bar(W_T) when k and m have the same parity, for a split [k] = S + T with
    S <= G and T <= G' over ordered gee pairs (G, G').

    Gee pairs are tried in code order; the first nonzero product is returned,
    or the first evaluated one when every product vanishes.

    Raises:
        ToolError: NO_PARTITION when no gee pair splits [k].
    """
    close = (k - code.m) % 2 == 0
    first_found: Optional[Certificate] = None
    for g, h in product(code.gees, repeat=2):
        split = find_partition(g, h, k)
        if split is None:
            continue
        s, t = split
        factors, names = _certificate_factors(ring, s, t, close)
        certificate = Certificate(
            value=evaluate_product(ring, factors),
            factors=tuple(names),
            gees=(g, h),
            partition=(s, t),
        )
        if certificate.is_nonzero():
            return certificate
        if first_found is None:
            first_found = certificate
    if first_found is None:
        raise create_no_partition_error(k)
    logger.warning(f"Every certificate product for {code} at level {k} vanished")
    return first_found


@dataclass
class SearchResult:
    """Longest nonzero product found by ``find_longest_product``."""

    length: int
    witness: tuple[int, ...] = ()
    value: TensorElement = field(default_factory=TensorElement)
    states: int = 0


class _ProductSearch:
    def __init__(
        self, ring: GradedRing, generators: Sequence[TensorElement], max_len: int, budget: int
    ):
        self.ring = ring
        self.generators = list(generators)
        self.max_len = max_len
        self.budget = budget
        self.degrees = [self._degree(g) for g in self.generators]
        self.memo: dict[tuple[int, int, TensorElement], tuple[int, tuple[int, ...]]] = {}
        self.states = 0

    def _degree(self, element: TensorElement) -> int:
        """Lowest total degree over the terms. A product whose lowest degree exceeds 2m vanishes."""
        return min(self.ring.degree(a) + self.ring.degree(b) for (a, b), _ in element.terms)

    def extend(self, start: int, partial: TensorElement, degree: int, length: int):
        """Longest continuation (extra factors, indices) from generator ``start`` on."""
        key = (start, length, partial.normalized())
        if key in self.memo:
            return self.memo[key]
        self.states += 1
        if self.states > self.budget:
            raise create_budget_exceeded_error(self.budget)

        best: tuple[int, tuple[int, ...]] = (0, ())
        if length < self.max_len:
            for index in range(start, len(self.generators)):
                next_degree = degree + self.degrees[index]
                if next_degree > 2 * self.ring.m:
                    continue
                value = tensor_multiply(self.ring, partial, self.generators[index])
                if value.is_zero():
                    continue
                extra, tail = self.extend(index, value, next_degree, length + 1)
                if extra + 1 > best[0]:
                    best = (extra + 1, (index,) + tail)
                if length + best[0] >= self.max_len:
                    break
        self.memo[key] = best
        return best


def find_longest_product(
    ring: GradedRing,
    generators: Sequence[TensorElement],
    max_len: Optional[int] = None,
    budget: Optional[int] = None,
) -> SearchResult:
    """
    Depth-first search for the longest nonzero product of ``generators``.

    Barred classes commute up to sign, so only nondecreasing index sequences
    are explored (repetition allowed, even-degree bars may square nonzero).
    Partial products are memoized up to a scalar.

    Raises:
        ToolError: BUDGET_EXCEEDED after ``budget`` distinct partial products.
    """
    positions = [i for i, g in enumerate(generators) if not g.is_zero()]
    search = _ProductSearch(
        ring,
        [generators[i] for i in positions],
        max_len if max_len is not None else 2 * ring.m,
        budget if budget is not None else config.search_budget,
    )
    length, witness = search.extend(0, unit_tensor(ring), 0, 0)
    witness = tuple(positions[i] for i in witness)
    value = evaluate_product(ring, [generators[i] for i in witness])
    logger.debug(f"Product search on {ring.name}: length {length}, {search.states} states")
    return SearchResult(
        length=length,
        witness=witness,
        value=value,
        states=search.states,
    )


def search_zcl(
    ring: GradedRing,
    generators: Sequence[TensorElement],
    max_len: Optional[int] = None,
    budget: Optional[int] = None,
) -> int:
    """Length of the longest nonzero product of the given zero divisors."""
    return find_longest_product(ring, generators, max_len, budget).length


def barred_generators(ring: GradedRing, degrees: Optional[Sequence[int]] = None):
    """Bars of every non-unit basis class, optionally restricted to some degrees."""
    return [
        bar(ring, i)
        for i, b in enumerate(ring.basis)
        if i != ring.unit and (degrees is None or b.degree in degrees)
    ]
