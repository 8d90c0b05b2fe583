"""
The connected sum of two 3-tori, the space of the code <632>.

Its rational cohomology is H*(T^3) + H*(T^3) glued along the top class:
generators a_1, a_2, a_3 and b_1, b_2, b_3 in degree 1 with exterior-algebra
products inside each family, a_i b_j = 0, and a_1a_2a_3 = b_1b_2b_3 = tau.

The V/W classes of the canonical model of <632> map into this ring by

    V_i -> a_i - b_i, W_12 -> a_3, W_13 -> b_2, W_23 -> a_1,
    W_1 -> b_2b_3, W_2 -> a_1a_3, W_3 -> b_1b_2, W_∅ -> tau.

With a_i + b_i in place of a_i - b_i the image of V_1V_2V_3 is 2 tau,
although {1,2,3} is not a subgee, so the difference is used. Products whose
pull-back differs in support from the canonical product are exotic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from sympy import Matrix, Rational

from models.errors import create_iso_violation_error
from models.genetic_code import GeneticCode
from models.poset import IndexSubset
from models.ring import BasisClass, GradedRing, RingElement
from utils.cohomology import build_canonical_ring
from utils.zero_divisors import SearchResult, barred_generators, find_longest_product

logger = logging.getLogger(__name__)

GENUS2_CODE = GeneticCode(6, (IndexSubset.of(6, 3, 2),))

_FAMILIES = ("a", "b")
_PAIRS = [(1, 2), (1, 3), (2, 3)]


def _permutation_sign(items: tuple[int, ...]) -> int:
    inversions = sum(1 for x, y in combinations(items, 2) if x > y)
    return -1 if inversions % 2 else 1


def build_genus2_ring() -> GradedRing:
    """Cohomology ring of T^3 # T^3 with basis 1, a_i, b_i, a_ij, b_ij, tau."""
    names = ["1"]
    degrees = [0]
    for family in _FAMILIES:
        for i in (1, 2, 3):
            names.append(f"{family}_{i}")
            degrees.append(1)
    for family in _FAMILIES:
        for i, j in _PAIRS:
            names.append(f"{family}_{i}{j}")
            degrees.append(2)
    names.append("tau")
    degrees.append(3)
    basis = tuple(BasisClass(name=n, degree=d) for n, d in zip(names, degrees))
    index = {n: i for i, n in enumerate(names)}
    top = index["tau"]

    products: dict[tuple[int, int], RingElement] = {}
    for family in _FAMILIES:
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                if i == j:
                    continue
                low, high = min(i, j), max(i, j)
                sign = 1 if i < j else -1
                products[(index[f"{family}_{i}"], index[f"{family}_{j}"])] = RingElement.basis(
                    index[f"{family}_{low}{high}"], sign
                )
        for i in (1, 2, 3):
            for pair in _PAIRS:
                if i in pair:
                    continue
                sign = _permutation_sign((i,) + pair)
                generator = index[f"{family}_{i}"]
                square = index[f"{family}_{pair[0]}{pair[1]}"]
                # degree 1 times degree 2 commutes
                products[(generator, square)] = RingElement.basis(top, sign)
                products[(square, generator)] = RingElement.basis(top, sign)

    return GradedRing(m=3, basis=basis, products=products, unit=0, name="T^3 # T^3")


def vw_images(genus2: GradedRing) -> dict[str, RingElement]:
    """Images of the canonical <632> generators V_i and classes W_S."""
    e = genus2.element
    v = {i: e(f"a_{i}") - e(f"b_{i}") for i in (1, 2, 3)}
    return {
        "V_1": v[1],
        "V_2": v[2],
        "V_3": v[3],
        "W_12": e("a_3"),
        "W_13": e("b_2"),
        "W_23": e("a_1"),
        "W_1": e("b_23"),
        "W_2": e("a_13"),
        "W_3": e("b_12"),
        "W_∅": e("tau"),
    }


def _image_map(canonical: GradedRing, genus2: GradedRing) -> list[RingElement]:
    """Image of every canonical basis class, V_S as the product of its V_i."""
    images = vw_images(genus2)
    mapped: list[RingElement] = []
    for b in canonical.basis:
        if b.kind == "W":
            mapped.append(images[b.name])
            continue
        value = RingElement.basis(genus2.unit)
        for i in b.index_set:
            value = genus2.multiply(value, images[f"V_{i}"])
        mapped.append(value)
    return mapped


@dataclass(frozen=True)
class ExoticProduct:
    """A product in the true ring that differs from the canonical model."""

    left: str
    right: str
    value: RingElement
    canonical: RingElement
    text: str

    def describe(self) -> str:
        return self.text


def _to_rational(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def check_vw_iso() -> list[ExoticProduct]:
    """
    Verify the V/W relations on the images in T^3 # T^3 and list exotic products.

    Checked: the images form a basis; V-products match the canonical table;
    V_S * W_S' is +-delta_{S,S'} tau in complementary degrees; W_S * W_S' = 0
    in complementary degrees.

    Raises:
        ToolError: ISO_VIOLATION when any of these relations fails.
    """
    canonical, _ = build_canonical_ring(GENUS2_CODE)
    genus2 = build_genus2_ring()
    mapped = _image_map(canonical, genus2)
    size = canonical.dimension
    if size != genus2.dimension:
        raise create_iso_violation_error("dimensions differ")

    change = Matrix(
        size,
        size,
        lambda row, col: _to_rational(mapped[col].coefficients.get(row, Fraction(0))),
    )
    if change.rank() != size:
        raise create_iso_violation_error("images are linearly dependent")
    inverse = change.inv()

    def pull_back(x: RingElement) -> RingElement:
        coords = inverse * Matrix(
            size, 1, lambda row, _: _to_rational(x.coefficients.get(row, Fraction(0)))
        )
        return RingElement.from_dict(
            {i: Fraction(int(c.p), int(c.q)) for i, c in enumerate(coords) if c != 0}
        )

    names = [b.name for b in canonical.basis]
    top = canonical.indices_in_degree(canonical.m)[0]
    exotic: list[ExoticProduct] = []
    for i in range(size):
        for j in range(i, size):
            if canonical.unit in (i, j):
                continue
            actual = pull_back(genus2.multiply(mapped[i], mapped[j]))
            expected = canonical.product(i, j)
            left, right = canonical.basis[i], canonical.basis[j]
            complementary = left.degree + right.degree == canonical.m

            if left.kind == "V" and right.kind == "V" and actual != expected:
                raise create_iso_violation_error(
                    f"{names[i]}*{names[j]} = {canonical.format(actual)}"
                )
            if complementary and left.kind != right.kind:
                paired = left.index_set == right.index_set
                if paired and (actual.support() != {top} or abs(actual.coefficients[top]) != 1):
                    raise create_iso_violation_error(f"{names[i]}*{names[j]} is not +-W_∅")
                if not paired and not actual.is_zero():
                    raise create_iso_violation_error(f"{names[i]}*{names[j]} is not 0")
            if complementary and left.kind == right.kind == "W" and not actual.is_zero():
                raise create_iso_violation_error(f"{names[i]}*{names[j]} is not 0")

            if actual.support() != expected.support():
                exotic.append(
                    ExoticProduct(
                        left=names[i],
                        right=names[j],
                        value=actual,
                        canonical=expected,
                        text=(
                            f"{names[i]}*{names[j]} = {canonical.format(actual)}"
                            f" (canonical: {canonical.format(expected)})"
                        ),
                    )
                )

    logger.info(f"Genus-2 ring: {len(exotic)} exotic products")
    return exotic


@dataclass(frozen=True)
class OracleResult:
    """zcl of a code computed in its true cohomology ring."""

    ring_name: str
    zcl: int
    witness: tuple[str, ...]
    search: SearchResult


def oracle_zcl(code: GeneticCode, budget: Optional[int] = None) -> Optional[OracleResult]:
    """
    zcl in the true ring when it is known independently of the canonical
    model; only <632> (T^3 # T^3) is known. Searches the degree-one bars,
    which generate every zero divisor of degree one.
    """
    if code != GENUS2_CODE:
        return None
    ring = build_genus2_ring()
    generators = barred_generators(ring, degrees=(1,))
    names = [f"bar({b.name})" for b in ring.basis if b.degree == 1]
    result = find_longest_product(ring, generators, budget=budget)
    return OracleResult(
        ring_name=ring.name,
        zcl=result.length,
        witness=tuple(names[i] for i in result.witness),
        search=result,
    )
