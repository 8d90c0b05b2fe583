"""
Canonical rational cohomology ring of a polygon space from its genetic code.

Basis: V_S in degree |S| and W_S in degree m - |S| for every subgee S, with
V_∅ the unit and W_∅ the orientation class. Products:

- V_S * V_T = (-1)^inv(S, T) V_{S+T} when S, T are disjoint and S + T is a
  subgee, inv counting pairs s in S, t in T with s > t; otherwise 0.
- V_i * W_S = (-1)^rho_i(S - i) W_{S - i} when i is in S, otherwise 0.
  V_T * W_S applies this for the elements of T from largest to smallest,
  which gives V_S * W_S = +W_∅.
- W_S * V_T follows by graded commutativity; every W * W product is 0.

The ring is the true cohomology ring when m >= 2s. Otherwise it is the model
without exotic products and conclusions drawn from it are flagged.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import combinations

from sympy import Matrix, Rational

from models.errors import create_disconnected_error
from models.genetic_code import GeneticCode
from models.poset import IndexSubset
from models.ring import BasisClass, GradedRing, RingElement, basis_triples
from utils.genetics import is_connected, subgee_counts, subgees

logger = logging.getLogger(__name__)


def rho(i: int, subset: IndexSubset) -> int:
    """Number of elements of ``subset`` greater than i."""
    return sum(1 for x in subset if x > i)


def shuffle_sign(first: IndexSubset, second: IndexSubset) -> int:
    """Sign of sorting the concatenation of two disjoint sets of odd-degree generators."""
    inversions = sum(1 for a in first for b in second if a > b)
    return -1 if inversions % 2 else 1


def _v_on_w_sign(factors: IndexSubset, target: IndexSubset) -> int:
    """Sign of V_T * W_S = +-W_{S - T} for T inside S, largest factor applied first."""
    sign = 1
    current = target
    for i in reversed(factors.elements):
        current = current.without(i)
        if rho(i, current) % 2:
            sign = -sign
    return sign


def _proper_splits(subset: IndexSubset):
    items = subset.elements
    for size in range(1, len(items)):
        for chosen in combinations(items, size):
            first = IndexSubset(chosen)
            yield first, IndexSubset(tuple(x for x in items if x not in chosen))


def _nonempty_subsets(subset: IndexSubset):
    items = subset.elements
    for size in range(1, len(items) + 1):
        for chosen in combinations(items, size):
            yield IndexSubset(chosen)


def build_canonical_ring(code: GeneticCode) -> tuple[GradedRing, bool]:
    """
    Canonical ring of ``code`` and whether it is exact (m >= 2s).

    Raises:
        ToolError: DISCONNECTED for the code of two disjoint tori.
    """
    if not is_connected(code):
        raise create_disconnected_error(code.label)

    m = code.m
    sets = subgees(code)
    classes = [BasisClass.v(s) for s in sets] + [BasisClass.w(s, m) for s in sets]
    classes.sort(key=lambda b: (b.degree, 0 if b.kind == "V" else 1, b.index_set.sort_key))
    basis = tuple(classes)
    v_index = {b.index_set: i for i, b in enumerate(basis) if b.kind == "V"}
    w_index = {b.index_set: i for i, b in enumerate(basis) if b.kind == "W"}

    products: dict[tuple[int, int], RingElement] = {}
    for union in sets:
        for first, second in _proper_splits(union):
            products[(v_index[first], v_index[second])] = RingElement.basis(
                v_index[union], shuffle_sign(first, second)
            )
    for target in sets:
        w_degree = m - len(target)
        for factors in _nonempty_subsets(target):
            sign = _v_on_w_sign(factors, target)
            result = w_index[IndexSubset(tuple(x for x in target if x not in factors))]
            products[(v_index[factors], w_index[target])] = RingElement.basis(result, sign)
            swap = -1 if (len(factors) * w_degree) % 2 else 1
            products[(w_index[target], v_index[factors])] = RingElement.basis(result, sign * swap)

    model_exact = m >= 2 * code.s
    ring = GradedRing(m=m, basis=basis, products=products, unit=0, name=f"<{code.label}>")
    logger.debug(
        f"Canonical ring of {code}: {ring.dimension} classes, "
        f"{len(products)} nonzero products, exact={model_exact}"
    )
    return ring, model_exact


def multiply(ring: GradedRing, x: RingElement, y: RingElement) -> RingElement:
    """Bilinear extension of the product table."""
    return ring.multiply(x, y)


def betti(code: GeneticCode) -> list[int]:
    """
    b_i = a_i + a_(m-i), a_k counting subgees of cardinality k.

    Raises:
        ToolError: DISCONNECTED for the code of two disjoint tori.
    """
    if not is_connected(code):
        raise create_disconnected_error(code.label)
    counts = subgee_counts(code)

    def a(k: int) -> int:
        return counts[k] if 0 <= k < len(counts) else 0

    return [a(i) + a(code.m - i) for i in range(code.m + 1)]


def _sympy(value: Fraction) -> Rational:
    return Rational(value.numerator, value.denominator)


def pairing_matrix(ring: GradedRing, degree: int) -> Matrix:
    """Coefficients of the top class in products H^degree x H^(m - degree)."""
    top = ring.indices_in_degree(ring.m)[0]
    rows = ring.indices_in_degree(degree)
    cols = ring.indices_in_degree(ring.m - degree)
    return Matrix(
        len(rows),
        len(cols),
        lambda a, b: _sympy(ring.product(rows[a], cols[b]).coefficients.get(top, Fraction(0))),
    )


def verify_poincare(ring: GradedRing) -> bool:
    """True when every pairing H^i x H^(m-i) -> H^m is square and invertible."""
    if len(ring.indices_in_degree(ring.m)) != 1:
        return False
    for degree in range(ring.m + 1):
        size = len(ring.indices_in_degree(degree))
        if size != len(ring.indices_in_degree(ring.m - degree)):
            return False
        if size and pairing_matrix(ring, degree).rank() != size:
            return False
    return True


def validate_ring(ring: GradedRing) -> list[str]:
    """
    Degree, graded-commutativity and associativity violations over basis
    pairs and triples; an empty list means the table is consistent.
    """
    violations: list[str] = []
    names = [b.name for b in ring.basis]
    size = ring.dimension

    for i in range(size):
        for j in range(size):
            product = ring.product(i, j)
            expected_degree = ring.degree(i) + ring.degree(j)
            if any(ring.degree(k) != expected_degree for k, _ in product.terms):
                violations.append(f"degree: {names[i]}*{names[j]} = {ring.format(product)}")
            if j < i:
                continue
            sign = -1 if (ring.degree(i) * ring.degree(j)) % 2 else 1
            if product != ring.product(j, i).scale(sign):
                violations.append(f"commutativity: {names[i]}*{names[j]}")

    for i, j, k in basis_triples(ring):
        left = ring.multiply(ring.product(i, j), RingElement.basis(k))
        right = ring.multiply(RingElement.basis(i), ring.product(j, k))
        if left != right:
            violations.append(f"associativity: ({names[i]}*{names[j]})*{names[k]}")

    if violations:
        logger.warning(f"Ring {ring.name} has {len(violations)} violations")
    return violations


def _rational_text(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def ring_to_json(ring: GradedRing) -> dict:
    """Ring dump: m, basis (kind, set, degree) and [i, j, [[k, "p/q"], ...]] products."""
    return {
        "name": ring.name,
        "m": ring.m,
        "basis": [
            {
                "name": b.name,
                "kind": b.kind,
                "set": list(b.index_set.elements) if b.index_set is not None else None,
                "degree": b.degree,
            }
            for b in ring.basis
        ],
        "products": [
            [i, j, [[k, _rational_text(c)] for k, c in value.terms]]
            for (i, j), value in sorted(ring.products.items())
        ],
    }
