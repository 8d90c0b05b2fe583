"""
Finite graded-commutative algebras over the rationals.

A ring is a list of homogeneous basis classes plus a sparse product table
mapping a pair of basis indices to the rational combination of basis classes
it equals. Missing pairs multiply to zero. Elements are sparse maps from basis
index to Fraction with zero coefficients dropped.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Union

from models.poset import IndexSubset

Terms = tuple[tuple[int, Fraction], ...]
Coefficient = Union[int, Fraction]


def _canonical(coefficients: Mapping[int, Coefficient]) -> Terms:
    return tuple(sorted((i, Fraction(c)) for i, c in coefficients.items() if c != 0))


@dataclass(frozen=True)
class RingElement:
    """Sparse rational combination of basis classes."""

    terms: Terms = ()

    @classmethod
    def from_dict(cls, coefficients: Mapping[int, Coefficient]) -> "RingElement":
        return cls(_canonical(coefficients))

    @classmethod
    def basis(cls, index: int, coefficient: Coefficient = 1) -> "RingElement":
        return cls.from_dict({index: coefficient})

    @property
    def coefficients(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.terms)

    def __add__(self, other: "RingElement") -> "RingElement":
        out = self.coefficients
        for i, c in other.terms:
            out[i] = out.get(i, Fraction(0)) + c
        return RingElement.from_dict(out)

    def __neg__(self) -> "RingElement":
        return RingElement(tuple((i, -c) for i, c in self.terms))

    def __sub__(self, other: "RingElement") -> "RingElement":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "RingElement":
        return RingElement.from_dict({i: c * factor for i, c in self.terms})


ZERO = RingElement()


@dataclass(frozen=True)
class BasisClass:
    """
    Homogeneous basis class.

    Canonical rings use kind "V" or "W" with an index set; other rings use
    free-form names with ``index_set`` left empty.
    """

    name: str
    degree: int
    kind: str = ""
    index_set: Optional[IndexSubset] = None

    @classmethod
    def v(cls, subset: IndexSubset) -> "BasisClass":
        return cls(name=f"V_{subset.subscript}", degree=len(subset), kind="V", index_set=subset)

    @classmethod
    def w(cls, subset: IndexSubset, m: int) -> "BasisClass":
        return cls(name=f"W_{subset.subscript}", degree=m - len(subset), kind="W", index_set=subset)


@dataclass(frozen=True, eq=False)
class GradedRing:
    """
    Graded-commutative ring with top degree ``m`` and unit at ``unit``.

    ``products`` holds only the nonzero products of basis pairs.
    """

    m: int
    basis: tuple[BasisClass, ...]
    products: Mapping[tuple[int, int], RingElement] = field(default_factory=dict)
    unit: int = 0
    name: str = ""

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def degree(self, index: int) -> int:
        return self.basis[index].degree

    def indices_in_degree(self, degree: int) -> list[int]:
        return [i for i, b in enumerate(self.basis) if b.degree == degree]

    def betti(self) -> list[int]:
        """Dimension of each graded piece, degrees 0..m."""
        counts = [0] * (self.m + 1)
        for b in self.basis:
            counts[b.degree] += 1
        return counts

    def index_of(self, name: str) -> int:
        for i, b in enumerate(self.basis):
            if b.name == name:
                return i
        raise KeyError(f"No basis class named {name!r}")

    def element(self, *names: str) -> RingElement:
        """Sum of the named basis classes."""
        out = ZERO
        for name in names:
            out = out + RingElement.basis(self.index_of(name))
        return out

    def product(self, i: int, j: int) -> RingElement:
        if i == self.unit:
            return RingElement.basis(j)
        if j == self.unit:
            return RingElement.basis(i)
        return self.products.get((i, j), ZERO)

    def multiply(self, x: RingElement, y: RingElement) -> RingElement:
        out: dict[int, Fraction] = {}
        for i, a in x.terms:
            for j, b in y.terms:
                for k, c in self.product(i, j).terms:
                    out[k] = out.get(k, Fraction(0)) + a * b * c
        return RingElement.from_dict(out)

    def format(self, x: RingElement) -> str:
        """Readable rendering in basis order, such as "V_23 - W_1"."""
        if x.is_zero():
            return "0"
        parts = []
        for i, c in x.terms:
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            body = self.basis[i].name if magnitude == 1 else f"{magnitude}*{self.basis[i].name}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def without(self, index: int) -> "GradedRing":
        """Copy with one basis class and every product touching it removed."""
        if index == self.unit:
            raise ValueError("Cannot remove the unit")

        def shift(i: int) -> int:
            return i - 1 if i > index else i

        products = {}
        for (i, j), value in self.products.items():
            if index in (i, j):
                continue
            kept = {shift(k): c for k, c in value.terms if k != index}
            if kept:
                products[(shift(i), shift(j))] = RingElement.from_dict(kept)
        basis = tuple(b for i, b in enumerate(self.basis) if i != index)
        return GradedRing(
            m=self.m, basis=basis, products=products, unit=shift(self.unit), name=self.name
        )


def basis_triples(ring: GradedRing) -> Iterable[tuple[int, int, int]]:
    size = ring.dimension
    for i in range(size):
        for j in range(size):
            if ring.degree(i) + ring.degree(j) > ring.m:
                continue
            for k in range(size):
                if ring.degree(i) + ring.degree(j) + ring.degree(k) <= ring.m:
                    yield i, j, k
