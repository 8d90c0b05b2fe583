"""
Length vectors and genetic codes of planar polygon spaces.

A genetic code lists the genes of a length vector: the maximal short subsets
of [n] containing n. Removing n from a gene gives a gee; subsets dominated by
some gee are subgees. Both types are immutable and stored canonically, so two
codes compare equal exactly when they have the same genes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Union

from models.errors import create_not_antichain_error, create_validation_error
from models.poset import IndexSubset, dominates, down_closure, mask_lower_covers

LengthValue = Union[int, str, Fraction]


def _to_fraction(value: LengthValue) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise create_validation_error(
            f"Lengths must be exact integers or fractions, got {type(value).__name__} {value!r}"
        )
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise create_validation_error(f"Invalid length {value!r}: {e}") from e


@dataclass(frozen=True)
class LengthVector:
    """Nondecreasing positive rational side lengths l_1 <= ... <= l_n, n >= 3."""

    lengths: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(_to_fraction(x) for x in self.lengths)
        if len(values) < 3:
            raise create_validation_error(f"A polygon needs at least 3 sides, got {len(values)}")
        if any(x <= 0 for x in values):
            raise create_validation_error("All side lengths must be positive")
        if any(a > b for a, b in zip(values, values[1:])):
            raise create_validation_error("Side lengths must be sorted nondecreasing")
        object.__setattr__(self, "lengths", values)

    @classmethod
    def of(cls, *values: LengthValue) -> "LengthVector":
        return cls(tuple(values))

    @classmethod
    def sorted_from(cls, values: Iterable[LengthValue]) -> "LengthVector":
        """Build a vector from unsorted lengths."""
        return cls(tuple(sorted(_to_fraction(x) for x in values)))

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def total(self) -> Fraction:
        return sum(self.lengths, Fraction(0))

    def sum_of(self, subset: IndexSubset) -> Fraction:
        return sum((self.lengths[i - 1] for i in subset), Fraction(0))

    def as_strings(self) -> list[str]:
        """Exact "p/q" (or integer) renderings, one per side."""
        return [str(x) for x in self.lengths]

    def __str__(self) -> str:
        return ",".join(self.as_strings())


def gene_key(gene: IndexSubset) -> tuple[int, ...]:
    """Sort key of a gene: its elements in descending order."""
    return tuple(reversed(gene.elements))


@dataclass(frozen=True)
class GeneticCode:
    """
    Antichain of genes for an n-gon space.

    Every gene contains n and lies in [n]; no gene dominates another. Genes
    are kept sorted by ``gene_key`` so that "8421" comes before "843".
    """

    n: int
    genes: tuple[IndexSubset, ...]

    def __post_init__(self):
        if self.n < 3:
            raise create_validation_error(f"n must be at least 3, got {self.n}")
        genes = tuple(
            sorted(
                {g if isinstance(g, IndexSubset) else IndexSubset(tuple(g)) for g in self.genes},
                key=gene_key,
            )
        )
        if not genes:
            raise create_validation_error("A genetic code needs at least one gene")
        for gene in genes:
            if self.n not in gene:
                raise create_validation_error(f"Gene {gene.label} does not contain n = {self.n}")
            if gene.elements[-1] > self.n:
                raise create_validation_error(f"Gene {gene.label} has elements beyond n = {self.n}")
        for first, second in combinations(genes, 2):
            if dominates(first, second) or dominates(second, first):
                raise create_not_antichain_error(first.label, second.label)
        object.__setattr__(self, "genes", genes)

    @classmethod
    def from_gees(cls, n: int, gees: Iterable[IndexSubset]) -> "GeneticCode":
        return cls(n, tuple(g.with_element(n) for g in gees))

    @property
    def gees(self) -> tuple[IndexSubset, ...]:
        return tuple(g.without(self.n) for g in self.genes)

    @property
    def s(self) -> int:
        """Largest gee cardinality."""
        return max(len(g) for g in self.gees)

    @property
    def m(self) -> int:
        """Dimension n - 3 of the polygon space."""
        return self.n - 3

    @property
    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(gene_key(g) for g in self.genes)

    @property
    def label(self) -> str:
        return ",".join(g.label for g in self.genes)

    def short_family(self) -> frozenset[int]:
        """Masks of the subgees: every subset of [n-1] dominated by a gee."""
        return frozenset(down_closure(g.mask for g in self.gees))

    def minimal_long(self) -> tuple[int, ...]:
        """
        Masks of the minimal A in [n-1] with A ∪ {n} long.

        These are the minimal subsets outside ``short_family()``.
        """
        family = self.short_family()
        minimal = [
            mask
            for mask in range(1 << (self.n - 1))
            if mask not in family and all(c in family for c in mask_lower_covers(mask))
        ]
        return tuple(minimal)

    def __str__(self) -> str:
        return f"<{self.label}>"
