"""Sparse elements of the tensor square R ⊗ R of a graded ring."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Union

Pair = tuple[int, int]
Coefficient = Union[int, Fraction]


@dataclass(frozen=True)
class TensorElement:
    """Rational combination of basis tensors e_i ⊗ e_j, zero terms dropped, sorted."""

    terms: tuple[tuple[Pair, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, coefficients: Mapping[Pair, Coefficient]) -> "TensorElement":
        return cls(tuple(sorted((p, Fraction(c)) for p, c in coefficients.items() if c != 0)))

    @classmethod
    def pure(cls, left: int, right: int, coefficient: Coefficient = 1) -> "TensorElement":
        return cls.from_dict({(left, right): coefficient})

    @property
    def coefficients(self) -> dict[Pair, Fraction]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = self.coefficients
        for p, c in other.terms:
            out[p] = out.get(p, Fraction(0)) + c
        return TensorElement.from_dict(out)

    def __neg__(self) -> "TensorElement":
        return TensorElement(tuple((p, -c) for p, c in self.terms))

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def scale(self, factor: Coefficient) -> "TensorElement":
        return TensorElement.from_dict({p: c * factor for p, c in self.terms})

    def normalized(self) -> "TensorElement":
        """Scalar multiple with leading coefficient 1; zero stays zero."""
        if not self.terms:
            return self
        return self.scale(1 / self.terms[0][1])


TENSOR_ZERO = TensorElement()
