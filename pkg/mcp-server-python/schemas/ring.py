"""Pydantic schemas for the ring tool."""

from __future__ import annotations

from typing import Optional

from pydantic import Field

from schemas.common import CodeInputMixin, StrictIgnoreRequest, StrictResponse


class RingRequest(CodeInputMixin, StrictIgnoreRequest):
    """Request schema for ring. ``check`` adds the associativity/commutativity sweep."""

    check: bool = False


class BasisEntry(StrictResponse):
    name: str
    kind: str
    set: Optional[list[int]] = None
    degree: int


class RingResponse(StrictResponse):
    """
    Ring dump: basis classes in index order and products as
    [i, j, [[k, "p/q"], ...]] over the nonzero entries of the table.
    """

    name: str
    m: int
    model_exact: bool
    betti: list[int]
    basis: list[BasisEntry]
    products: list[tuple[int, int, list[tuple[int, str]]]]
    poincare: Optional[bool] = None
    violations: Optional[list[str]] = None
    exotic_products: list[str] = Field(default_factory=list)
