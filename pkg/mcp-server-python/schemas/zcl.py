"""Pydantic schemas for the zcl tool."""

from __future__ import annotations

from typing import Optional

from pydantic import Field, field_validator

from schemas.analyze import OracleAnnotation
from schemas.classification import ZclBounds
from schemas.common import BudgetMixin, CodeInputMixin, StrictIgnoreRequest, StrictResponse


class ZclRequest(CodeInputMixin, BudgetMixin, StrictIgnoreRequest):
    """
    Request schema for zcl.

    ``search`` also runs the longest-product search over the barred classes
    of the canonical ring (degree-one bars only with ``degree_one``), capped
    at ``max_len`` factors.
    """

    verify: Optional[bool] = None
    search: bool = False
    degree_one: bool = False
    max_len: Optional[int] = None

    @field_validator("max_len")
    @classmethod
    def validate_max_len(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError(f"Invalid max_len: {value} must be positive")
        return value


class SearchSummary(StrictResponse):
    """Longest nonzero product of barred classes found by the search."""

    length: int
    witness: list[str]
    generators: int
    states: int


class ZclResponse(StrictResponse):
    code: str
    bounds: ZclBounds
    tc_lower: int
    tc_upper: int
    search: Optional[SearchSummary] = None
    oracle: Optional[OracleAnnotation] = None
    warnings: list[str] = Field(default_factory=list)
