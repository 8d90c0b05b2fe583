"""Pydantic schemas for the analyze tool."""

from __future__ import annotations

from typing import Optional

from pydantic import Field

from schemas.classification import ClassificationRecord
from schemas.common import BudgetMixin, CodeInputMixin, StrictIgnoreRequest, StrictResponse


class AnalyzeRequest(CodeInputMixin, BudgetMixin, StrictIgnoreRequest):
    """Request schema for analyze. ``verify`` defaults to POLYGONZCL_VERIFY_CERTIFICATES."""

    verify: Optional[bool] = None


class OracleAnnotation(StrictResponse):
    """zcl computed in the true cohomology ring, when it is known."""

    ring: str
    zcl: int
    witness: list[str]
    tc_lower: int
    tc_upper: int
    states: int


class AnalyzeResponse(StrictResponse):
    """Full report for one polygon space."""

    record: ClassificationRecord
    lengths: list[str]
    lengths_given: bool
    betti: Optional[list[int]] = None
    certificate: Optional[str] = None
    warnings: list[str] = Field(default_factory=list)
    oracle: Optional[OracleAnnotation] = None
