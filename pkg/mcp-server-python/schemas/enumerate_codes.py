"""Pydantic schemas for the enumerate_codes tool."""

from __future__ import annotations

from typing import Optional

from pydantic import field_validator

from schemas.classification import CensusSummary, ClassificationRecord
from schemas.common import StrictIgnoreRequest, StrictResponse
from utils.enumeration import MIN_ENUMERATION_N


class EnumerateCodesRequest(StrictIgnoreRequest):
    """
    Request schema for enumerate_codes.

    ``classify`` verifies zcl certificates and adds the census summary;
    ``use_cache`` reads and writes the per-n CSV cache.
    """

    n: int
    classify: bool = False
    use_cache: bool = True
    threads: Optional[int] = None

    @field_validator("n")
    @classmethod
    def validate_n(cls, value: int) -> int:
        if value < MIN_ENUMERATION_N:
            raise ValueError(f"Invalid n: {value} is below minimum of {MIN_ENUMERATION_N}")
        return value

    @field_validator("threads")
    @classmethod
    def validate_threads(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError(f"Invalid threads: {value} must be positive")
        return value


class EnumerateCodesResponse(StrictResponse):
    """Every realizable code for n, in canonical order."""

    n: int
    count: int
    cached: bool
    records: list[ClassificationRecord]
    summary: Optional[CensusSummary] = None
