"""Pydantic schemas for the verify_tables tool."""

from __future__ import annotations

from typing import Optional

from pydantic import field_validator

from schemas.common import StrictIgnoreRequest, StrictResponse


class VerifyTablesRequest(StrictIgnoreRequest):
    """Request schema for verify_tables; ``full`` adds the n = 8 census."""

    full: bool = False
    threads: Optional[int] = None

    @field_validator("threads")
    @classmethod
    def validate_threads(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError(f"Invalid threads: {value} must be positive")
        return value


class CheckItem(StrictResponse):
    """One reproduced value."""

    group: str
    name: str
    expected: str
    actual: str
    passed: bool


class VerifyTablesResponse(StrictResponse):
    items: list[CheckItem]
    passed: int
    failed: int
    all_passed: bool
