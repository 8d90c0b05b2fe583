"""Pydantic schemas for the realize tool."""

from __future__ import annotations

from pydantic import field_validator

from schemas.common import StrictIgnoreRequest, StrictResponse, validate_optional_non_empty_str


class RealizeRequest(StrictIgnoreRequest):
    """Request schema for realize; ``gees`` reads ``code`` as gee notation."""

    code: str
    n: int
    gees: bool = False

    @field_validator("code")
    @classmethod
    def validate_code(cls, value: str) -> str:
        return validate_optional_non_empty_str(value, "code")

    @field_validator("n")
    @classmethod
    def validate_n(cls, value: int) -> int:
        if value < 3:
            raise ValueError(f"Invalid n: {value} is below minimum of 3")
        return value


class RealizeResponse(StrictResponse):
    """Integer witness for a code and the result of recomputing its code."""

    code: str
    lengths: list[str]
    slack: str
    round_trip: bool
