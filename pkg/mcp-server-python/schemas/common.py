"""Shared schema primitives for MCP tool request/response models."""

from __future__ import annotations

from typing import Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator


def validate_optional_non_empty_str(value: Optional[str], field_name: str) -> Optional[str]:
    """Validate optional string fields that cannot be empty/whitespace."""
    if value is None:
        return None
    if not value.strip():
        raise ValueError(f"Invalid {field_name}: cannot be empty")
    return value


class StrictIgnoreRequest(BaseModel):
    """Request base with strict typing and ignored unknown fields."""

    model_config = ConfigDict(extra="ignore", strict=True)


class StrictResponse(BaseModel):
    """Response/result base with strict typing and forbidden unknown fields."""

    model_config = ConfigDict(extra="forbid")


class CodeInputMixin(BaseModel):
    """
    Names one polygon space: ``lengths`` alone, or ``code`` with ``n``.

    ``gees`` switches ``code`` to gee notation (genes without n).
    """

    lengths: Optional[str] = None
    code: Optional[str] = None
    n: Optional[int] = None
    gees: bool = False

    @field_validator("lengths")
    @classmethod
    def validate_lengths(cls, value: Optional[str]) -> Optional[str]:
        return validate_optional_non_empty_str(value, "lengths")

    @field_validator("code")
    @classmethod
    def validate_code(cls, value: Optional[str]) -> Optional[str]:
        return validate_optional_non_empty_str(value, "code")

    @field_validator("n")
    @classmethod
    def validate_n(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 3:
            raise ValueError(f"Invalid n: {value} is below minimum of 3")
        return value

    @model_validator(mode="after")
    def check_exactly_one(self):
        if (self.lengths is None) == (self.code is None):
            raise ValueError("Provide exactly one of lengths or code (with n)")
        if self.code is not None and self.n is None:
            raise ValueError("Invalid n: required with a genetic code")
        if self.lengths is not None and self.n is not None:
            raise ValueError("n is implied by lengths; do not pass both")
        return self


class BudgetMixin(BaseModel):
    """Optional cap on the partial products a zcl search may visit."""

    budget: Optional[int] = None

    @field_validator("budget")
    @classmethod
    def validate_budget(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value < 1:
            raise ValueError(f"Invalid budget: {value} must be positive")
        return value
