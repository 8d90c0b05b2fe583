"""Pydantic records for zcl bounds, per-code classification and census summaries."""

from __future__ import annotations

from typing import Optional

from pydantic import Field, model_validator

from schemas.common import StrictResponse


class ZclBounds(StrictResponse):
    """zcl interval of a code together with the statistic and certificate behind it."""

    k0: int
    lower: int
    upper: int
    exact: Optional[int] = None
    model_exact: bool
    certificate: Optional[str] = None

    @model_validator(mode="after")
    def check_interval(self) -> "ZclBounds":
        if self.lower > self.upper:
            raise ValueError(f"zcl lower bound {self.lower} exceeds upper bound {self.upper}")
        if self.exact is not None and not self.lower <= self.exact <= self.upper:
            raise ValueError(f"exact zcl {self.exact} outside [{self.lower}, {self.upper}]")
        return self


class ClassificationRecord(StrictResponse):
    """One census row. zcl and TC fields are None for the disconnected code."""

    n: int
    m: int
    s: int
    code: str
    gees: list[str]
    subgee_counts: list[int]
    k0: int
    zcl_lower: Optional[int] = None
    zcl_upper: Optional[int] = None
    zcl_exact: Optional[int] = None
    tc_lower: Optional[int] = None
    tc_upper: Optional[int] = None
    model_exact: bool
    connected: bool
    special_case: Optional[str] = None

    @model_validator(mode="after")
    def check_bounds(self) -> "ClassificationRecord":
        if self.zcl_lower is not None and self.zcl_upper is not None:
            if self.zcl_lower > self.zcl_upper:
                raise ValueError("zcl_lower exceeds zcl_upper")
            if self.tc_lower != self.zcl_lower + 1:
                raise ValueError("tc_lower must equal zcl_lower + 1")
        if self.tc_upper is not None and self.tc_upper != 2 * self.n - 5:
            raise ValueError("tc_upper must equal 2n - 5")
        if self.model_exact != (self.m >= 2 * self.s):
            raise ValueError("model_exact must equal m >= 2s")
        return self


class GeeSizeSummary(StrictResponse):
    """Codes whose largest gee has size s, split by how [t] = [min(2s, m)] is reached."""

    s: int
    t: int
    count: int
    self_pair: int
    distinct_pair_only: int
    neither: int


class CensusSummary(StrictResponse):
    """Counts over every realizable code for one n."""

    n: int
    total: int
    disconnected: int
    special: int
    model_exact: int
    by_s: list[GeeSizeSummary] = Field(default_factory=list)
    zcl_lower_histogram: dict[str, int] = Field(default_factory=dict)

    def zcl_lower_at_least(self, value: int) -> int:
        return sum(count for key, count in self.zcl_lower_histogram.items() if int(key) >= value)
