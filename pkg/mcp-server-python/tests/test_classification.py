"""
Tests for classification records and census summaries.
"""

import pytest
from pydantic import ValidationError

from schemas.classification import ClassificationRecord
from utils.classification import build_record, classify, classify_all, summarize
from utils.code_notation import parse_code
from utils.enumeration import enumerate_codes
from utils.genetics import disconnected_code
from utils.zcl_bounds import zcl_bounds


class TestRecords:
    """Tests for build_record and classify."""

    def test_example_record(self):
        record = classify(parse_code("9421,95", 9))
        assert record.code == "9421,95"
        assert record.gees == ["421", "5"]
        assert record.subgee_counts == [1, 5, 5, 2]
        assert (record.n, record.m, record.s, record.k0) == (9, 6, 3, 4)
        assert (record.zcl_lower, record.zcl_upper, record.zcl_exact) == (6, 8, 6)
        assert (record.tc_lower, record.tc_upper) == (7, 13)
        assert record.model_exact is True
        assert record.connected is True
        assert record.special_case is None

    def test_disconnected_record(self):
        record = classify(disconnected_code(7))
        assert record.connected is False
        assert record.zcl_lower is None
        assert record.tc_lower is None
        assert record.k0 == 4

    def test_special_record(self):
        record = classify(parse_code("821", 8), verify=False)
        assert record.special_case == "S^3 x T^2"

    def test_build_record_uses_given_bounds(self):
        code = parse_code("632", 6)
        record = build_record(code, zcl_bounds(code, verify=False))
        assert (record.zcl_lower, record.zcl_upper, record.zcl_exact) == (5, 6, None)
        assert (record.tc_lower, record.tc_upper) == (6, 7)

    def test_record_rejects_inconsistent_tc(self):
        with pytest.raises(ValidationError):
            ClassificationRecord(
                n=6, m=3, s=2, code="632", gees=["32"], subgee_counts=[1, 3, 3], k0=3,
                zcl_lower=5, zcl_upper=6, tc_lower=7, tc_upper=7,
                model_exact=False, connected=True,
            )

    def test_record_rejects_wrong_model_exact(self):
        with pytest.raises(ValidationError):
            ClassificationRecord(
                n=6, m=3, s=2, code="632", gees=["32"], subgee_counts=[1, 3, 3], k0=3,
                model_exact=True, connected=False,
            )


class TestSummaries:
    """Tests for summarize."""

    def test_n6_summary_is_consistent(self):
        codes = enumerate_codes(6, workers=1)
        records = classify_all(codes, workers=1, verify=False)
        summary = summarize(6, codes, records)
        assert summary.total == 20
        assert summary.disconnected == 1
        assert summary.disconnected + summary.special + sum(r.count for r in summary.by_s) == 20
        for row in summary.by_s:
            assert row.self_pair + row.distinct_pair_only + row.neither == row.count
            assert row.t == min(2 * row.s, 3)
        assert sum(summary.zcl_lower_histogram.values()) == 19

    def test_histogram_threshold(self):
        codes = enumerate_codes(5, workers=1)
        records = classify_all(codes, workers=1, verify=False)
        summary = summarize(5, codes, records)
        assert summary.zcl_lower_at_least(0) == summary.total - summary.disconnected

    @pytest.mark.slow
    def test_n7_model_exact(self):
        codes = enumerate_codes(7, workers=1)
        records = classify_all(codes, workers=1, verify=True)
        summary = summarize(7, codes, records)
        assert summary.total == 134
        assert summary.model_exact == 64

    @pytest.mark.slow
    def test_n8_census(self):
        codes = enumerate_codes(8)
        records = classify_all(codes, verify=False)
        summary = summarize(8, codes, records)
        assert summary.total == 2469
        assert summary.disconnected == 1
        assert summary.special == 5
        by_s = {row.s: row for row in summary.by_s}
        assert by_s[1].count == 6
        assert (by_s[2].count, by_s[2].self_pair, by_s[2].distinct_pair_only, by_s[2].neither) == (
            119, 84, 10, 25,
        )
        assert (by_s[3].count, by_s[3].self_pair, by_s[3].distinct_pair_only, by_s[3].neither) == (
            1570, 930, 502, 138,
        )
        assert by_s[4].count == 768
        assert summary.zcl_lower_at_least(7) == 2200
        split_total = sum(row.count for row in summary.by_s)
        assert split_total + summary.special + summary.disconnected == 2469
        reaching_seven = by_s[3].self_pair + by_s[3].distinct_pair_only + by_s[4].count
        assert summary.zcl_lower_at_least(7) == reaching_seven
