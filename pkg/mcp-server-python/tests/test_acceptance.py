"""
Tests for the table reproduction suite and the verify_tables tool.
"""

from unittest.mock import patch

import pytest

from config import config
from models.errors import create_size_limit_error
from tools.verify_tables import verify_tables
from utils.acceptance import (
    _Report,
    check_allowable_genes,
    check_equilateral,
    check_example_ring,
    check_genus2,
    check_special_cases,
    run_acceptance,
)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    monkeypatch.setattr(config, "cache_dir", tmp_path)
    return tmp_path


def _run(check):
    report = _Report()
    report.run("group", check)
    return report.items


class TestGroups:
    """Each non-census group passes on its own."""

    @pytest.mark.parametrize(
        "check",
        [check_example_ring, check_special_cases, check_equilateral, check_allowable_genes],
    )
    def test_group_passes(self, check):
        items = _run(check)
        assert items
        assert all(item.passed for item in items), [i for i in items if not i.passed]

    def test_genus2_group(self):
        items = _run(check_genus2)
        assert {item.name for item in items} >= {"oracle zcl", "canonical zcl interval"}
        assert all(item.passed for item in items)


class TestReport:
    """Failures are recorded, not raised."""

    def test_mismatch_recorded(self):
        report = _Report()
        assert report.expect("g", "value", 1, 2) is False
        item = report.items[0]
        assert (item.expected, item.actual, item.passed) == ("1", "2", False)

    def test_tool_error_becomes_failed_item(self):
        def failing(report, group):
            raise create_size_limit_error("Enumeration", 10, 9)

        items = _run(failing)
        assert len(items) == 1
        assert items[0].name == "completed"
        assert items[0].actual.startswith("SIZE_LIMIT")

    def test_census_failure_does_not_stop_other_groups(self):
        with patch("utils.acceptance.load_census", side_effect=create_size_limit_error("Enumeration", 4, 3)):
            items = run_acceptance()
        census = [i for i in items if i.group.startswith("census")]
        assert len(census) == 4
        assert not any(i.passed for i in census)
        assert all(i.passed for i in items if not i.group.startswith("census"))


class TestVerifyTablesTool:
    """Handler shape."""

    def test_counts(self):
        with patch("utils.acceptance.load_census", side_effect=create_size_limit_error("Enumeration", 4, 3)):
            result = verify_tables({})
        assert result["failed"] == 4
        assert result["passed"] == len(result["items"]) - 4
        assert result["all_passed"] is False

    def test_invalid_threads(self):
        assert verify_tables({"threads": 0})["error"]["code"] == "VALIDATION_ERROR"

    @pytest.mark.slow
    def test_default_run_passes(self, cache_dir):
        result = verify_tables({})
        assert result["all_passed"] is True, [i for i in result["items"] if not i["passed"]]

    @pytest.mark.slow
    def test_full_run_passes(self, cache_dir):
        result = verify_tables({"full": True, "threads": 2})
        assert result["all_passed"] is True
        assert any(i["group"] == "census n=8" for i in result["items"])
