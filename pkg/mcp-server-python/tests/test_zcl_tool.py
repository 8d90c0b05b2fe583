"""
Tests for the zcl tool handler.
"""

from unittest.mock import patch

from models.errors import create_certificate_failed_error
from tools.analyze import INEXACT_WARNING
from tools.zcl import zcl


class TestZclBoundsResponse:
    """Bounds without search."""

    def test_example_code(self):
        result = zcl({"code": "9421,95", "n": 9})
        assert result["code"] == "9421,95"
        bounds = result["bounds"]
        assert (bounds["k0"], bounds["lower"], bounds["upper"], bounds["exact"]) == (4, 6, 8, 6)
        assert bounds["certificate"].startswith("bar(V_3) * bar(W_3)")
        assert (result["tc_lower"], result["tc_upper"]) == (7, 13)
        assert result["search"] is None
        assert result["oracle"] is None
        assert result["warnings"] == []

    def test_inexact_model(self):
        result = zcl({"code": "632", "n": 6})
        assert result["bounds"]["exact"] is None
        assert (result["bounds"]["lower"], result["bounds"]["upper"]) == (5, 6)
        assert result["warnings"] == [INEXACT_WARNING]
        assert result["oracle"]["zcl"] == 5

    def test_without_verification(self):
        result = zcl({"code": "9421,95", "n": 9, "verify": False})
        assert result["bounds"]["certificate"] is None


class TestZclSearch:
    """Longest-product search over barred classes."""

    def test_search_matches_exact_value(self):
        result = zcl({"lengths": "1,1,1,1,1", "search": True})
        assert result["bounds"]["exact"] == 4
        search = result["search"]
        assert search["length"] == 4
        assert len(search["witness"]) == 4
        assert all(name.startswith("bar(") for name in search["witness"])
        assert search["states"] > 0
        assert result["warnings"] == []

    def test_degree_one_restriction(self):
        result = zcl({"code": "632", "n": 6, "search": True, "degree_one": True})
        search = result["search"]
        assert search["generators"] == 6
        assert 0 < search["length"] <= 6

    def test_max_len_caps_the_search(self):
        result = zcl({"lengths": "1,1,1,1,1", "search": True, "max_len": 2})
        assert result["search"]["length"] == 2
        # a capped search is not compared with the lower bound
        assert result["warnings"] == []

    def test_budget_exceeded(self):
        result = zcl({"lengths": "1,1,1,1,1", "search": True, "budget": 1})
        assert result["error"]["code"] == "BUDGET_EXCEEDED"


class TestZclErrors:
    """Error responses."""

    def test_disconnected(self):
        assert zcl({"code": "854321", "n": 8})["error"]["code"] == "DISCONNECTED"

    def test_invalid_max_len(self):
        result = zcl({"code": "632", "n": 6, "max_len": 0})
        assert result["error"]["code"] == "VALIDATION_ERROR"

    def test_certificate_failure_reported(self):
        with patch("tools.zcl.zcl_bounds", side_effect=create_certificate_failed_error("632", 3)):
            result = zcl({"code": "632", "n": 6})
        assert result["error"]["code"] == "CERTIFICATE_FAILED"

    def test_unexpected_exception(self):
        with patch("tools.zcl.build_canonical_ring", side_effect=KeyError("V_9")):
            result = zcl({"code": "632", "n": 6})
        assert result["error"]["code"] == "INTERNAL_ERROR"
