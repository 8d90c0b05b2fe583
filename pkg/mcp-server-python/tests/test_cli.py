"""
Tests for the click command-line interface.
"""

import json

import pytest
from click.testing import CliRunner

from cli import cli
from config import config


@pytest.fixture
def runner(tmp_path, monkeypatch):
    monkeypatch.setattr(config, "log_level", "ERROR")
    monkeypatch.setattr(config, "cache_dir", tmp_path / "cache")
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args), obj={})


class TestAnalyzeCommand:
    """analyze."""

    def test_report(self, runner):
        result = invoke(runner, "analyze", "--lengths", "1,1,1,3,3,4")
        assert result.exit_code == 0, result.output
        assert "code:        <632>" in result.output
        assert "zcl:         [5, 6]" in result.output
        assert "true ring:   T^3 # T^3 has zcl 5, TC in [6, 7]" in result.output
        assert "warning:" in result.output

    def test_json(self, runner):
        result = invoke(runner, "--json", "analyze", "--code", "9421,95", "--n", "9")
        assert result.exit_code == 0, result.output
        payload = json.loads(result.output)
        assert payload["record"]["zcl_exact"] == 6
        assert payload["betti"] == [1, 5, 5, 4, 5, 5, 1]

    def test_parse_error_exit_code(self, runner):
        result = invoke(runner, "analyze", "--code", "94x1", "--n", "9")
        assert result.exit_code == 2
        assert "Error [PARSE_ERROR]" in result.output

    def test_not_generic_exit_code(self, runner):
        assert invoke(runner, "analyze", "--lengths", "1,1,1,1").exit_code == 3

    def test_out_file(self, runner, tmp_path):
        out = tmp_path / "report.txt"
        result = invoke(runner, "--out", str(out), "analyze", "--code", "821", "--n", "8")
        assert result.exit_code == 0, result.output
        assert "family:      S^3 x T^2" in out.read_text()


class TestOtherCommands:
    """realize, ring, zcl and enumerate."""

    def test_realize(self, runner):
        result = invoke(runner, "realize", "--code", "8531", "--n", "8")
        assert result.exit_code == 0, result.output
        assert "round trip: ok" in result.output

    def test_realize_refused(self, runner):
        result = invoke(runner, "realize", "--code", "7531", "--n", "8", "--gees")
        assert result.exit_code == 3
        assert "NOT_REALIZABLE" in result.output

    def test_ring_check(self, runner):
        result = invoke(runner, "ring", "--code", "632", "--n", "6", "--check")
        assert result.exit_code == 0, result.output
        assert "betti: (1, 6, 6, 1)" in result.output
        assert "poincare duality: ok" in result.output
        assert "violations: 0" in result.output
        assert "exotic: W_12*W_23 = -W_2" in result.output

    def test_ring_disconnected(self, runner):
        assert invoke(runner, "ring", "--code", "854321", "--n", "8").exit_code == 3

    def test_zcl_search(self, runner):
        result = invoke(runner, "zcl", "--lengths", "1,1,1,1,1", "--search")
        assert result.exit_code == 0, result.output
        assert "zcl:         4 (exact)" in result.output
        assert "search:      4 factors" in result.output

    def test_zcl_budget_exit_code(self, runner):
        result = invoke(runner, "--budget", "1", "zcl", "--lengths", "1,1,1,1,1", "--search")
        assert result.exit_code == 4

    def test_enumerate_csv(self, runner):
        result = invoke(runner, "enumerate", "--n", "4", "--no-cache")
        assert result.exit_code == 0, result.output
        assert result.output.splitlines() == [
            "n,genes,s,k0,zcl_lower,zcl_upper,zcl_exact,connected",
            "4,4,0,0,1,2,1,True",
            "4,41,1,1,,,,False",
        ]

    def test_enumerate_classify_to_file(self, runner, tmp_path):
        out = tmp_path / "codes_n5.csv"
        result = invoke(runner, "--out", str(out), "enumerate", "--n", "5", "--classify")
        assert result.exit_code == 0, result.output
        assert len(out.read_text().splitlines()) == 7
        assert "n=5: 6 codes" in result.output

    def test_enumerate_below_minimum(self, runner):
        assert invoke(runner, "enumerate", "--n", "3").exit_code == 2

    def test_missing_required_option(self, runner):
        assert invoke(runner, "realize", "--code", "8531").exit_code == 2


@pytest.mark.slow
def test_verify_tables_command(runner):
    result = invoke(runner, "verify-tables")
    assert result.exit_code == 0, result.output
    assert result.output.strip().endswith("0 failed")
