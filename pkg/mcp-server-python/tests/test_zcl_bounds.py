"""
Tests for zcl and TC bounds from a genetic code.
"""

from unittest.mock import patch

import pytest
from pydantic import ValidationError

from config import config
from models.errors import ErrorCode, ToolError
from models.genetic_code import GeneticCode
from models.poset import IndexSubset
from models.tensor import TensorElement
from schemas.classification import ZclBounds
from utils.code_notation import parse_code
from utils.cohomology import build_canonical_ring
from utils.genetics import disconnected_code
from utils.zcl_bounds import lower_bound, tc_bounds, zcl_bounds
from utils.zero_divisors import Certificate, barred_generators, search_zcl


class TestLowerBound:
    """Tests for the parity rule."""

    @pytest.mark.parametrize(
        "k,m,expected",
        [(4, 6, 6), (3, 5, 5), (0, 5, 1), (4, 5, 5), (0, 2, 2), (3, 3, 5)],
    )
    def test_parity(self, k, m, expected):
        assert lower_bound(k, m) == expected


class TestZclBounds:
    """Tests for zcl_bounds."""

    def test_example_code(self):
        bounds = zcl_bounds(parse_code("9421,95", 9))
        assert bounds.k0 == 4
        assert bounds.lower == 6
        assert bounds.upper == 8
        assert bounds.exact == 6
        assert bounds.model_exact is True
        assert bounds.certificate is not None
        assert bounds.certificate.count("bar(") == 6

    def test_genus2_interval(self):
        bounds = zcl_bounds(parse_code("632", 6))
        assert (bounds.k0, bounds.lower, bounds.upper) == (3, 5, 6)
        assert bounds.exact is None
        assert bounds.model_exact is False

    @pytest.mark.parametrize(
        "label,lower,upper,exact",
        [
            ("8", 1, 2, 1),
            ("81", 3, 4, 3),
            ("821", 3, 6, 3),
            ("8321", 5, 8, None),
            ("84321", 5, 10, None),
        ],
    )
    def test_special_family(self, label, lower, upper, exact):
        bounds = zcl_bounds(parse_code(label, 8))
        assert (bounds.lower, bounds.upper, bounds.exact) == (lower, upper, exact)

    @pytest.mark.parametrize("n,m", [(5, 2), (7, 4), (9, 6)])
    def test_even_sphere(self, n, m):
        """One gene {n}: the space is S^m and bar(W_∅) squares to a nonzero class."""
        code = parse_code(str(n), n)
        assert code.m == m
        bounds = zcl_bounds(code, verify=True)
        assert (bounds.k0, bounds.lower, bounds.upper, bounds.exact) == (0, 2, 2, 2)
        assert bounds.certificate == "bar(W_∅) * bar(W_∅)"

    def test_even_sphere_search(self):
        code = parse_code("7", 7)
        ring, _ = build_canonical_ring(code)
        assert search_zcl(ring, barred_generators(ring)) == 2

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_equilateral_family(self, k):
        n = 2 * k + 1
        code = GeneticCode(n, (IndexSubset(tuple(range(k + 2, n + 1))),))
        assert zcl_bounds(code).exact == 2 * k

    def test_without_verification(self):
        bounds = zcl_bounds(parse_code("9421,95", 9), verify=False)
        assert bounds.certificate is None
        assert bounds.lower == 6

    def test_verification_follows_config(self):
        with patch.object(config, "verify_certificates", False):
            assert zcl_bounds(parse_code("632", 6)).certificate is None

    def test_disconnected(self):
        with pytest.raises(ToolError) as exc_info:
            zcl_bounds(disconnected_code(7))
        assert exc_info.value.code == ErrorCode.DISCONNECTED

    def test_vanishing_certificate(self):
        empty = IndexSubset()
        vanished = Certificate(
            value=TensorElement(), factors=("bar(W_∅)",), gees=(empty, empty), partition=(empty, empty)
        )
        with patch("utils.zcl_bounds.certificate_product", return_value=vanished):
            with pytest.raises(ToolError) as exc_info:
                zcl_bounds(parse_code("7", 7), verify=True)
        assert exc_info.value.code == ErrorCode.CERTIFICATE_FAILED


class TestTcBounds:
    """Tests for tc_bounds."""

    def test_example_code(self):
        code = parse_code("9421,95", 9)
        assert tc_bounds(code) == (7, 13)
        assert tc_bounds(code, zcl_bounds(code, verify=False)) == (7, 13)

    def test_genus2(self):
        assert tc_bounds(parse_code("632", 6)) == (6, 7)


class TestZclBoundsModel:
    """Tests for the ZclBounds record invariants."""

    def test_lower_above_upper_rejected(self):
        with pytest.raises(ValidationError):
            ZclBounds(k0=1, lower=5, upper=4, model_exact=False)

    def test_exact_outside_interval_rejected(self):
        with pytest.raises(ValidationError):
            ZclBounds(k0=1, lower=3, upper=4, exact=5, model_exact=True)
