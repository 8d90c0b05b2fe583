"""
Tests for the ring tool handler.
"""

from tools.ring import ring


class TestRingDump:
    """Successful ring dumps."""

    def test_example_code(self):
        result = ring({"code": "9421,95", "n": 9})
        assert result["m"] == 6
        assert result["model_exact"] is True
        assert result["betti"] == [1, 5, 5, 4, 5, 5, 1]
        assert len(result["basis"]) == sum(result["betti"])
        assert result["poincare"] is None
        assert result["violations"] is None
        assert result["exotic_products"] == []

    def test_basis_entries(self):
        basis = ring({"code": "9421,95", "n": 9})["basis"]
        by_name = {entry["name"]: entry for entry in basis}
        assert by_name["V_12"] == {"name": "V_12", "kind": "V", "set": [1, 2], "degree": 2}
        assert by_name["W_∅"]["degree"] == 6
        assert by_name["W_∅"]["kind"] == "W"

    def test_products_are_exact_rationals(self):
        products = ring({"code": "9421,95", "n": 9})["products"]
        assert products
        for i, j, terms in products:
            assert isinstance(i, int) and isinstance(j, int)
            for k, coefficient in terms:
                numerator, denominator = coefficient.split("/")
                assert int(denominator) > 0
                assert int(numerator) != 0

    def test_check_sweep(self):
        result = ring({"code": "821", "n": 8, "check": True})
        assert result["poincare"] is True
        assert result["violations"] == []

    def test_genus2_exotic_products(self):
        result = ring({"lengths": "1,1,1,3,3,4"})
        assert result["model_exact"] is False
        assert result["betti"] == [1, 6, 6, 1]
        assert any(text.startswith("W_12*W_23 = -W_2") for text in result["exotic_products"])


class TestRingErrors:
    """Error responses."""

    def test_disconnected(self):
        result = ring({"code": "854321", "n": 8})
        assert result["error"]["code"] == "DISCONNECTED"
        assert "854321" in result["error"]["message"]

    def test_missing_input(self):
        assert ring({})["error"]["code"] == "VALIDATION_ERROR"

    def test_strict_check_flag(self):
        result = ring({"code": "632", "n": 6, "check": "yes"})
        assert result["error"]["code"] == "VALIDATION_ERROR"
