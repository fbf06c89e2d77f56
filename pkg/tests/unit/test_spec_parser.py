"""Tests for ring specification parsing."""

import pytest

from nilgraph.census.spec import (
    GFSpec,
    PolyQuotientSpec,
    ProductSpec,
    ZmodSpec,
    parse_ring_spec,
)
from nilgraph.core.exceptions import InvalidParameterError, RingSpecSyntaxError


class TestParse:
    """Tests for the ring spec grammar."""

    def test_zmod(self):
        spec = parse_ring_spec("Z12")
        assert spec.ast == ZmodSpec(12)
        assert spec.label == "Z12"

    def test_polynomial_quotient(self):
        """Should store ascending coefficients reduced modulo m."""
        spec = parse_ring_spec("Z6[x]/(x^2)")
        assert spec.ast == PolyQuotientSpec(6, (0, 0, 1))

    def test_polynomial_terms(self):
        """Should combine signed terms and reduce them."""
        spec = parse_ring_spec("Z3[x]/(x^2 - 2x + 4)")
        assert spec.ast == PolyQuotientSpec(3, (1, 1, 1))
        assert spec.label == "Z3[x]/(x^2+x+1)"

    def test_gf_forms(self):
        """Should accept GF(q) and GF(p^k) alike."""
        assert parse_ring_spec("GF(9)").ast == GFSpec(3, 2)
        assert parse_ring_spec("GF(3^2)").ast == GFSpec(3, 2)
        assert parse_ring_spec("GF(7)").label == "GF(7)"

    def test_products_flatten(self):
        """Should flatten nested products to one canonical label."""
        nested = parse_ring_spec("(Z2*Z3)*Z5")
        flat = parse_ring_spec("Z2 * Z3 * Z5")
        assert isinstance(nested.ast, ProductSpec)
        assert nested.label == flat.label == "Z2*Z3*Z5"

    def test_label_round_trip(self):
        """Should parse a canonical label back to the same spec."""
        spec = parse_ring_spec("GF(4) * Z4[x]/(x^3)")
        assert parse_ring_spec(spec.label).ast == spec.ast

    def test_build(self):
        ring = parse_ring_spec("GF(2)*Z16").build()
        assert ring.order == 32
        assert ring.label == "GF(2)*Z16"

    @pytest.mark.parametrize(
        "text", ["Z12", "GF(9)", "Z4[x]/(x^3)", "GF(2)*Z16", "GF(4)*Z3[x]/(x^2)"]
    )
    def test_order_without_building(self, text):
        """Should read the ring order off the spec."""
        spec = parse_ring_spec(text)
        assert spec.order == spec.build().order


class TestErrors:
    """Tests for malformed specs."""

    def test_syntax_error_position(self):
        """Should point at the offending character."""
        with pytest.raises(RingSpecSyntaxError) as exc_info:
            parse_ring_spec("Z6*Q4")
        assert exc_info.value.position == 3
        assert exc_info.value.pointer() == "Z6*Q4\n   ^"

    def test_trailing_input(self):
        with pytest.raises(RingSpecSyntaxError, match="trailing"):
            parse_ring_spec("Z6)")

    def test_missing_integer(self):
        with pytest.raises(RingSpecSyntaxError):
            parse_ring_spec("Z")

    @pytest.mark.parametrize("text", ["GF(6)", "GF(4^2)", "Z1", "Z4[x]/(2x^2)", "Z4[x]/(4)"])
    def test_invalid_parameters(self, text):
        """Should reject bad orders and non-monic quotients."""
        with pytest.raises(InvalidParameterError):
            parse_ring_spec(text)
