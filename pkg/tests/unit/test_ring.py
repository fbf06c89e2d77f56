"""Tests for finite ring construction and arithmetic."""

import pytest

from nilgraph.core.exceptions import InvalidParameterError
from nilgraph.rings.ring import (
    FiniteRing,
    check_axioms,
    direct_product,
    first_irreducible,
    format_polynomial,
    is_prime,
    make_gf,
    make_poly_quotient,
    make_zmod,
    prime_power,
)


class TestZmod:
    """Tests for Z_n."""

    def test_zero_divisors(self, z6):
        """Should multiply modulo n."""
        two, three = z6.element((2,)), z6.element((3,))
        assert (two * three).is_zero
        assert (two + three + z6.one).is_zero

    def test_order_and_label(self):
        """Should report order and canonical label."""
        ring = make_zmod(12)
        assert ring.order == 12
        assert ring.label == "Z12"
        assert str(ring) == "Z12"

    def test_rejects_small_modulus(self):
        """Should reject n < 2."""
        with pytest.raises(InvalidParameterError):
            make_zmod(1)

    def test_element_reduces_coefficients(self, z6):
        """Should reduce coefficients modulo the additive order."""
        assert z6.element((13,)).coeffs == (1,)
        assert z6.element((-1,)).coeffs == (5,)


class TestPolynomialQuotient:
    """Tests for Z_m[x]/(f)."""

    def test_nilpotent_variable(self, z4_cubic):
        """Should make x nilpotent of index 3 in Z4[x]/(x^3)."""
        x = z4_cubic.element((0, 1, 0))
        assert not (x**2).is_zero
        assert (x**3).is_zero
        assert z4_cubic.order == 64

    def test_label(self, z4_cubic):
        """Should render the quotient polynomial highest degree first."""
        assert z4_cubic.label == "Z4[x]/(x^3)"

    def test_reduction_modulo_polynomial(self):
        """Should reduce x^2 to -1 in Z3[x]/(x^2+1)."""
        ring = make_poly_quotient(make_zmod(3), [1, 0, 1])
        x = ring.element((0, 1))
        assert (x * x).coeffs == (2, 0)

    def test_rejects_non_monic(self):
        """Should reject a polynomial whose leading coefficient is not 1."""
        with pytest.raises(InvalidParameterError):
            make_poly_quotient(make_zmod(4), [0, 0, 2])

    def test_rejects_constant(self):
        """Should reject a degree-zero modulus."""
        with pytest.raises(InvalidParameterError):
            make_poly_quotient(make_zmod(4), [1])

    def test_requires_zmod_base(self):
        """Should only accept Z_m as a base."""
        with pytest.raises(InvalidParameterError):
            make_poly_quotient(direct_product([make_zmod(2), make_zmod(3)]), [0, 1])


class TestGaloisField:
    """Tests for GF(p^k)."""

    def test_every_nonzero_element_is_invertible(self):
        """Should build a field of order 4."""
        field = make_gf(2, 2)
        assert field.order == 4
        assert field.label == "GF(2^2)"
        units = [x for x in field.elements() if not x.is_zero]
        for a in units:
            assert any((a * b).coeffs == field.one_coeffs for b in units)

    def test_prime_field_label(self):
        """Should label GF(p) without an exponent."""
        assert make_gf(5).label == "GF(5)"

    def test_rejects_non_prime(self):
        """Should reject a composite base."""
        with pytest.raises(InvalidParameterError):
            make_gf(6)

    def test_first_irreducible(self):
        """Should pick the lexicographically first irreducible polynomial."""
        assert first_irreducible(2, 2) == (1, 1, 1)
        assert first_irreducible(3, 2) == (1, 0, 1)


class TestDirectProduct:
    """Tests for direct products."""

    def test_componentwise_arithmetic(self, gf2_z4):
        """Should multiply each factor on its own."""
        a = gf2_z4.element((1, 2))
        b = gf2_z4.element((0, 2))
        assert (a * b).is_zero
        assert gf2_z4.order == 8
        assert gf2_z4.format_vec((1, 3)) == "(1, 3)"

    def test_project(self, gf2_z4):
        """Should project onto a factor."""
        x = gf2_z4.element((1, 3))
        assert gf2_z4.project(x, 1).coeffs == (3,)

    def test_single_factor_unchanged(self, z6):
        """Should return a lone factor as is."""
        assert direct_product([z6]) is z6

    def test_nested_label(self):
        """Should parenthesize product factors."""
        inner = direct_product([make_zmod(2), make_zmod(3)])
        assert direct_product([inner, make_zmod(5)]).label == "(Z2*Z3)*Z5"

    def test_mixed_ring_operands(self, z6, z8):
        """Should refuse arithmetic across rings."""
        with pytest.raises(InvalidParameterError):
            z6.one * z8.one


class TestAxioms:
    """Tests for structure-constant validation."""

    def test_rejects_non_commutative_table(self):
        """Should name commutativity as the violated axiom."""
        ring = FiniteRing(
            additive_orders=(2, 2),
            structure_constants=(((1, 0), (0, 1)), ((1, 1), (0, 1))),
            one_coeffs=(1, 0),
            label="bad",
        )
        with pytest.raises(InvalidParameterError, match="commutative"):
            check_axioms(ring)

    def test_rejects_unreduced_constants(self):
        """Should reject coefficients outside their residue range."""
        with pytest.raises(InvalidParameterError):
            FiniteRing(
                additive_orders=(2,),
                structure_constants=(((3,),),),
                one_coeffs=(1,),
                label="bad",
            )


class TestNumberTheory:
    """Tests for the number theory helpers."""

    def test_is_prime(self):
        assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]

    def test_prime_power(self):
        assert prime_power(8) == (2, 3)
        assert prime_power(9) == (3, 2)
        assert prime_power(12) is None
        assert prime_power(1) is None

    def test_format_polynomial(self):
        assert format_polynomial([1, 2, 1]) == "x^2+2x+1"
        assert format_polynomial([0, 0, 1]) == "x^2"
        assert format_polynomial([0, 0]) == "0"
