"""Unit tests for maximal orders of quartic fields."""

from fractions import Fraction

import pytest

from quarticaudit.core.errors import DomainError, StructuralError
from quarticaudit.quartic.order import (
    cyclic_subfield_poly,
    dedekind_is_maximal,
    maximal_order,
    minkowski_bound,
    pure_quartic,
    unit_field_poly,
)


@pytest.mark.unit
class TestDedekindCriterion:
    """Test q-maximality of the equation order."""

    def test_x4_minus_2_at_2(self):
        """x⁴ − 2 is Eisenstein at 2."""
        assert dedekind_is_maximal(pure_quartic(2), 2)

    def test_x4_minus_41_at_41(self):
        """x⁴ − 41 is Eisenstein at 41."""
        assert dedekind_is_maximal(pure_quartic(41), 41)

    def test_x4_minus_41_at_2(self):
        """(1 + θ²)/2 is integral, so Z[θ] is not 2-maximal."""
        assert not dedekind_is_maximal(pure_quartic(41), 2)


@pytest.mark.unit
class TestMaximalOrder:
    """Test integral bases, discriminants and signatures."""

    def test_equation_order_kept(self, order_two):
        """Q(2^¼) has ring of integers Z[θ] and discriminant −2048."""
        assert order_two.disc == -2048
        assert order_two.denom == 1
        assert order_two.index == 1
        assert order_two.signature == (2, 1)

    def test_enlarged_order(self, order_41):
        """Q(41^¼) needs a denominator; disc(f) = disc(K)·index²."""
        assert order_41.index > 1
        assert order_41.poly_disc == order_41.disc * order_41.index**2
        assert order_41.signature == (2, 1)

    def test_half_integral_element(self, order_41):
        """(1 + θ²)/2 has integer coordinates in the enlarged basis."""
        coords = order_41.from_power_basis([Fraction(1, 2), 0, Fraction(1, 2)])
        assert order_41.to_power_basis(coords) == [Fraction(1, 2), 0, Fraction(1, 2), 0]

    def test_non_integral_rejected(self, order_two):
        """1/2 is not in Z[θ]."""
        with pytest.raises(StructuralError, match="not in the maximal order"):
            order_two.from_power_basis([Fraction(1, 2)])

    def test_degree_four_rejected(self, order_two):
        """θ⁴ − 2 must be reduced mod f before conversion, never truncated to −2."""
        with pytest.raises(StructuralError, match="degree above 3"):
            order_two.from_power_basis([-2, 0, 0, 0, 1])

    def test_reducible_rejected(self):
        """x⁴ − 4 = (x² − 2)(x² + 2)."""
        with pytest.raises(DomainError, match="reducible"):
            maximal_order((-4, 0, 0, 0, 1))

    def test_non_monic_rejected(self):
        """Only monic quartics define the order Z[θ]."""
        with pytest.raises(DomainError, match="monic"):
            maximal_order((-2, 0, 0, 0, 2))

    def test_families(self):
        """The three polynomial families used by the verifier."""
        assert pure_quartic(41) == (-41, 0, 0, 0, 1)
        assert unit_field_poly(32) == (-1, 0, -64, 0, 1)
        assert cyclic_subfield_poly(41, 5) == (41, 0, -410, 0, 1)


@pytest.mark.unit
class TestOrderArithmetic:
    """Test multiplication and norms through the structure constants."""

    def test_theta_squared(self, order_41):
        """θ·θ = θ²."""
        theta = order_41.theta()
        assert order_41.mul(theta, theta) == order_41.from_power_basis([0, 0, 1])

    def test_one_is_identity(self, order_41):
        """1·a = a."""
        a = order_41.from_power_basis([3, -1, 0, 2])
        assert order_41.mul(order_41.one(), a) == a

    def test_norm_of_theta(self, order_41):
        """N(θ) is the constant term of x⁴ − 41."""
        assert order_41.norm(order_41.theta()) == -41

    def test_norm_of_rational(self, order_two):
        """N(3) = 3⁴."""
        assert order_two.norm(order_two.rational(3)) == 81

    def test_norm_is_multiplicative(self, order_41):
        """N(ab) = N(a)N(b)."""
        a = order_41.from_power_basis([1, 1])
        b = order_41.from_power_basis([2, 0, 1])
        assert order_41.norm(order_41.mul(a, b)) == order_41.norm(a) * order_41.norm(b)

    def test_real_roots_first(self, order_two):
        """Two real roots ±2^¼ in increasing order, then i·2^¼."""
        roots = order_two.roots
        fourth_root = 2**0.25

        assert roots[0].real == pytest.approx(-fourth_root)
        assert roots[1].real == pytest.approx(fourth_root)
        assert roots[2].imag == pytest.approx(fourth_root)


@pytest.mark.unit
class TestMinkowskiBound:
    """Test the rational upper bound on the Minkowski constant."""

    def test_x4_minus_2(self, order_two):
        """(4/π)·(3/32)·√2048 ≈ 5.40."""
        bound = minkowski_bound(order_two)

        assert isinstance(bound, Fraction)
        assert 5.40 < bound < 5.41
