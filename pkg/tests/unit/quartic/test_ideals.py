"""Unit tests for ideals and the splitting of rational primes."""

import pytest

from quarticaudit.core.errors import DomainError
from quarticaudit.quartic.ideals import (
    PrimePowers,
    factor_prime,
    ideal_mul,
    ideal_norm,
    ideal_pow,
    ideal_reduce_hnf,
    principal_ideal,
    unit_ideal,
)
from quarticaudit.quartic.order import maximal_order, pure_quartic


@pytest.fixture(scope="module")
def dyadic_two(order_two):
    """The unique prime above 2 in Q(2^¼), totally ramified."""
    (prime,) = factor_prime(2, order_two)
    return prime


@pytest.mark.unit
class TestIdeals:
    """Test principal ideals, products and powers."""

    def test_unit_ideal(self, order_two):
        """O_K has norm 1."""
        assert unit_ideal(order_two).is_unit

    def test_principal_theta(self, order_two):
        """(θ) has norm |N(θ)| = 2."""
        ideal = principal_ideal(order_two.theta(), order_two)

        assert ideal.norm == 2
        assert ideal.hnf == ((2, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
        assert ideal.contains(order_two.theta())
        assert not ideal.contains(order_two.one())

    def test_zero_rejected(self, order_two):
        """(0) is not a nonzero ideal."""
        with pytest.raises(DomainError):
            principal_ideal(order_two.rational(0), order_two)

    def test_norm_is_multiplicative(self, order_two):
        """N((θ)·(3)) = 2·81."""
        a = principal_ideal(order_two.theta(), order_two)
        b = principal_ideal(order_two.rational(3), order_two)
        assert ideal_mul(a, b, order_two).norm == 162

    def test_reduce_hnf_from_generators(self, order_two):
        """(θ, 2) = (θ) since 2 = θ⁴, with or without a modulus."""
        theta = order_two.theta()
        expected = principal_ideal(theta, order_two).hnf

        assert ideal_reduce_hnf([theta], order_two).hnf == expected
        assert ideal_reduce_hnf([theta, order_two.rational(2)], order_two, modulus=2).hnf == expected

    def test_negative_power_rejected(self, order_two):
        """Integral ideals only have nonnegative powers."""
        with pytest.raises(DomainError):
            ideal_pow(unit_ideal(order_two), -1, order_two)


@pytest.mark.unit
class TestFactorPrime:
    """Test prime decomposition with and without index divisors."""

    def test_two_is_totally_ramified(self, order_two, dyadic_two):
        """(2) = P⁴ with P = (θ)."""
        assert (dyadic_two.e, dyadic_two.f) == (4, 1)
        assert dyadic_two.hnf == principal_ideal(order_two.theta(), order_two).hnf
        assert ideal_pow(dyadic_two.as_ideal(), 4, order_two) == principal_ideal(
            order_two.rational(2), order_two
        )

    def test_three_splits_into_two_quadratic_primes(self, order_two):
        """x⁴ − 2 ≡ (x² + x + 2)(x² + 2x + 2) (mod 3)."""
        primes = factor_prime(3, order_two)

        assert [(P.e, P.f) for P in primes] == [(1, 2), (1, 2)]
        assert [ideal_norm(P) for P in primes] == [9, 9]
        product = ideal_mul(primes[0].as_ideal(), primes[1].as_ideal(), order_two)
        assert product == principal_ideal(order_two.rational(3), order_two)

    def test_index_prime(self, order_41):
        """2 divides the index of Z[θ] in Q(41^¼); the primes still multiply back to (2)."""
        primes = factor_prime(2, order_41)

        assert sum(P.e * P.f for P in primes) == 4
        folded = ideal_pow(primes[0].as_ideal(), primes[0].e, order_41)
        for P in primes[1:]:
            folded = ideal_mul(folded, ideal_pow(P.as_ideal(), P.e, order_41), order_41)
        assert folded == principal_ideal(order_41.rational(2), order_41)

    def test_inert_prime(self, order_two):
        """5 stays prime in Q(2^¼): P = (5) with f = 4."""
        (prime,) = factor_prime(5, order_two)

        assert (prime.e, prime.f) == (1, 4)
        assert prime.norm == 625
        assert prime.as_ideal() == principal_ideal(order_two.rational(5), order_two)

    def test_inert_prime_with_index(self):
        """An inert prime of a field whose order is not Z[θ] also comes back as (q)."""
        ob = maximal_order(pure_quartic(17))
        (prime,) = factor_prime(5, ob)

        assert (prime.e, prime.f) == (1, 4)
        assert prime.as_ideal() == principal_ideal(ob.rational(5), ob)

    def test_label(self, dyadic_two):
        """Primes render with their invariants."""
        assert str(dyadic_two) == "P(q=2, e=4, f=1)"


@pytest.mark.unit
class TestValuations:
    """Test valuations by membership in prime powers."""

    def test_valuation_of_two(self, order_two, dyadic_two):
        """v_P(2) = e = 4."""
        powers = PrimePowers(dyadic_two, order_two)
        assert powers.valuation(order_two.rational(2), limit=10) == 4

    def test_valuation_of_theta(self, order_two, dyadic_two):
        """v_P(θ) = 1 and v_P(1) = 0."""
        powers = PrimePowers(dyadic_two, order_two)

        assert powers.valuation(order_two.theta(), limit=10) == 1
        assert powers.valuation(order_two.one(), limit=10) == 0

    def test_limit_caps(self, order_two, dyadic_two):
        """The search stops at the limit."""
        powers = PrimePowers(dyadic_two, order_two)
        assert powers.valuation(order_two.rational(2), limit=2) == 2
