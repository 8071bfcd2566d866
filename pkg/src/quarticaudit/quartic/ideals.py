"""Ideals of a quartic maximal order as HNF lattices in basis coordinates.

An ideal is stored by the canonical upper-triangular HNF of its Z-basis
(``Ideal.hnf``), so two ideals are equal iff their HNFs are. The norm is the
product of the diagonal.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

from sympy import ZZ, Poly
from sympy.polys.numberfields.primes import prime_decomp

from ..core.errors import StructuralError, create_domain_error
from .hnf import Rows, hnf, hnf_contains
from .order import Coords, OrderBasis, as_poly, x

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ideal:
    """A nonzero integral ideal, by its HNF rows."""

    hnf: Rows

    @property
    def norm(self) -> int:
        return prod(row[i] for i, row in enumerate(self.hnf))

    def contains(self, a: Sequence[int]) -> bool:
        return hnf_contains(self.hnf, a)

    @property
    def is_unit(self) -> bool:
        return self.norm == 1


@dataclass(frozen=True)
class PrimeIdealQ:
    """A prime ideal P = (q, α) above the rational prime q."""

    q: int
    hnf: Rows
    e: int
    f: int
    generator: Coords = field(compare=False)

    @property
    def norm(self) -> int:
        return self.q**self.f

    def as_ideal(self) -> Ideal:
        return Ideal(self.hnf)

    def __str__(self) -> str:
        return f"P(q={self.q}, e={self.e}, f={self.f})"


def ideal_reduce_hnf(
    generators: Sequence[Sequence[int]], ob: OrderBasis, modulus: int | None = None
) -> Ideal:
    """The ideal generated by elements of O_K, in canonical HNF.

    ``modulus`` may be any nonzero integer known to lie in the ideal.
    """
    vectors = [ob.mul(g, e) for g in generators for e in _UNIT_VECTORS]
    rows = hnf(vectors, 4, modulus)
    if len(rows) != 4:
        raise create_domain_error("the generators span the zero ideal")
    return Ideal(rows)


_UNIT_VECTORS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def unit_ideal(ob: OrderBasis) -> Ideal:
    return ideal_reduce_hnf([ob.one()], ob, modulus=1)


def principal_ideal(a: Sequence[int], ob: OrderBasis) -> Ideal:
    """(a) for nonzero a."""
    n = ob.norm(a)
    if n == 0:
        raise create_domain_error("(0) is not a nonzero ideal")
    return ideal_reduce_hnf([a], ob, modulus=abs(n))


def ideal_norm(ideal: Ideal | PrimeIdealQ) -> int:
    return ideal.norm if isinstance(ideal, Ideal) else ideal.as_ideal().norm


def ideal_mul(a: Ideal, b: Ideal, ob: OrderBasis) -> Ideal:
    """Product of ideals; N(a)·N(b) lies in the product and serves as modulus."""
    products = [ob.mul(r, s) for r in a.hnf for s in b.hnf]
    rows = hnf(products, 4, a.norm * b.norm)
    return Ideal(rows)


def ideal_pow(a: Ideal, k: int, ob: OrderBasis) -> Ideal:
    if k < 0:
        raise create_domain_error("only nonnegative powers of integral ideals")
    result = unit_ideal(ob)
    base = a
    while k:
        if k & 1:
            result = ideal_mul(result, base, ob)
        k >>= 1
        if k:
            base = ideal_mul(base, base, ob)
    return result


# ============================================================================
# Splitting of rational primes
# ============================================================================


def _two_element(q: int, alpha: Coords, e: int, f: int, ob: OrderBasis) -> PrimeIdealQ:
    ideal = ideal_reduce_hnf([ob.rational(q), alpha], ob, modulus=q)
    if ideal.norm != q**f:
        raise StructuralError(
            f"prime above {q} has norm {ideal.norm}, expected {q}^{f}",
            context=ob.context,
        )
    return PrimeIdealQ(q=q, hnf=ideal.hnf, e=e, f=f, generator=alpha)


def factor_prime(q: int, ob: OrderBasis) -> list[PrimeIdealQ]:
    """Prime ideals above q with ramification indices and residue degrees.

    Primes not dividing the index are read off the factorization of the
    defining polynomial mod q; index primes go through sympy's
    decomposition over the maximal order.
    """
    primes: list[PrimeIdealQ] = []
    if ob.index % q:
        f = as_poly(ob.poly, domain=ZZ)
        _, factors = as_poly(ob.poly, modulus=q).factor_list()
        for g, e in factors:
            # g(θ) mod f; an inert q gives g ≡ f, so α = 0 and P = (q)
            reduced = Poly(g.all_coeffs(), x, domain=ZZ).rem(f)
            coeffs = [int(c) for c in reversed(reduced.all_coeffs())]
            primes.append(_two_element(q, ob.from_power_basis(coeffs), e, g.degree(), ob))
    else:
        for P in prime_decomp(q, T=as_poly(ob.poly, domain=ZZ)):
            alpha = P.alpha.over_power_basis()
            denom = int(alpha.denom)
            coeffs = [Fraction(int(c), denom) for c in alpha.coeffs]
            primes.append(_two_element(q, ob.from_power_basis(coeffs), int(P.e), int(P.f), ob))

    total = sum(P.e * P.f for P in primes)
    if total != 4:
        raise StructuralError(
            f"sum of e·f over primes above {q} is {total}, not 4",
            context=ob.context,
        )
    primes.sort(key=lambda P: (P.f, P.hnf))
    logger.debug("%d splits as %s", q, ", ".join(str(P) for P in primes))
    return primes


class PrimePowers:
    """Cached HNFs of P, P², ... for valuations by membership."""

    def __init__(self, prime: PrimeIdealQ, ob: OrderBasis):
        self.prime = prime
        self.ob = ob
        self._powers: list[Ideal] = [prime.as_ideal()]

    def power(self, k: int) -> Ideal:
        while len(self._powers) < k:
            self._powers.append(ideal_mul(self._powers[-1], self.prime.as_ideal(), self.ob))
        return self._powers[k - 1]

    def valuation(self, a: Sequence[int], limit: int) -> int:
        """v_P(a), capped at limit."""
        v = 0
        while v < limit and self.power(v + 1).contains(a):
            v += 1
        return v
