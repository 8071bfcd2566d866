"""Negative Pell equation a² − p·b² = −1 via the continued fraction of √p.

Also checks the congruences a ≡ 0 (mod 4), b ≡ 1 (mod 4) and "every prime
factor of b is 1 mod 4" that the fundamental unit satisfies when p ≡ 1 (mod 8).
All arithmetic is exact.
"""

import logging
from collections.abc import Iterator
from enum import Enum
from functools import lru_cache
from itertools import chain, cycle
from math import gcd, isqrt, prod

from pydantic import BaseModel, Field
from sympy import factorint, isprime, primerange

from ..core.chain import Verdict
from ..core.errors import PrimeContext, create_domain_error, create_falsification_error

logger = logging.getLogger(__name__)

DEFAULT_TRIAL_DIVISION_CAP = 10**7


class CFExpansion(BaseModel):
    """Periodic continued fraction √n = [a0; period, period, ...]."""

    p: int = Field(..., gt=1)
    a0: int = Field(..., ge=1)
    period: tuple[int, ...]

    class Config:
        frozen = True

    @property
    def period_length(self) -> int:
        return len(self.period)


class FundUnit(BaseModel):
    """Fundamental unit ε = a + b√p of norm −1."""

    p: int
    a: int = Field(..., ge=0)
    b: int = Field(..., gt=0)

    class Config:
        frozen = True

    @property
    def norm(self) -> int:
        return self.a * self.a - self.p * self.b * self.b


class FactorVerdict(str, Enum):
    """How the factor condition on b was decided."""

    COMPLETE = "complete"
    COFACTOR_PRIME = "cofactor_prime"
    COFACTOR_3_MOD_4 = "cofactor_3_mod_4"
    COFACTOR_UNFACTORED = "cofactor_unfactored"


class UnitCongruenceReport(BaseModel):
    """Three verdicts on the fundamental unit for p ≡ 1 (mod 8)."""

    p: int
    a_divisible_by_4: Verdict
    b_is_1_mod_4: Verdict
    b_factors_1_mod_4: Verdict
    small_factors: dict[int, int] = Field(default_factory=dict)
    cofactor: int = 1
    factor_verdict: FactorVerdict = FactorVerdict.COMPLETE

    @property
    def verdicts(self) -> tuple[Verdict, Verdict, Verdict]:
        return (self.a_divisible_by_4, self.b_is_1_mod_4, self.b_factors_1_mod_4)

    @property
    def overall(self) -> Verdict:
        if Verdict.FAIL in self.verdicts:
            return Verdict.FAIL
        if Verdict.INCONCLUSIVE in self.verdicts:
            return Verdict.INCONCLUSIVE
        return Verdict.PASS


def continued_fraction_sqrt(n: int) -> CFExpansion:
    """Continued fraction of √n via the (P, Q) recurrence.

    The period closes when (P, Q) returns to its first periodic state
    (a0, n − a0²).
    """
    if n <= 1:
        raise create_domain_error(f"continued fraction of sqrt({n}) needs n > 1")
    a0 = isqrt(n)
    if a0 * a0 == n:
        raise create_domain_error(
            f"{n} is a perfect square", remedy="sqrt(n) must be irrational"
        )

    first_state = (a0, n - a0 * a0)
    P, Q = first_state
    period: list[int] = []
    while True:
        a = (a0 + P) // Q
        period.append(a)
        P = a * Q - P
        Q = (n - P * P) // Q
        if (P, Q) == first_state:
            break

    return CFExpansion(p=n, a0=a0, period=tuple(period))


def convergents(cf: CFExpansion) -> Iterator[tuple[int, int]]:
    """Yield the convergents h/k of cf forever."""
    h_prev, h = 1, cf.a0
    k_prev, k = 0, 1
    yield h, k
    for a in cycle(cf.period):
        h_prev, h = h, a * h + h_prev
        k_prev, k = k, a * k + k_prev
        yield h, k


def fundamental_unit(p: int) -> FundUnit:
    """Fundamental unit of Q(√p) with integer coordinates and norm −1.

    Raises:
        DomainError: p composite or p ≢ 1 (mod 4).
        FalsificationError: the period has even length, so no unit of norm −1
            exists, which cannot happen for prime p ≡ 1 (mod 4).
    """
    if not isprime(p):
        raise create_domain_error(f"{p} is not prime", p=p)
    if p % 4 != 1:
        raise create_domain_error(
            f"{p} is not 1 mod 4", p=p, remedy="negative Pell needs p ≡ 1 (mod 4)"
        )

    cf = continued_fraction_sqrt(p)
    if cf.period_length % 2 == 0:
        raise create_falsification_error(
            p,
            "the continued fraction of sqrt(p) has odd period for p ≡ 1 (mod 4)",
            {"period_length": str(cf.period_length)},
        )

    terms = chain((cf.a0,), cf.period[:-1])
    h_prev, h, k_prev, k = 0, 1, 1, 0
    for term in terms:
        h_prev, h = h, term * h + h_prev
        k_prev, k = k, term * k + k_prev

    unit = FundUnit(p=p, a=h, b=k)
    if unit.norm != -1:
        raise create_falsification_error(
            p, "the end-of-period convergent solves a² − p·b² = −1", {"a": str(h), "b": str(k)}
        )
    logger.debug("fundamental unit of Q(sqrt %d): period %d", p, cf.period_length)
    return unit


@lru_cache(maxsize=4)
def _primorial(cap: int) -> int:
    """Product of all primes ≤ cap, assembled with a balanced product tree."""
    layer = list(primerange(2, cap + 1))
    if not layer:
        return 1
    while len(layer) > 1:
        layer = [prod(layer[i : i + 2]) for i in range(0, len(layer), 2)]
    return layer[0]


def small_prime_factors(n: int, cap: int) -> tuple[dict[int, int], int]:
    """Split n into its cap-smooth part (factored) and the remaining cofactor.

    Batched trial division: g = gcd(n, primorial(cap)) collects every prime
    ≤ cap dividing n, and those primes are then divided out completely.
    """
    n = abs(n)
    if n <= 1:
        return {}, n
    g = gcd(n, _primorial(cap) % n)
    factors: dict[int, int] = {}
    for q in factorint(g):
        e = 0
        while n % q == 0:
            n //= q
            e += 1
        factors[int(q)] = e
    return factors, n


def check_unit_congruences(
    u: FundUnit, trial_cap: int = DEFAULT_TRIAL_DIVISION_CAP
) -> UnitCongruenceReport:
    """Check 4 | a, b ≡ 1 (mod 4) and that every prime factor of b is 1 mod 4.

    Failed verdicts are reported in the result, never raised.
    """
    if u.p % 8 != 1:
        raise create_domain_error(f"{u.p} is not 1 mod 8", p=u.p)

    def as_verdict(ok: bool) -> Verdict:
        return Verdict.PASS if ok else Verdict.FAIL

    factors, cofactor = small_prime_factors(u.b, trial_cap)
    small_ok = all(q % 4 == 1 for q in factors)

    if cofactor == 1:
        factor_verdict, cofactor_ok = FactorVerdict.COMPLETE, Verdict.PASS
    elif isprime(cofactor):
        factor_verdict = FactorVerdict.COFACTOR_PRIME
        cofactor_ok = as_verdict(cofactor % 4 == 1)
    elif cofactor % 4 == 3:
        # some prime factor of a 3 mod 4 number is itself 3 mod 4
        factor_verdict, cofactor_ok = FactorVerdict.COFACTOR_3_MOD_4, Verdict.FAIL
    else:
        factor_verdict, cofactor_ok = FactorVerdict.COFACTOR_UNFACTORED, Verdict.INCONCLUSIVE

    third = cofactor_ok if small_ok else Verdict.FAIL

    report = UnitCongruenceReport(
        p=u.p,
        a_divisible_by_4=as_verdict(u.a % 4 == 0),
        b_is_1_mod_4=as_verdict(u.b % 4 == 1),
        b_factors_1_mod_4=third,
        small_factors=factors,
        cofactor=cofactor,
        factor_verdict=factor_verdict,
    )
    if report.overall == Verdict.FAIL:
        logger.warning(
            "unit congruences failed at %s: %s",
            PrimeContext(u.p).format_location(),
            [v.value for v in report.verdicts],
        )
    return report
