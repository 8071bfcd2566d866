"""Class groups of quartic fields at desk scale.

Generators are all prime ideals above rational primes up to the Minkowski
bound. Relations are exponent vectors of principal ideals:

* (q) = Π P^e for each base prime q,
* P = (α) for base primes where the bounded principality search hits,
* (α) for small elements α of each base ideal and of O_K whose norms are
  smooth over the base primes.

The relation lattice is kept in incremental HNF; the class group is its
cokernel, read off by Smith normal form. Every relation is a true one, so
the computed lattice lies inside the full relation lattice and the
computed h is a multiple of the true h. A result is only certified when it
matches the recorded oracle class number.
"""

import logging
from collections.abc import Iterator, Sequence
from enum import Enum
from math import floor, prod

from pydantic import BaseModel, Field, model_validator
from sympy import Matrix, ZZ, isprime, primerange
from sympy.matrices.normalforms import invariant_factors

from ..arith.pell import fundamental_unit
from ..config.models import ClassGroupConfig
from ..core.errors import FieldContext, StructuralError, create_domain_error
from .fixtures import FixtureTable
from .hnf import HermiteLattice, Rows
from .ideals import PrimeIdealQ, PrimePowers, factor_prime, unit_ideal
from .lattice import is_principal, small_elements
from .order import (
    Coords,
    OrderBasis,
    cyclic_subfield_poly,
    maximal_order,
    minkowski_bound,
    pure_quartic,
    unit_field_poly,
)

logger = logging.getLogger(__name__)


class Certification(str, Enum):
    """How far a class number can be trusted."""

    ORACLE_MATCHED = "oracle_matched"
    HEURISTIC = "heuristic"


class ClassGroupResult(BaseModel):
    """Class group of a quartic field as elementary divisors d1 | d2 | ..."""

    poly: tuple[int, ...]
    disc: int
    signature: tuple[int, int]
    h: int | None = Field(default=None, ge=1)
    elementary_divisors: list[int] = Field(default_factory=list)
    h_mod4: int | None = None
    certified: Certification = Certification.HEURISTIC
    oracle_h: int | None = None
    minkowski_bound: int
    factor_base_size: int = Field(..., ge=0)
    relations: int = Field(..., ge=0)
    rank_deficiency: int = Field(default=0, ge=0)
    diagnostic: str | None = None

    class Config:
        frozen = True

    @model_validator(mode="after")
    def _check_order(self) -> "ClassGroupResult":
        if self.h is None:
            if self.elementary_divisors or self.h_mod4 is not None:
                raise ValueError("a result without h carries no group structure")
            if self.certified == Certification.ORACLE_MATCHED:
                raise ValueError("a result without h cannot be certified")
            return self
        if prod(self.elementary_divisors) != self.h:
            raise ValueError(
                f"elementary divisors {self.elementary_divisors} do not multiply to h={self.h}"
            )
        if self.h_mod4 != self.h % 4:
            raise ValueError(f"h_mod4={self.h_mod4} but h={self.h}")
        return self

    @property
    def is_even(self) -> bool | None:
        return None if self.h is None else self.h % 2 == 0

    @property
    def two_rank(self) -> int:
        return sum(1 for d in self.elementary_divisors if d % 2 == 0)


# ============================================================================
# Relation harvesting
# ============================================================================


class _FactorBase:
    """All primes above the rational primes up to the Minkowski bound."""

    def __init__(self, ob: OrderBasis, bound: int):
        self.ob = ob
        self.rational_primes = list(primerange(2, bound + 1))
        self.primes: list[PrimeIdealQ] = []
        self.above: dict[int, list[tuple[int, PrimePowers]]] = {}
        for q in self.rational_primes:
            self.above[q] = []
            for P in factor_prime(q, ob):
                self.above[q].append((len(self.primes), PrimePowers(P, ob)))
                self.primes.append(P)

    def __len__(self) -> int:
        return len(self.primes)

    def is_smooth(self, n: int) -> bool:
        n = abs(n)
        if n == 0:
            return False
        for q in self.rational_primes:
            while n % q == 0:
                n //= q
            if n == 1:
                return True
        return n == 1

    def exponents(self, alpha: Sequence[int], norm: int) -> list[int] | None:
        """Exponent vector of (α), or None when N(α) is not smooth."""
        n = abs(norm)
        vector = [0] * len(self.primes)
        for q in self.rational_primes:
            if n == 1:
                break
            vq = 0
            while n % q == 0:
                n //= q
                vq += 1
            if not vq:
                continue
            total = 0
            for col, powers in self.above[q]:
                v = powers.valuation(alpha, vq // powers.prime.f)
                vector[col] = v
                total += v * powers.prime.f
            if total != vq:
                raise StructuralError(
                    f"valuations above {q} account for {q}^{total}, norm has {q}^{vq}",
                    context=self.ob.context,
                )
        return vector if n == 1 else None


class _RelationLattice:
    def __init__(self, dimension: int, stable_target: int):
        self.lattice = HermiteLattice(dimension)
        self.stable_target = stable_target
        self.relations = 0
        self.stable = 0
        self._last_det = 0

    @property
    def done(self) -> bool:
        if not self.lattice.is_full_rank:
            return False
        return self._last_det == 1 or self.stable >= self.stable_target

    def add(self, vector: Sequence[int]) -> None:
        self.relations += 1
        self.lattice.insert(vector)
        if not self.lattice.is_full_rank:
            return
        det = self.lattice.determinant
        if det == self._last_det:
            self.stable += 1
            return
        self.stable = 0
        self._last_det = det
        self.lattice.set_modulus(det)


def _candidates(
    base: _FactorBase, ob: OrderBasis, config: ClassGroupConfig
) -> Iterator[tuple[Coords, float]]:
    for P in sorted(base.primes, key=lambda P: P.norm):
        yield from small_elements(P.as_ideal(), ob, config.relation_radius)
    yield from small_elements(unit_ideal(ob), ob, config.order_relation_radius)


def _harvest(base: _FactorBase, ob: OrderBasis, config: ClassGroupConfig) -> _RelationLattice:
    relations = _RelationLattice(len(base), config.stable_relations)

    for q in base.rational_primes:
        vector = [0] * len(base)
        for col, powers in base.above[q]:
            vector[col] = powers.prime.e
        relations.add(vector)

    principal: set[int] = set()
    for col, P in enumerate(base.primes):
        if relations.done:
            return relations
        alpha = is_principal(
            P.as_ideal(), ob, config.principal_search_bound, doublings=0
        )
        if alpha is not None:
            principal.add(col)
            relations.add(_unit_vector(len(base), col))

    seen: set[Coords] = set()
    for alpha, approx in _candidates(base, ob, config):
        if relations.done:
            break
        if alpha in seen or not base.is_smooth(round(abs(approx))):
            continue
        seen.add(alpha)
        norm = ob.norm(alpha)
        if norm == 0:
            continue
        vector = base.exponents(alpha, norm)
        if vector is not None:
            relations.add(vector)

    if not relations.lattice.is_full_rank and config.principal_doublings:
        # widen the principality search only for what is still missing
        for col, P in enumerate(base.primes):
            if relations.lattice.is_full_rank:
                break
            if col in principal:
                continue
            alpha = is_principal(
                P.as_ideal(), ob, config.principal_search_bound, config.principal_doublings
            )
            if alpha is not None:
                relations.add(_unit_vector(len(base), col))
    return relations


def _unit_vector(n: int, col: int) -> list[int]:
    vector = [0] * n
    vector[col] = 1
    return vector


def _cokernel(rows: Rows) -> list[int]:
    """Elementary divisors > 1 of Z^n / L for the full-rank HNF rows of L.

    A unit pivot eliminates its generator: entries above it are already zero
    in canonical form, so its row and column drop out.
    """
    keep = [i for i, row in enumerate(rows) if row[i] != 1]
    if not keep:
        return []
    reduced = Matrix([[rows[i][j] for j in keep] for i in keep])
    factors = [abs(int(d)) for d in invariant_factors(reduced, domain=ZZ)]
    return [d for d in factors if d > 1]


# ============================================================================
# Public operations
# ============================================================================


def class_group(
    ob: OrderBasis,
    config: ClassGroupConfig | None = None,
    fixtures: FixtureTable | None = None,
) -> ClassGroupResult:
    """Class group of the maximal order ``ob``.

    Raises:
        DomainError: |disc| exceeds ``config.max_discriminant``.
    """
    config = config or ClassGroupConfig()
    if abs(ob.disc) > config.max_discriminant:
        raise create_domain_error(
            f"|disc| = {abs(ob.disc)} exceeds the desk-scale bound {config.max_discriminant}",
            remedy="raise classgroup.max_discriminant in the profile",
        )

    bound = floor(minkowski_bound(ob))
    base = _FactorBase(ob, bound)
    logger.debug(
        "field %s: Minkowski bound %d, %d generators",
        list(ob.poly),
        bound,
        len(base),
    )
    relations = _harvest(base, ob, config)
    lattice = relations.lattice

    common = dict(
        poly=ob.poly,
        disc=ob.disc,
        signature=ob.signature,
        minkowski_bound=bound,
        factor_base_size=len(base),
        relations=relations.relations,
    )
    oracle = fixtures.lookup(ob.poly) if fixtures is not None else None

    if not lattice.is_full_rank:
        deficiency = len(base) - lattice.rank
        logger.warning(
            "%s: relation lattice has rank %d of %d after %d relations",
            FieldContext(ob.poly).format_location(),
            lattice.rank,
            len(base),
            relations.relations,
        )
        return ClassGroupResult(
            **common,
            oracle_h=oracle,
            rank_deficiency=deficiency,
            diagnostic=f"relation lattice rank deficient by {deficiency}; h unknown",
        )

    divisors = _cokernel(lattice.rows())
    h = prod(divisors)
    if h != lattice.determinant:
        raise StructuralError(
            f"Smith form gives h={h}, HNF determinant is {lattice.determinant}",
            context=ob.context,
        )

    certified = Certification.HEURISTIC
    diagnostic: str | None = None
    if oracle is None:
        diagnostic = "no oracle record for this polynomial"
    elif oracle == h:
        certified = Certification.ORACLE_MATCHED
    else:
        diagnostic = f"computed h={h} but the oracle records h={oracle}"
        if h % oracle:
            diagnostic += "; the computed h is not a multiple of the oracle value"
        logger.warning("%s: %s", FieldContext(ob.poly).format_location(), diagnostic)

    return ClassGroupResult(
        **common,
        h=h,
        elementary_divisors=divisors,
        h_mod4=h % 4,
        certified=certified,
        oracle_h=oracle,
        diagnostic=diagnostic,
    )


def _require_prime(p: int, modulus: int, residue: int, max_p: int | None) -> None:
    if not isprime(p) or p % modulus != residue:
        raise create_domain_error(f"{p} is not a prime {residue} mod {modulus}", p=p)
    if max_p is not None and p > max_p:
        raise create_domain_error(
            f"{p} exceeds the deep-check bound {max_p}",
            p=p,
            remedy="raise deep.deep_max in the profile",
        )


def quartic_h_mod4(
    p: int,
    config: ClassGroupConfig | None = None,
    fixtures: FixtureTable | None = None,
    max_p: int | None = None,
) -> ClassGroupResult:
    """Class group of Q(p^¼) for a prime p ≡ 1 (mod 8); ``h_mod4`` is the headline."""
    _require_prime(p, 8, 1, max_p)
    return class_group(maximal_order(pure_quartic(p)), config, fixtures)


def unit_field_class_group(
    p: int,
    config: ClassGroupConfig | None = None,
    fixtures: FixtureTable | None = None,
    max_p: int | None = None,
) -> ClassGroupResult:
    """Class group of k(√ε), defined by x⁴ − 2a·x² − 1 for ε = a + b√p."""
    _require_prime(p, 4, 1, max_p)
    unit = fundamental_unit(p)
    return class_group(maximal_order(unit_field_poly(unit.a)), config, fixtures)


class CyclicSubfieldReport(BaseModel):
    """The quartic subfield k(√(ε√p)) of the p-th cyclotomic field."""

    p: int
    poly: tuple[int, ...]
    disc: int
    signature: tuple[int, int]

    class Config:
        frozen = True

    @property
    def totally_real(self) -> bool:
        return self.signature == (4, 0)

    @property
    def only_p_ramifies(self) -> bool:
        return self.disc == self.p**3

    @property
    def passed(self) -> bool:
        return self.totally_real and self.only_p_ramifies


def cyclic_subfield(p: int, max_p: int | None = None) -> CyclicSubfieldReport:
    """Signature and discriminant of the field defined by x⁴ − 2bp·x² + p."""
    _require_prime(p, 8, 1, max_p)
    unit = fundamental_unit(p)
    ob = maximal_order(cyclic_subfield_poly(p, unit.b))
    return CyclicSubfieldReport(p=p, poly=ob.poly, disc=ob.disc, signature=ob.signature)
