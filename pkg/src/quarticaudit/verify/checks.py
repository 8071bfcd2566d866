"""The individual checks a report is made of.

Each check is a small class with a tag, a precondition (``applies``) and a
``run`` that returns a ``CheckRecord``. Shared intermediate results (the
fundamental unit, the class group of Q(p^¼)) live on the ``CheckContext``
and are computed at most once per prime.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, ClassVar

from ..arith.ambiguous import quartic_field_chain, unit_field_chain
from ..arith.bqf import class_number
from ..arith.pell import FundUnit, check_unit_congruences, fundamental_unit
from ..arith.quadfield import (
    PlaceK,
    QuadInt,
    SplitType,
    is_fourth_power_mod_p,
    legendre,
    local_residue_at_2,
    order_mod_p,
    quad_ramified_places,
    splitting_in_quadratic,
)
from ..config.models import VerifierConfig
from ..core.chain import ChainVerdict, Verdict, witness
from ..core.errors import StructuralError
from ..core.registry import CheckRegistry
from ..quartic.classgroup import (
    Certification,
    ClassGroupResult,
    cyclic_subfield,
    quartic_h_mod4,
    unit_field_class_group,
)
from ..quartic.fixtures import FixtureTable
from .models import CheckRecord, CheckTag


@dataclass
class CheckContext:
    """Inputs and cached intermediate results for one prime."""

    p: int
    config: VerifierConfig
    deep: bool = False
    fixtures: FixtureTable | None = None
    quartic_error: StructuralError | None = field(default=None, init=False, repr=False)

    @cached_property
    def unit(self) -> FundUnit:
        return fundamental_unit(self.p)

    @cached_property
    def eps(self) -> QuadInt:
        return QuadInt.from_integers(self.p, self.unit.a, self.unit.b)

    @cached_property
    def quartic(self) -> ClassGroupResult:
        # a failed computation is remembered so the other deep checks do not redo it
        if self.quartic_error is not None:
            raise self.quartic_error
        try:
            return quartic_h_mod4(self.p, self.config.classgroup, self.fixtures)
        except StructuralError as e:
            self.quartic_error = e
            raise

    @property
    def form_bound(self) -> int:
        return self.config.arithmetic.form_discriminant_bound

    @property
    def deep_primes(self) -> list[int]:
        """The configured deep-check primes in p's residue class mod 16."""
        deep = self.config.deep
        if self.p % 16 == 9:
            return deep.nine_mod_16_primes
        if self.p % 16 == 1:
            return deep.one_mod_16_primes
        return []

    def deep_for(self, bound: int) -> bool:
        """Deep checks run for configured primes up to ``bound`` when requested."""
        return self.deep and self.p <= bound and self.p in self.deep_primes


class Check(ABC):
    """A single verifiable claim about p."""

    tag: ClassVar[CheckTag]

    def applies(self, ctx: CheckContext) -> bool:
        return ctx.p % 8 == 1

    @abstractmethod
    def run(self, ctx: CheckContext) -> CheckRecord:
        """Evaluate the claim for ctx.p."""

    def record(self, verdict: Verdict, note: str | None = None, **values: Any) -> CheckRecord:
        return CheckRecord(tag=self.tag, verdict=verdict, witness=witness(**values), note=note)


def _ok(condition: bool) -> Verdict:
    return Verdict.PASS if condition else Verdict.FAIL


# ============================================================================
# Judging class numbers that may only be known up to a multiple
# ============================================================================


class Claim(str, Enum):
    EVEN = "even"
    ODD = "odd"
    TWO_MOD_FOUR = "2 mod 4"


def judge(result: ClassGroupResult, claim: Claim) -> tuple[Verdict, str | None]:
    """Verdict of a claim on h given a class group result.

    A heuristic h is a multiple of the true class number, so it decides a
    claim only when every divisor of it would: an odd heuristic h proves
    the true h odd, an even one proves nothing.
    """
    h = result.h
    if h is None:
        return Verdict.INCONCLUSIVE, result.diagnostic
    if result.certified == Certification.ORACLE_MATCHED:
        holds = {
            Claim.EVEN: h % 2 == 0,
            Claim.ODD: h % 2 == 1,
            Claim.TWO_MOD_FOUR: h % 4 == 2,
        }[claim]
        return _ok(holds), None
    if h % 2 == 1:
        return (Verdict.PASS if claim == Claim.ODD else Verdict.FAIL), None
    return Verdict.INCONCLUSIVE, f"heuristic h={h} bounds the class number only up to a divisor"


def _group_witness(result: ClassGroupResult) -> dict[str, Any]:
    return {
        "h": result.h if result.h is not None else "unknown",
        "h_mod4": result.h_mod4 if result.h_mod4 is not None else "unknown",
        "divisors": result.elementary_divisors,
        "certified": result.certified,
        "oracle_h": result.oracle_h if result.oracle_h is not None else "none",
    }


# ============================================================================
# Quadratic layer
# ============================================================================


class QuadraticHOdd(Check):
    tag = CheckTag.H_ODD

    def applies(self, ctx: CheckContext) -> bool:
        return ctx.p % 4 == 1

    def run(self, ctx: CheckContext) -> CheckRecord:
        result = class_number(ctx.p, ctx.form_bound)
        return self.record(_ok(result.h % 2 == 1), h=result.h, h_wide=result.h_wide)


class NormMinusOne(Check):
    tag = CheckTag.NORM_MINUS_ONE

    def applies(self, ctx: CheckContext) -> bool:
        return ctx.p % 4 == 1

    def run(self, ctx: CheckContext) -> CheckRecord:
        unit = ctx.unit
        return self.record(_ok(unit.norm == -1), a=unit.a, b=unit.b, norm=unit.norm)


class UnitCongruences(Check):
    """4 | a, b ≡ 1 (mod 4), every prime factor of b ≡ 1 (mod 4)."""

    tag = CheckTag.UNIT_CONGRUENCES

    def run(self, ctx: CheckContext) -> CheckRecord:
        report = check_unit_congruences(ctx.unit, ctx.config.arithmetic.trial_division_cap)
        factors = [f"{q}^{e}" if e > 1 else str(q) for q, e in sorted(report.small_factors.items())]
        note = None
        if report.overall == Verdict.INCONCLUSIVE:
            note = f"cofactor {report.cofactor} of b left unfactored"
        return self.record(
            report.overall,
            note=note,
            a_mod_4=ctx.unit.a % 4,
            b_mod_4=ctx.unit.b % 4,
            small_factors=factors or "none",
            cofactor=report.cofactor,
            factor_verdict=report.factor_verdict,
        )


class OnlySqrtPRamifies(Check):
    tag = CheckTag.ONLY_SQRT_P_RAMIFIES

    def run(self, ctx: CheckContext) -> CheckRecord:
        places = quad_ramified_places(ctx.eps * QuadInt.sqrt_p(ctx.p))
        return self.record(
            _ok(places == [PlaceK.sqrt_p()]), places=[str(pl) for pl in places]
        )


class DyadicResidues(Check):
    tag = CheckTag.DYADIC_RESIDUES

    def run(self, ctx: CheckContext) -> CheckRecord:
        plus = local_residue_at_2(ctx.eps, PlaceK.dyadic_plus())
        minus = local_residue_at_2(ctx.eps, PlaceK.dyadic_minus())
        return self.record(_ok(sorted((plus, minus)) == [1, 3]), dyadic_plus=plus, dyadic_minus=minus)


class TwoRamifiedPlaces(Check):
    tag = CheckTag.TWO_RAMIFIED_PLACES

    def run(self, ctx: CheckContext) -> CheckRecord:
        places = quad_ramified_places(ctx.eps)
        shape = sorted(pl.is_real for pl in places)
        return self.record(
            _ok(shape == [False, True]), t=len(places), places=[str(pl) for pl in places]
        )


class ResidueOrderFour(Check):
    tag = CheckTag.RESIDUE_ORDER_FOUR

    def run(self, ctx: CheckContext) -> CheckRecord:
        order = order_mod_p(ctx.unit.a, ctx.p)
        return self.record(_ok(order == 4), a_mod_p=ctx.unit.a % ctx.p, order=order)


class SqrtPSplits(Check):
    tag = CheckTag.SQRT_P_SPLITS

    def run(self, ctx: CheckContext) -> CheckRecord:
        symbol = legendre(ctx.unit.a, ctx.p)
        split = splitting_in_quadratic(PlaceK.sqrt_p(), ctx.eps)
        return self.record(
            _ok(symbol == 1 and split == SplitType.SPLIT), legendre=symbol, splitting=split
        )


# ============================================================================
# Proof chains
# ============================================================================


def _chain_record(check: Check, verdict: ChainVerdict) -> CheckRecord:
    failed = verdict.failed_step()
    values: dict[str, Any] = {"steps": len(verdict.steps)}
    if failed is not None:
        values["failed_step"] = failed.name
        values.update({f"{failed.name}.{k}": v for k, v in failed.witness.items()})
    elif verdict.steps:
        values.update(verdict.steps[-1].witness)
    return check.record(verdict.conclusion, **values)


class UnitFieldChainCheck(Check):
    tag = CheckTag.UNIT_FIELD_CHAIN

    def run(self, ctx: CheckContext) -> CheckRecord:
        return _chain_record(self, unit_field_chain(ctx.p, ctx.form_bound))


class QuarticFieldChainCheck(Check):
    """Runs for every p ≡ 1 (mod 8); off 9 mod 16 it records hypothesis_not_met."""

    tag = CheckTag.QUARTIC_FIELD_CHAIN

    def run(self, ctx: CheckContext) -> CheckRecord:
        return _chain_record(self, quartic_field_chain(ctx.p, max_discriminant=ctx.form_bound))


# ============================================================================
# Deep checks: direct class group computations
# ============================================================================


class QuarticHEven(Check):
    tag = CheckTag.QUARTIC_H_EVEN

    def applies(self, ctx: CheckContext) -> bool:
        return ctx.p % 8 == 1 and ctx.deep_for(ctx.config.deep.deep_max)

    def run(self, ctx: CheckContext) -> CheckRecord:
        verdict, note = judge(ctx.quartic, Claim.EVEN)
        return self.record(verdict, note=note, **_group_witness(ctx.quartic))


class QuarticHMod4(Check):
    """Direct h mod 4 against the chain's prediction of 2."""

    tag = CheckTag.QUARTIC_H_MOD4

    def applies(self, ctx: CheckContext) -> bool:
        return ctx.p % 16 == 9 and ctx.deep_for(ctx.config.deep.deep_max)

    def run(self, ctx: CheckContext) -> CheckRecord:
        verdict, note = judge(ctx.quartic, Claim.TWO_MOD_FOUR)
        return self.record(verdict, note=note, predicted_h_mod4=2, **_group_witness(ctx.quartic))


class UnitFieldHOdd(Check):
    tag = CheckTag.UNIT_FIELD_H_ODD

    def applies(self, ctx: CheckContext) -> bool:
        return ctx.p % 8 == 1 and ctx.deep_for(ctx.config.deep.unit_field_max)

    def run(self, ctx: CheckContext) -> CheckRecord:
        result = unit_field_class_group(ctx.p, ctx.config.classgroup, ctx.fixtures)
        verdict, note = judge(result, Claim.ODD)
        return self.record(verdict, note=note, poly=list(result.poly), **_group_witness(result))


class CyclicSubfieldCheck(Check):
    tag = CheckTag.CYCLIC_SUBFIELD

    def applies(self, ctx: CheckContext) -> bool:
        return ctx.p % 8 == 1 and ctx.deep_for(ctx.config.deep.subfield_max)

    def run(self, ctx: CheckContext) -> CheckRecord:
        report = cyclic_subfield(ctx.p)
        return self.record(
            _ok(report.passed),
            poly=list(report.poly),
            disc=report.disc,
            signature=list(report.signature),
        )


class NonQuarticTwo(Check):
    """When 2 is not a fourth power mod p, h(Q(p^¼)) ≡ 2 (mod 4) independently."""

    tag = CheckTag.NON_QUARTIC_TWO

    def applies(self, ctx: CheckContext) -> bool:
        return ctx.p % 8 == 1 and ctx.deep_for(ctx.config.deep.deep_max)

    def run(self, ctx: CheckContext) -> CheckRecord:
        if is_fourth_power_mod_p(2, ctx.p):
            return self.record(Verdict.HYPOTHESIS_NOT_MET, two_is_fourth_power=True)
        verdict, note = judge(ctx.quartic, Claim.TWO_MOD_FOUR)
        return self.record(
            verdict, note=note, two_is_fourth_power=False, **_group_witness(ctx.quartic)
        )


BUILTIN_CHECKS: tuple[type[Check], ...] = (
    QuadraticHOdd,
    NormMinusOne,
    UnitCongruences,
    OnlySqrtPRamifies,
    DyadicResidues,
    TwoRamifiedPlaces,
    ResidueOrderFour,
    SqrtPSplits,
    UnitFieldChainCheck,
    QuarticFieldChainCheck,
    QuarticHEven,
    QuarticHMod4,
    UnitFieldHOdd,
    CyclicSubfieldCheck,
    NonQuarticTwo,
)


def register_builtin_checks() -> None:
    """Register the built-in checks that are not registered yet."""
    for check_class in BUILTIN_CHECKS:
        if not CheckRegistry.is_registered(check_class.tag.value):
            CheckRegistry.register(check_class)
