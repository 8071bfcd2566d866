"""Report models for per-prime verification and range scans."""

from collections import Counter
from enum import Enum

from pydantic import BaseModel, Field, model_validator

from ..arith.pell import FundUnit
from ..core.chain import Verdict
from ..quartic.classgroup import ClassGroupResult


class CheckTag(str, Enum):
    """The fixed set of checks a report can carry, in report order."""

    H_ODD = "quadratic-h-odd"
    NORM_MINUS_ONE = "unit-norm-minus-one"
    UNIT_CONGRUENCES = "unit-congruences"
    ONLY_SQRT_P_RAMIFIES = "only-sqrt-p-ramifies"
    DYADIC_RESIDUES = "dyadic-residues"
    TWO_RAMIFIED_PLACES = "two-ramified-places"
    RESIDUE_ORDER_FOUR = "residue-order-four"
    SQRT_P_SPLITS = "sqrt-p-splits"
    UNIT_FIELD_CHAIN = "unit-field-chain"
    QUARTIC_FIELD_CHAIN = "quartic-field-chain"
    QUARTIC_H_EVEN = "quartic-h-even"
    QUARTIC_H_MOD4 = "quartic-h-mod4"
    UNIT_FIELD_H_ODD = "unit-field-h-odd"
    CYCLIC_SUBFIELD = "cyclic-subfield"
    NON_QUARTIC_TWO = "two-not-fourth-power"

    @property
    def label(self) -> str:
        return _LABELS[self]

    @property
    def position(self) -> int:
        return _POSITIONS[self]

    @property
    def is_deep(self) -> bool:
        """Whether the check computes a quartic class group or subfield directly."""
        return self in DEEP_TAGS


_LABELS = {
    CheckTag.H_ODD: "class number of Q(sqrt p) is odd",
    CheckTag.NORM_MINUS_ONE: "fundamental unit has norm -1",
    CheckTag.UNIT_CONGRUENCES: "4 | a, b = 1 mod 4, prime factors of b are 1 mod 4",
    CheckTag.ONLY_SQRT_P_RAMIFIES: "ramification of k(sqrt(eps*sqrt p)) is (sqrt p) only",
    CheckTag.DYADIC_RESIDUES: "eps is 1 and -1 mod 4 at the two dyadic primes",
    CheckTag.TWO_RAMIFIED_PLACES: "k(sqrt eps)/k ramifies at one real and one dyadic place",
    CheckTag.RESIDUE_ORDER_FOUR: "a has order 4 mod p",
    CheckTag.SQRT_P_SPLITS: "(sqrt p) splits in k(sqrt eps)",
    CheckTag.UNIT_FIELD_CHAIN: "k(sqrt eps) has odd class number (ambiguous classes)",
    CheckTag.QUARTIC_FIELD_CHAIN: "Q(p^(1/4)) has class number 2 mod 4 (ambiguous classes)",
    CheckTag.QUARTIC_H_EVEN: "Q(p^(1/4)) has even class number (direct)",
    CheckTag.QUARTIC_H_MOD4: "Q(p^(1/4)) has class number 2 mod 4 (direct)",
    CheckTag.UNIT_FIELD_H_ODD: "k(sqrt eps) has odd class number (direct)",
    CheckTag.CYCLIC_SUBFIELD: "k(sqrt(eps*sqrt p)) is totally real with discriminant p^3",
    CheckTag.NON_QUARTIC_TWO: "2 not a 4th power mod p gives class number 2 mod 4",
}

_POSITIONS = {tag: i for i, tag in enumerate(CheckTag)}

DEEP_TAGS = frozenset(
    {
        CheckTag.QUARTIC_H_EVEN,
        CheckTag.QUARTIC_H_MOD4,
        CheckTag.UNIT_FIELD_H_ODD,
        CheckTag.CYCLIC_SUBFIELD,
        CheckTag.NON_QUARTIC_TWO,
    }
)


class CheckRecord(BaseModel):
    """One check on one prime."""

    tag: CheckTag
    verdict: Verdict
    witness: dict[str, str] = Field(default_factory=dict)
    note: str | None = None

    class Config:
        extra = "forbid"


def derive_overall(p: int, checks: list[CheckRecord]) -> Verdict:
    """fail if any check failed; otherwise hypothesis_not_met off 1 mod 8.

    A deep check that ran without deciding its claim leaves the prime
    inconclusive: the direct computation did not confirm the chain.
    Inconclusive shallow checks are recorded but do not block a pass.
    """
    if any(c.verdict == Verdict.FAIL for c in checks):
        return Verdict.FAIL
    if p % 8 != 1:
        return Verdict.HYPOTHESIS_NOT_MET
    if any(c.tag.is_deep and c.verdict == Verdict.INCONCLUSIVE for c in checks):
        return Verdict.INCONCLUSIVE
    return Verdict.PASS


class ProofChainReport(BaseModel):
    """Everything verified for one prime, in tag order."""

    p: int = Field(..., ge=2)
    class_mod16: int = Field(..., ge=0, lt=16)
    unit: FundUnit | None = None
    checks: list[CheckRecord] = Field(default_factory=list)
    deep: ClassGroupResult | None = None
    overall: Verdict

    class Config:
        extra = "forbid"

    @model_validator(mode="after")
    def _check_consistency(self) -> "ProofChainReport":
        if self.class_mod16 != self.p % 16:
            raise ValueError(f"class_mod16={self.class_mod16} but p mod 16 = {self.p % 16}")
        positions = [c.tag.position for c in self.checks]
        if positions != sorted(set(positions)):
            raise ValueError("checks must be in tag order without repeats")
        expected = derive_overall(self.p, self.checks)
        if self.overall != expected:
            raise ValueError(f"overall={self.overall.value} but checks give {expected.value}")
        return self

    @property
    def tags(self) -> list[CheckTag]:
        return [c.tag for c in self.checks]

    def check(self, tag: CheckTag) -> CheckRecord:
        for record in self.checks:
            if record.tag == tag:
                return record
        raise KeyError(tag.value)

    def failed(self) -> list[CheckRecord]:
        return [c for c in self.checks if c.verdict == Verdict.FAIL]


class ScanSummary(BaseModel):
    """Outcome counts of a range scan."""

    lo: int
    hi: int
    by_overall: dict[str, int] = Field(default_factory=dict)
    inconclusive_checks: int = 0
    falsifications: list[int] = Field(default_factory=list)
    aborted: bool = False

    class Config:
        extra = "forbid"

    @property
    def total(self) -> int:
        return sum(self.by_overall.values())

    def add(self, report: ProofChainReport) -> None:
        counts = Counter(self.by_overall)
        counts[report.overall.value] += 1
        self.by_overall = dict(counts)
        self.inconclusive_checks += sum(
            1 for c in report.checks if c.verdict == Verdict.INCONCLUSIVE
        )
        if report.overall == Verdict.FAIL:
            self.falsifications.append(report.p)
