"""Unit tests for report models and the overall verdict."""

import pytest
from pydantic import ValidationError

from quarticaudit.core.chain import Verdict
from quarticaudit.verify.models import (
    CheckRecord,
    CheckTag,
    ProofChainReport,
    ScanSummary,
    derive_overall,
)


def _record(tag: CheckTag, verdict: Verdict = Verdict.PASS) -> CheckRecord:
    return CheckRecord(tag=tag, verdict=verdict)


@pytest.mark.unit
class TestCheckTag:
    """Test tag metadata."""

    def test_positions_follow_declaration(self):
        """Report order is declaration order."""
        assert CheckTag.H_ODD.position == 0
        assert CheckTag.NON_QUARTIC_TWO.position == len(CheckTag) - 1

    def test_every_tag_has_a_label(self):
        """Labels exist for all tags."""
        assert all(tag.label for tag in CheckTag)


@pytest.mark.unit
class TestDeriveOverall:
    """Test fail > hypothesis_not_met > inconclusive > pass."""

    def test_fail_wins(self):
        """Any failure fails the prime, even off the hypothesis."""
        checks = [_record(CheckTag.H_ODD, Verdict.FAIL)]
        assert derive_overall(13, checks) == Verdict.FAIL

    def test_hypothesis(self):
        """Primes not 1 mod 8 never pass."""
        assert derive_overall(13, [_record(CheckTag.H_ODD)]) == Verdict.HYPOTHESIS_NOT_MET
        assert derive_overall(7, []) == Verdict.HYPOTHESIS_NOT_MET

    def test_inconclusive_still_passes(self):
        """Inconclusive checks do not block a pass."""
        checks = [
            _record(CheckTag.H_ODD),
            _record(CheckTag.UNIT_CONGRUENCES, Verdict.INCONCLUSIVE),
        ]
        assert derive_overall(41, checks) == Verdict.PASS

    def test_undecided_deep_check_is_inconclusive(self):
        """A deep check that ran but could not decide leaves the prime inconclusive."""
        checks = [
            _record(CheckTag.QUARTIC_FIELD_CHAIN),
            _record(CheckTag.QUARTIC_H_EVEN),
            _record(CheckTag.QUARTIC_H_MOD4, Verdict.INCONCLUSIVE),
        ]
        assert derive_overall(41, checks) == Verdict.INCONCLUSIVE

    def test_failure_beats_inconclusive(self):
        """A failed check outranks an undecided deep one."""
        checks = [
            _record(CheckTag.H_ODD, Verdict.FAIL),
            _record(CheckTag.QUARTIC_H_MOD4, Verdict.INCONCLUSIVE),
        ]
        assert derive_overall(41, checks) == Verdict.FAIL

    def test_deep_tags(self):
        """Only the direct class group and subfield checks are deep."""
        assert {tag for tag in CheckTag if tag.is_deep} == {
            CheckTag.QUARTIC_H_EVEN,
            CheckTag.QUARTIC_H_MOD4,
            CheckTag.UNIT_FIELD_H_ODD,
            CheckTag.CYCLIC_SUBFIELD,
            CheckTag.NON_QUARTIC_TWO,
        }


@pytest.mark.unit
class TestProofChainReport:
    """Test report consistency rules."""

    def test_lookup(self, passing_report):
        """Checks are found by tag."""
        assert passing_report.check(CheckTag.RESIDUE_ORDER_FOUR).witness["order"] == "4"
        assert passing_report.failed() == []
        assert passing_report.tags[0] == CheckTag.NORM_MINUS_ONE

    def test_missing_tag(self, passing_report):
        """Absent checks raise KeyError."""
        with pytest.raises(KeyError):
            passing_report.check(CheckTag.QUARTIC_H_MOD4)

    def test_class_mod16_checked(self):
        """class_mod16 must be p mod 16."""
        with pytest.raises(ValidationError, match="class_mod16"):
            ProofChainReport(p=41, class_mod16=1, overall=Verdict.PASS)

    def test_tag_order_checked(self):
        """Checks appear in tag order without repeats."""
        with pytest.raises(ValidationError, match="tag order"):
            ProofChainReport(
                p=41,
                class_mod16=9,
                checks=[_record(CheckTag.NORM_MINUS_ONE), _record(CheckTag.H_ODD)],
                overall=Verdict.PASS,
            )

        with pytest.raises(ValidationError, match="tag order"):
            ProofChainReport(
                p=41,
                class_mod16=9,
                checks=[_record(CheckTag.H_ODD), _record(CheckTag.H_ODD)],
                overall=Verdict.PASS,
            )

    def test_overall_checked(self):
        """overall must agree with the checks."""
        with pytest.raises(ValidationError, match="overall=pass"):
            ProofChainReport(
                p=41,
                class_mod16=9,
                checks=[_record(CheckTag.H_ODD, Verdict.FAIL)],
                overall=Verdict.PASS,
            )

    def test_extra_fields_forbidden(self):
        """Unknown keys are rejected."""
        with pytest.raises(ValidationError):
            ProofChainReport(p=7, class_mod16=7, overall=Verdict.HYPOTHESIS_NOT_MET, deep_h=2)


@pytest.mark.unit
class TestScanSummary:
    """Test outcome counting."""

    def test_add(self, passing_report):
        """Counts by overall verdict and inconclusive checks."""
        summary = ScanSummary(lo=2, hi=50)
        summary.add(passing_report)
        summary.add(ProofChainReport(p=7, class_mod16=7, overall=Verdict.HYPOTHESIS_NOT_MET))

        assert summary.by_overall == {"pass": 1, "hypothesis_not_met": 1}
        assert summary.total == 2
        assert summary.inconclusive_checks == 1
        assert summary.falsifications == []

    def test_failures_recorded(self):
        """Failed primes are listed."""
        summary = ScanSummary(lo=2, hi=50)
        summary.add(
            ProofChainReport(
                p=13,
                class_mod16=13,
                checks=[_record(CheckTag.H_ODD, Verdict.FAIL)],
                overall=Verdict.FAIL,
            )
        )

        assert summary.falsifications == [13]
