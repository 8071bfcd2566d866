"""Unit tests for quartic class groups.

Only Q(2^¼) is computed end to end here; the class groups of Q(p^¼) for
the deep-check primes run in the slow system tests.
"""

import pytest
from pydantic import ValidationError

from quarticaudit.config.models import ClassGroupConfig
from quarticaudit.core.errors import DomainError
from quarticaudit.quartic.classgroup import (
    Certification,
    ClassGroupResult,
    _cokernel,
    class_group,
    cyclic_subfield,
    quartic_h_mod4,
    unit_field_class_group,
)
from quarticaudit.quartic.fixtures import parse_fixtures


def _result(**overrides) -> ClassGroupResult:
    fields = dict(
        poly=(-2, 0, 0, 0, 1),
        disc=-2048,
        signature=(2, 1),
        h=4,
        elementary_divisors=[2, 2],
        h_mod4=0,
        minkowski_bound=5,
        factor_base_size=4,
        relations=9,
    )
    fields.update(overrides)
    return ClassGroupResult(**fields)


@pytest.mark.unit
class TestClassGroupResult:
    """Test the consistency rules of a result."""

    def test_structure(self):
        """Z/2 × Z/2 has order 4 and 2-rank 2."""
        result = _result()

        assert result.is_even
        assert result.two_rank == 2

    def test_divisors_must_multiply_to_h(self):
        """h = Π d_i."""
        with pytest.raises(ValidationError, match="do not multiply"):
            _result(elementary_divisors=[2])

    def test_h_mod4_consistent(self):
        """h_mod4 is h reduced mod 4."""
        with pytest.raises(ValidationError, match="h_mod4"):
            _result(h_mod4=2)

    def test_unknown_h(self):
        """Without h there is no parity and no group."""
        result = _result(h=None, elementary_divisors=[], h_mod4=None, rank_deficiency=1)

        assert result.is_even is None
        assert result.two_rank == 0

    def test_unknown_h_carries_no_structure(self):
        """Divisors without h are rejected."""
        with pytest.raises(ValidationError):
            _result(h=None, h_mod4=None)

    def test_unknown_h_cannot_be_certified(self):
        """Certification needs a class number to compare."""
        with pytest.raises(ValidationError, match="cannot be certified"):
            _result(
                h=None,
                elementary_divisors=[],
                h_mod4=None,
                certified=Certification.ORACLE_MATCHED,
            )


@pytest.mark.unit
class TestCokernel:
    """Test elementary divisors of Z^n / L."""

    def test_trivial(self):
        """L = Z² has trivial cokernel."""
        assert _cokernel(((1, 0), (0, 1))) == []

    def test_unit_pivots_drop_out(self):
        """Only the non-unit part contributes."""
        assert _cokernel(((1, 0), (0, 4))) == [4]

    def test_cyclic(self):
        """Z/2 × Z/3 ≅ Z/6."""
        assert _cokernel(((2, 0), (0, 3))) == [6]

    def test_non_cyclic(self):
        """Z/2 × Z/2 stays split."""
        assert _cokernel(((2, 0), (0, 2))) == [2, 2]


@pytest.mark.unit
class TestClassGroup:
    """Test the relation search on Q(2^¼), which has class number 1."""

    def test_trivial_class_group(self, order_two):
        """Without an oracle record h = 1 is heuristic."""
        result = class_group(order_two, ClassGroupConfig())

        assert result.h == 1
        assert result.elementary_divisors == []
        assert result.h_mod4 == 1
        assert result.minkowski_bound == 5
        assert result.factor_base_size == 4
        assert result.rank_deficiency == 0
        assert result.certified == Certification.HEURISTIC
        assert result.diagnostic == "no oracle record for this polynomial"

    def test_oracle_match(self, order_two):
        """A matching oracle record certifies the result."""
        fixtures = parse_fixtures("-2,0,0,0,1,1  # bnfcertify\n")
        result = class_group(order_two, ClassGroupConfig(), fixtures)

        assert result.certified == Certification.ORACLE_MATCHED
        assert result.oracle_h == 1
        assert result.diagnostic is None

    def test_oracle_mismatch(self, order_two):
        """A disagreeing oracle is reported, not trusted."""
        fixtures = parse_fixtures("-2,0,0,0,1,2\n")
        result = class_group(order_two, ClassGroupConfig(), fixtures)

        assert result.certified == Certification.HEURISTIC
        assert result.oracle_h == 2
        assert "oracle records h=2" in result.diagnostic
        assert "not a multiple" in result.diagnostic

    def test_discriminant_bound(self, order_two):
        """Fields past the desk-scale bound are refused."""
        with pytest.raises(DomainError, match="exceeds the desk-scale bound"):
            class_group(order_two, ClassGroupConfig(max_discriminant=1000))


@pytest.mark.unit
class TestFieldFamilies:
    """Test the input checks of the per-prime entry points."""

    def test_quartic_needs_1_mod_8(self):
        """13 ≡ 5 (mod 8)."""
        with pytest.raises(DomainError, match="not a prime 1 mod 8"):
            quartic_h_mod4(13)

    def test_quartic_respects_bound(self):
        """41 is past a bound of 17."""
        with pytest.raises(DomainError, match="exceeds the deep-check bound"):
            quartic_h_mod4(41, max_p=17)

    def test_unit_field_needs_1_mod_4(self):
        """7 has no unit of norm −1."""
        with pytest.raises(DomainError):
            unit_field_class_group(7)

    def test_cyclic_subfield_17(self):
        """x⁴ − 34x² + 17 defines a totally real field of discriminant 17³."""
        report = cyclic_subfield(17)

        assert report.totally_real
        assert report.disc == 17**3
        assert report.passed

    def test_cyclic_subfield_bound(self):
        """The subfield check honours its bound."""
        with pytest.raises(DomainError):
            cyclic_subfield(41, max_p=17)
