"""Unit tests for the quarticaudit error taxonomy."""

import json

import pytest
from rich.console import Console

from quarticaudit.core.errors import (
    ConfigError,
    DomainError,
    ErrorSeverity,
    FalsificationError,
    FieldContext,
    FileLineContext,
    FixtureError,
    PrimeContext,
    QuarticAuditError,
    RangeContext,
    StructuralError,
    SuggestionEngine,
    create_domain_error,
    create_falsification_error,
)


@pytest.mark.unit
class TestErrorContext:
    """Test error context providers."""

    def test_prime_context(self):
        """Prime contexts format as p=<p> with an optional stage."""
        assert PrimeContext(41).format_location() == "p=41"
        assert PrimeContext(41, "unit").format_location() == "p=41/unit"
        assert PrimeContext(41).get_metadata()["p"] == "41"

    def test_prime_context_keeps_big_integers_exact(self):
        """Metadata renders p as a decimal string."""
        p = 2**127 - 1
        assert PrimeContext(p).get_metadata()["p"] == str(p)

    def test_field_context(self):
        """Field contexts list the coefficients, constant term first."""
        context = FieldContext((-41, 0, 0, 0, 1), stage="relations")

        assert context.format_location() == "field[-41,0,0,0,1]/relations"
        assert context.get_metadata()["poly"] == ["-41", "0", "0", "0", "1"]

    def test_range_context(self):
        """Range contexts format as range[lo, hi]."""
        assert RangeContext(10, 20).format_location() == "range[10, 20]"

    def test_file_line_context(self):
        """File contexts append the line number when known."""
        assert FileLineContext("oracle.csv").format_location() == "oracle.csv"
        assert FileLineContext("oracle.csv", 7).format_location() == "oracle.csv:7"


@pytest.mark.unit
class TestQuarticAuditError:
    """Test the base error class."""

    def test_format_message(self):
        """The message joins category, location, issue and remedy."""
        error = DomainError(
            issue="12 is not prime", context=PrimeContext(12), remedy="pass a prime"
        )

        assert error.format_message() == "DomainError - p=12 - 12 is not prime - pass a prime"
        assert str(error) == error.format_message()

    def test_to_dict_and_json(self):
        """Structured forms carry the context and remedy."""
        error = DomainError(issue="bad", context=RangeContext(5, 1), remedy="swap them")
        data = error.to_dict()

        assert data["category"] == "DomainError"
        assert data["severity"] == "error"
        assert data["context"]["location"] == "range[5, 1]"
        assert data["remedy"] == "swap them"
        assert json.loads(error.to_json())["issue"] == "bad"

    def test_rich_panel_renders(self):
        """The rich panel shows the issue, remedy and suggestions."""
        console = Console(record=True, width=100)
        error = QuarticAuditError(
            issue="something broke", remedy="try again", suggestions=["quick"]
        )

        error.format_rich_message(console)
        output = console.export_text()

        assert "something broke" in output
        assert "Remedy: try again" in output
        assert "1. quick" in output

    def test_rich_panel_shows_witnesses(self):
        """Falsification panels list the witness values."""
        console = Console(record=True, width=100)
        error = create_falsification_error(41, "h is 2 mod 4", {"h": "4"})

        error.format_rich_message(console)
        output = console.export_text()

        assert "CRITICAL" in output
        assert "FalsificationError at p=41" in output
        assert "h = 4" in output

    def test_all_errors_share_the_base(self):
        """Every specific error is a QuarticAuditError."""
        for cls in (DomainError, StructuralError, FalsificationError, ConfigError):
            assert issubclass(cls, QuarticAuditError)


@pytest.mark.unit
class TestSpecificErrors:
    """Test the specialised error classes."""

    def test_structural_error_default_remedy(self):
        """Structural errors point at a miscomputation."""
        error = StructuralError("sum of e·f is 3")

        assert "miscomputation" in (error.remedy or "")
        assert error.severity == ErrorSeverity.ERROR

    def test_falsification_error_carries_witness(self):
        """Falsifications are critical and keep the claim and witness."""
        error = create_falsification_error(41, "h is even", {"h": "3"})

        assert isinstance(error, FalsificationError)
        assert error.severity == ErrorSeverity.CRITICAL
        assert error.claim == "h is even"
        assert error.witness == {"h": "3"}
        assert error.metadata["witness"] == {"h": "3"}
        assert "p=41" in str(error)

    def test_create_domain_error(self):
        """The factory attaches a prime context only when p is given."""
        with_p = create_domain_error("not 1 mod 8", p=13)
        without_p = create_domain_error("empty range")

        assert with_p.context is not None
        assert with_p.context.format_location() == "p=13"
        assert without_p.context is None

    def test_config_error_suggestions(self):
        """Unknown names get close-match suggestions and a remedy."""
        error = ConfigError(
            issue="Unknown profile 'quik'",
            config_key="quik",
            valid_options=["default", "quick", "thorough"],
        )

        assert "quick" in error.suggestions
        assert error.remedy == "Valid options: default, quick, thorough"

    def test_fixture_error_location(self):
        """Fixture errors point at file and line."""
        error = FixtureError("bad record", "oracle.csv", 3)

        assert error.context is not None
        assert error.context.format_location() == "oracle.csv:3"


@pytest.mark.unit
class TestSuggestionEngine:
    """Test close-match suggestions."""

    def test_exact_match_case_insensitive(self):
        """A case-insensitive exact match comes first."""
        engine = SuggestionEngine()
        assert engine.suggest_corrections("QUICK", ["default", "quick"])[0] == "quick"

    def test_typo(self):
        """Transposed letters still find the option."""
        engine = SuggestionEngine()
        assert "thorough" in engine.suggest_corrections("thorugh", ["thorough", "quick"])

    def test_no_options(self):
        """No options, no suggestions."""
        assert SuggestionEngine().suggest_corrections("x", []) == []

    def test_max_suggestions(self):
        """The number of suggestions is capped."""
        engine = SuggestionEngine(max_suggestions=2)
        options = ["jsonl", "json", "jsonx", "jsony"]
        assert len(engine.suggest_corrections("json", options)) <= 2
