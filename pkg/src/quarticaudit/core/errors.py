"""Error taxonomy and structured error handling for quarticaudit.

Every failure the toolkit can report falls in one of four buckets:

* ``DomainError``: an input violates a precondition (composite p, perfect
  square, reducible polynomial). The CLI maps these to exit code 2.
* ``StructuralError``: an internal computation produced something that cannot
  be a group order or a valid factorization. These point at a bug upstream.
* ``FalsificationError``: a computed fact contradicts a claimed result. Scans
  abort on these unless told to keep going; the CLI exits with code 1.
* ``ConfigError`` / ``FixtureError``: bad configuration or oracle fixture data.
"""

import difflib
import json
from abc import ABC, abstractmethod
from collections.abc import Sequence
from enum import Enum
from typing import Any

from rich.console import Console
from rich.panel import Panel
from rich.text import Text


class ErrorSeverity(str, Enum):
    """Severity levels for errors."""

    CRITICAL = "critical"  # Contradicts a claimed result
    ERROR = "error"  # Computation cannot continue
    WARNING = "warning"  # Result degraded but usable
    INFO = "info"


SEVERITY_STYLES = {
    ErrorSeverity.CRITICAL: "bold red",
    ErrorSeverity.ERROR: "red",
    ErrorSeverity.WARNING: "yellow",
    ErrorSeverity.INFO: "blue",
}


class ErrorContext(ABC):
    """Abstract base class for error context providers."""

    @abstractmethod
    def format_location(self) -> str:
        """Format where in the computation the error occurred."""

    @abstractmethod
    def get_metadata(self) -> dict[str, Any]:
        """Get structured metadata for logging."""


class PrimeContext(ErrorContext):
    """Context for per-prime computations."""

    def __init__(self, p: int, stage: str | None = None):
        self.p = p
        self.stage = stage

    def format_location(self) -> str:
        """Format as 'p=41/stage'."""
        location = f"p={self.p}"
        if self.stage:
            location += f"/{self.stage}"
        return location

    def get_metadata(self) -> dict[str, Any]:
        return {"p": str(self.p), "stage": self.stage}


class FieldContext(ErrorContext):
    """Context for computations inside a quartic field."""

    def __init__(self, poly: Sequence[int], stage: str | None = None):
        self.poly = tuple(poly)
        self.stage = stage

    def format_location(self) -> str:
        """Format as 'field[c0,...,c4]/stage'."""
        location = "field[" + ",".join(str(c) for c in self.poly) + "]"
        if self.stage:
            location += f"/{self.stage}"
        return location

    def get_metadata(self) -> dict[str, Any]:
        return {"poly": [str(c) for c in self.poly], "stage": self.stage}


class RangeContext(ErrorContext):
    """Context for range scans."""

    def __init__(self, lo: int, hi: int):
        self.lo = lo
        self.hi = hi

    def format_location(self) -> str:
        return f"range[{self.lo}, {self.hi}]"

    def get_metadata(self) -> dict[str, Any]:
        return {"lo": str(self.lo), "hi": str(self.hi)}


class FileLineContext(ErrorContext):
    """Context for errors tied to a line of an input file."""

    def __init__(self, file_path: str, line_number: int | None = None):
        self.file_path = file_path
        self.line_number = line_number

    def format_location(self) -> str:
        if self.line_number is None:
            return self.file_path
        return f"{self.file_path}:{self.line_number}"

    def get_metadata(self) -> dict[str, Any]:
        return {"file_path": self.file_path, "line_number": self.line_number}


class SuggestionEngine:
    """Close-match suggestions for mistyped names (profiles, tags, formats)."""

    def __init__(self, max_suggestions: int = 3, min_similarity: float = 0.6):
        self.max_suggestions = max_suggestions
        self.min_similarity = min_similarity

    def suggest_corrections(
        self, input_str: str, valid_options: Sequence[str]
    ) -> list[str]:
        """Rank valid options by similarity to the input.

        Case-insensitive exact matches come first, then difflib close matches,
        then options sharing a prefix with the input.
        """
        if not valid_options:
            return []

        lowered = {option.lower(): option for option in valid_options}
        suggestions: list[str] = []
        if input_str.lower() in lowered:
            suggestions.append(lowered[input_str.lower()])

        close = difflib.get_close_matches(
            input_str.lower(),
            list(lowered),
            n=self.max_suggestions,
            cutoff=self.min_similarity,
        )
        suggestions.extend(lowered[match] for match in close)

        prefix = input_str[:2].lower()
        if prefix:
            suggestions.extend(
                option for option in valid_options if option.lower().startswith(prefix)
            )

        return list(dict.fromkeys(suggestions))[: self.max_suggestions]


class QuarticAuditError(Exception):
    """Base class for all quarticaudit errors with structured messaging."""

    def __init__(
        self,
        issue: str,
        context: ErrorContext | None = None,
        remedy: str | None = None,
        suggestions: list[str] | None = None,
        severity: ErrorSeverity = ErrorSeverity.ERROR,
        metadata: dict[str, Any] | None = None,
    ):
        self.issue = issue
        self.context = context
        self.remedy = remedy
        self.suggestions = suggestions or []
        self.severity = severity
        self.metadata = metadata or {}
        self.category = self.__class__.__name__

        super().__init__(self.format_message())

    def format_message(self) -> str:
        """Format the error message as 'Category - location - issue - remedy'."""
        parts = [self.category]
        if self.context:
            parts.append(self.context.format_location())
        parts.append(self.issue)
        if self.remedy:
            parts.append(self.remedy)
        return " - ".join(parts)

    def format_rich_message(self, console: Console | None = None) -> None:
        """Print the error as a rich panel: issue, witnesses, remedy, suggestions."""
        if console is None:
            console = Console(stderr=True)
        style = SEVERITY_STYLES.get(self.severity, "red")

        body = Text()
        body.append(self.category, style="bold")
        if self.context:
            body.append(f" at {self.context.format_location()}", style="dim")
        body.append("\n")
        body.append(self.issue, style=style)

        witness = self.metadata.get("witness") or {}
        for key, value in witness.items():
            body.append(f"\n  {key} = {value}", style="magenta")
        if self.remedy:
            body.append(f"\n\nRemedy: {self.remedy}", style="blue")
        if self.suggestions:
            body.append("\n\nDid you mean:", style="bold blue")
            for rank, suggestion in enumerate(self.suggestions, 1):
                body.append(f"\n  {rank}. {suggestion}", style="cyan")

        console.print(
            Panel(body, title=self.severity.value.upper(), title_align="left", border_style=style)
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert error to a dictionary for structured logging."""
        error_dict: dict[str, Any] = {
            "category": self.category,
            "issue": self.issue,
            "severity": self.severity.value,
            "suggestions": self.suggestions,
            "metadata": self.metadata,
        }
        if self.context:
            error_dict["context"] = {
                "location": self.context.format_location(),
                "metadata": self.context.get_metadata(),
            }
        if self.remedy:
            error_dict["remedy"] = self.remedy
        return error_dict

    def to_json(self) -> str:
        """Convert error to JSON for structured logging."""
        return json.dumps(self.to_dict(), indent=2, default=str)


class DomainError(QuarticAuditError):
    """An input is outside the domain of the requested operation."""


class StructuralError(QuarticAuditError):
    """An internal result is impossible (non-integral group order, bad factorization)."""

    def __init__(
        self,
        issue: str,
        context: ErrorContext | None = None,
        remedy: str | None = None,
        metadata: dict[str, Any] | None = None,
    ):
        super().__init__(
            issue=issue,
            context=context,
            remedy=remedy
            or "This indicates a miscomputation upstream; rerun with --debug and report it",
            severity=ErrorSeverity.ERROR,
            metadata=metadata,
        )


class FalsificationError(QuarticAuditError):
    """A computed fact contradicts a claimed result."""

    def __init__(
        self,
        issue: str,
        context: ErrorContext | None = None,
        claim: str | None = None,
        witness: dict[str, str] | None = None,
    ):
        super().__init__(
            issue=issue,
            context=context,
            remedy="Keep the witness: either the implementation or the claim is wrong",
            severity=ErrorSeverity.CRITICAL,
            metadata={"claim": claim, "witness": witness or {}},
        )
        self.claim = claim
        self.witness = witness or {}


class ConfigError(QuarticAuditError):
    """Configuration errors with close-match suggestions."""

    def __init__(
        self,
        issue: str,
        context: ErrorContext | None = None,
        remedy: str | None = None,
        suggestions: list[str] | None = None,
        config_key: str | None = None,
        valid_options: list[str] | None = None,
    ):
        metadata = {"config_key": config_key, "valid_options": valid_options}

        if not suggestions and valid_options and config_key:
            suggestions = SuggestionEngine().suggest_corrections(
                config_key, valid_options
            )

        if not remedy and valid_options:
            remedy = "Valid options: " + ", ".join(valid_options)

        super().__init__(
            issue=issue,
            context=context,
            remedy=remedy,
            suggestions=suggestions,
            severity=ErrorSeverity.ERROR,
            metadata=metadata,
        )


class FixtureError(QuarticAuditError):
    """A line of the oracle fixture file cannot be parsed."""

    def __init__(self, issue: str, file_path: str, line_number: int | None = None):
        super().__init__(
            issue=issue,
            context=FileLineContext(file_path, line_number),
            remedy="Each record is 'c0,c1,c2,c3,c4,h' optionally followed by '# note'",
            severity=ErrorSeverity.ERROR,
        )


def create_domain_error(
    issue: str, p: int | None = None, remedy: str | None = None
) -> DomainError:
    """Create a DomainError, attaching a PrimeContext when p is given."""
    context = PrimeContext(p) if p is not None else None
    return DomainError(issue=issue, context=context, remedy=remedy)


def create_falsification_error(
    p: int, claim: str, witness: dict[str, str] | None = None
) -> FalsificationError:
    """Create a FalsificationError for a claim that failed at prime p."""
    return FalsificationError(
        issue=f"Claim failed: {claim}",
        context=PrimeContext(p),
        claim=claim,
        witness=witness,
    )
