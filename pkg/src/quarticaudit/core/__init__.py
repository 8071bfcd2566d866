"""Core plumbing: errors, logging, proof chains and the check registry."""

from .chain import ChainRunner, ChainStep, ChainVerdict, Verdict
from .errors import (
    ConfigError,
    DomainError,
    ErrorSeverity,
    FalsificationError,
    FixtureError,
    QuarticAuditError,
    StructuralError,
)

__all__ = [
    "ChainRunner",
    "ChainStep",
    "ChainVerdict",
    "ConfigError",
    "DomainError",
    "ErrorSeverity",
    "FalsificationError",
    "FixtureError",
    "QuarticAuditError",
    "StructuralError",
    "Verdict",
]
