"""Per-prime verification reports and range scans."""

from .checks import BUILTIN_CHECKS, Check, CheckContext, register_builtin_checks
from .models import CheckRecord, CheckTag, ProofChainReport, ScanSummary
from .verifier import scan_primes, scan_range, verify_prime

__all__ = [
    "BUILTIN_CHECKS",
    "Check",
    "CheckContext",
    "CheckRecord",
    "CheckTag",
    "ProofChainReport",
    "ScanSummary",
    "register_builtin_checks",
    "scan_primes",
    "scan_range",
    "verify_prime",
]
