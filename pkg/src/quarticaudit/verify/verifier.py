"""Per-prime verification and range scans.

``verify_prime`` is a pure function of (p, deep, configuration, fixtures).
``scan_range`` runs it over the primes of an interval, optionally on a
worker pool; reports come back in prime order regardless of which worker
finishes first.
"""

import logging
from collections.abc import Iterator
from multiprocessing import Pool

from sympy import isprime, primerange

from ..config.models import VerifierConfig
from ..core.chain import Verdict
from ..core.errors import (
    DomainError,
    FalsificationError,
    PrimeContext,
    RangeContext,
    StructuralError,
    create_falsification_error,
)
from ..core.registry import CheckRegistry
from ..quartic.fixtures import FixtureTable, load_fixtures
from .checks import Check, CheckContext, register_builtin_checks
from .models import CheckRecord, ProofChainReport, ScanSummary, derive_overall

logger = logging.getLogger(__name__)


def _registered_checks() -> list[Check]:
    register_builtin_checks()
    checks = [CheckRegistry.get(name)() for name in CheckRegistry.list_checks()]
    return sorted(checks, key=lambda check: check.tag.position)


def _run_check(check: Check, ctx: CheckContext) -> CheckRecord:
    """Run one check; precondition and falsification errors become records."""
    try:
        return check.run(ctx)
    except FalsificationError as e:
        logger.error("%s: %s", PrimeContext(ctx.p, check.tag.value).format_location(), e.issue)
        return CheckRecord(tag=check.tag, verdict=Verdict.FAIL, witness=e.witness, note=e.issue)
    except DomainError as e:
        logger.info("%s skipped: %s", check.tag.value, e.issue)
        return CheckRecord(tag=check.tag, verdict=Verdict.INCONCLUSIVE, note=e.issue)
    except StructuralError as e:
        if not check.tag.is_deep:
            raise
        logger.warning("%s: %s", PrimeContext(ctx.p, check.tag.value).format_location(), e.issue)
        return CheckRecord(
            tag=check.tag,
            verdict=Verdict.INCONCLUSIVE,
            note=f"class group computation failed: {e.issue}",
        )


def verify_prime(
    p: int,
    deep: bool = False,
    config: VerifierConfig | None = None,
    fixtures: FixtureTable | None = None,
) -> ProofChainReport:
    """Run every applicable check on the prime p.

    p ≡ 2, 3 (mod 4) runs nothing; p ≡ 5 (mod 8) runs the quadratic checks
    only; both end in hypothesis_not_met. p ≡ 1 (mod 8) runs every shallow
    check, and the class group confirmations when ``deep`` and p is one of
    the configured deep-check primes within the bounds.

    Raises:
        DomainError: p is not prime.
    """
    if not isprime(p):
        raise DomainError(
            issue=f"{p} is not prime",
            context=PrimeContext(p),
            remedy="verify takes a prime p",
        )
    config = config or VerifierConfig()
    if deep and fixtures is None:
        fixtures = load_fixtures()

    ctx = CheckContext(p=p, config=config, deep=deep, fixtures=fixtures)
    records = [_run_check(check, ctx) for check in _registered_checks() if check.applies(ctx)]

    deep_result = None
    if "quartic" in ctx.__dict__:
        deep_result = ctx.quartic
    unit = ctx.unit if "unit" in ctx.__dict__ else None

    report = ProofChainReport(
        p=p,
        class_mod16=p % 16,
        unit=unit,
        checks=records,
        deep=deep_result,
        overall=derive_overall(p, records),
    )
    logger.debug("p=%d: %s over %d checks", p, report.overall.value, len(records))
    return report


# ============================================================================
# Range scans
# ============================================================================

_worker_state: dict[str, object] = {}


def _worker_init(config: VerifierConfig, fixtures: FixtureTable | None, deep_max: int) -> None:
    _worker_state.update(config=config, fixtures=fixtures, deep_max=deep_max)


def _worker_verify(p: int) -> ProofChainReport:
    config = _worker_state["config"]
    deep_max = _worker_state["deep_max"]
    fixtures = _worker_state["fixtures"]
    assert isinstance(config, VerifierConfig) and isinstance(deep_max, int)
    assert fixtures is None or isinstance(fixtures, FixtureTable)
    return verify_prime(p, deep=p <= deep_max, config=config, fixtures=fixtures)


def scan_primes(lo: int, hi: int, filter_mod16: int | None = None) -> list[int]:
    """Primes in [lo, hi], optionally only those ≡ filter_mod16 (mod 16)."""
    primes = [int(q) for q in primerange(max(lo, 2), hi + 1)]
    if filter_mod16 is not None:
        primes = [q for q in primes if q % 16 == filter_mod16]
    return primes


def scan_range(
    lo: int,
    hi: int,
    filter_mod16: int | None = None,
    deep_max: int = 0,
    config: VerifierConfig | None = None,
    fixtures: FixtureTable | None = None,
    summary: ScanSummary | None = None,
) -> Iterator[ProofChainReport]:
    """Reports for the primes of [lo, hi] in increasing order.

    Deep checks run for the configured deep-check primes p ≤ deep_max. A
    failing report is yielded and then, unless ``config.scan.keep_going``,
    the scan stops by raising FalsificationError. ``summary``, when given,
    is updated as reports come in.

    Raises:
        DomainError: lo > hi or filter_mod16 outside 0..15.
        FalsificationError: a report failed and keep_going is off.
    """
    if lo > hi:
        raise DomainError(
            issue=f"empty range: from {lo} exceeds to {hi}",
            context=RangeContext(lo, hi),
            remedy="pass --from no larger than --to",
        )
    if filter_mod16 is not None and not 0 <= filter_mod16 < 16:
        raise DomainError(issue=f"residue {filter_mod16} is not in 0..15", context=RangeContext(lo, hi))

    config = config or VerifierConfig()
    if deep_max and fixtures is None:
        fixtures = load_fixtures()
    primes = scan_primes(lo, hi, filter_mod16)
    logger.info("scanning %d primes in [%d, %d] with %d job(s)", len(primes), lo, hi, config.scan.jobs)

    def stop_on(report: ProofChainReport) -> None:
        if summary is not None:
            summary.add(report)
        if report.overall == Verdict.FAIL and not config.scan.keep_going:
            if summary is not None:
                summary.aborted = True
            raise report_falsification(report)

    if config.scan.jobs == 1 or len(primes) <= 1:
        for p in primes:
            report = verify_prime(p, deep=p <= deep_max, config=config, fixtures=fixtures)
            yield report
            stop_on(report)
        return

    pool = Pool(config.scan.jobs, initializer=_worker_init, initargs=(config, fixtures, deep_max))
    try:
        for report in pool.imap(_worker_verify, primes, chunksize=config.scan.chunksize):
            yield report
            stop_on(report)
        pool.close()
    finally:
        pool.terminate()
        pool.join()


def report_falsification(report: ProofChainReport) -> FalsificationError:
    """The falsification a failed report stands for, witnessed by its failed tags."""
    return create_falsification_error(
        report.p,
        "every applicable check passes",
        {record.tag.value: "fail" for record in report.failed()},
    )
