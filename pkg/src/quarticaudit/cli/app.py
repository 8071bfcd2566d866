"""The quarticaudit command line.

Records go to stdout in the chosen format; diagnostics, error panels and
scan summaries go to stderr. Exit codes: 0 pass, inconclusive or
hypothesis_not_met, 1 falsification, 2 usage or domain error.
"""

import sys
from pathlib import Path

import typer
from rich.console import Console
from rich.table import Table

from ..arith.pell import fundamental_unit
from ..config.models import VerifierConfig
from ..config.settings import get_settings
from ..config.store_manager import ProfileStore
from ..core.chain import Verdict
from ..core.errors import FalsificationError, QuarticAuditError
from ..core.logging import configure_logging, get_logger
from ..quartic.classgroup import ClassGroupResult, class_group, unit_field_class_group
from ..quartic.fixtures import load_fixtures
from ..quartic.order import maximal_order, pure_quartic
from ..rendering.config import OutputFormat, RenderConfig
from ..rendering.renderer import ReportRenderer
from ..verify.models import ScanSummary
from ..verify.verifier import report_falsification, scan_range, verify_prime

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_USAGE = 2

app = typer.Typer(
    name="quarticaudit",
    help="Verify class number parity claims for Q(p^(1/4)) prime by prime.",
    no_args_is_help=True,
    add_completion=False,
)

stderr = Console(stderr=True)

FormatOption = typer.Option(OutputFormat.TEXT, "--format", "-f", help="Record format")
ProfileOption = typer.Option(None, "--profile", help="Configuration profile (default: QA_PROFILE)")


@app.callback()
def main_options(
    log_level: str | None = typer.Option(None, "--log-level", help="stderr log level"),
    debug: bool = typer.Option(False, "--debug", help="Debug logging with tracebacks"),
    log_file: Path | None = typer.Option(None, "--log-file", help="Also write logs to this file"),
) -> None:
    """quarticaudit: mechanical checks of h(Q(p^(1/4))) mod 4."""
    configure_logging(
        level=log_level or get_settings().log_level, debug=debug, log_file=log_file
    )


def _renderer(output: OutputFormat) -> ReportRenderer:
    return ReportRenderer(sys.stdout, RenderConfig(format=output))


def _config(profile: str | None) -> VerifierConfig:
    return ProfileStore.resolve(profile or get_settings().profile)


def _fail(error: QuarticAuditError) -> typer.Exit:
    if isinstance(error, FalsificationError):
        get_logger().log_falsification(error)
        return typer.Exit(EXIT_FALSIFIED)
    get_logger().log_error(error)
    return typer.Exit(EXIT_USAGE)


@app.command()
def verify(
    p: int = typer.Argument(..., help="The prime to verify"),
    deep: bool = typer.Option(False, "--deep", help="Also compute quartic class groups"),
    output: OutputFormat = FormatOption,
    profile: str | None = ProfileOption,
    fixtures: Path | None = typer.Option(None, "--fixtures", help="Oracle fixture file"),
) -> None:
    """Run every applicable check on one prime."""
    try:
        config = _config(profile)
        table = load_fixtures(fixtures) if deep else None
        report = verify_prime(p, deep=deep, config=config, fixtures=table)
    except QuarticAuditError as e:
        raise _fail(e) from e

    _renderer(output).emit_report(report)
    if report.overall == Verdict.INCONCLUSIVE:
        undecided = [c.tag.value for c in report.checks if c.verdict == Verdict.INCONCLUSIVE]
        get_logger().log_warning(
            f"p={p}: direct class group checks undecided: {undecided}",
            category="deep",
            p=p,
            checks=undecided,
        )
    if report.overall == Verdict.FAIL:
        stderr.print(f"[bold red]p={p}: falsified by {[c.tag.value for c in report.failed()]}")
        raise typer.Exit(EXIT_FALSIFIED)


@app.command()
def scan(
    lo: int = typer.Option(..., "--from", help="Smallest integer of the range"),
    hi: int = typer.Option(..., "--to", help="Largest integer of the range"),
    mod16: int | None = typer.Option(None, "--mod16", help="Only primes with this residue mod 16"),
    deep_max: int = typer.Option(0, "--deep-max", help="Deep checks for p up to this bound"),
    jobs: int | None = typer.Option(None, "--jobs", "-j", min=1, help="Worker processes"),
    output: OutputFormat = FormatOption,
    keep_going: bool = typer.Option(False, "--keep-going", help="Do not stop at a falsification"),
    profile: str | None = ProfileOption,
    fixtures: Path | None = typer.Option(None, "--fixtures", help="Oracle fixture file"),
    error_log: Path | None = typer.Option(
        None, "--error-log", help="Write every falsification of the scan as JSON"
    ),
) -> None:
    """Verify every prime in a range, in order."""
    summary = ScanSummary(lo=lo, hi=hi)
    renderer = _renderer(output)
    falsifications: list[QuarticAuditError] = []
    try:
        config = _config(profile)
        scan_update: dict[str, object] = {"keep_going": keep_going or config.scan.keep_going}
        if jobs is not None:
            scan_update["jobs"] = jobs
        config = config.model_copy(
            update={"scan": config.scan.model_copy(update=scan_update)}
        )
        table = load_fixtures(fixtures) if deep_max else None
        for report in scan_range(
            lo, hi, mod16, deep_max, config=config, fixtures=table, summary=summary
        ):
            renderer.emit_report(report)
            sys.stdout.flush()
            if report.overall == Verdict.FAIL and config.scan.keep_going:
                falsifications.append(report_falsification(report))
    except FalsificationError as e:
        _print_summary(summary)
        _write_error_log(error_log, [e])
        raise _fail(e) from e
    except QuarticAuditError as e:
        raise _fail(e) from e

    _print_summary(summary)
    if falsifications:
        get_logger().aggregate_errors(falsifications)
    _write_error_log(error_log, falsifications)
    if summary.falsifications:
        raise typer.Exit(EXIT_FALSIFIED)


def _write_error_log(path: Path | None, errors: list[QuarticAuditError]) -> None:
    if path is not None:
        get_logger().export_error_log(path, errors)
        stderr.print(f"error log written to {path}")


def _print_summary(summary: ScanSummary) -> None:
    counts = ", ".join(f"{k}={v}" for k, v in sorted(summary.by_overall.items())) or "no primes"
    stderr.print(
        f"scan [{summary.lo}, {summary.hi}]: {summary.total} reports ({counts}); "
        f"{summary.inconclusive_checks} inconclusive checks"
    )
    if summary.falsifications:
        stderr.print(f"[bold red]falsified at p = {summary.falsifications}")
    if summary.aborted:
        stderr.print("[red]scan aborted at the first falsification (use --keep-going to continue)")


@app.command()
def unit(
    p: int = typer.Argument(..., help="A prime p ≡ 1 (mod 4)"),
    output: OutputFormat = FormatOption,
) -> None:
    """Fundamental unit a + b*sqrt(p) of norm -1."""
    try:
        result = fundamental_unit(p)
    except QuarticAuditError as e:
        raise _fail(e) from e
    _renderer(output).emit_unit(result)


def _parse_poly(text: str) -> list[int]:
    try:
        return [int(c) for c in text.split(",")]
    except ValueError as e:
        raise typer.BadParameter(f"expected comma-separated integers, got {text!r}") from e


@app.command()
def classgroup(
    poly: str | None = typer.Option(None, "--poly", help="c0,c1,c2,c3,c4 (constant term first)"),
    pure_quartic_p: int | None = typer.Option(None, "--pure-quartic", help="Use x^4 - p"),
    unit_field_p: int | None = typer.Option(None, "--unit-field", help="Use x^4 - 2a*x^2 - 1"),
    output: OutputFormat = FormatOption,
    profile: str | None = ProfileOption,
    fixtures: Path | None = typer.Option(None, "--fixtures", help="Oracle fixture file"),
) -> None:
    """Class group of one quartic field."""
    chosen = [opt for opt in (poly, pure_quartic_p, unit_field_p) if opt is not None]
    if len(chosen) != 1:
        raise typer.BadParameter("give exactly one of --poly, --pure-quartic, --unit-field")

    try:
        config = _config(profile).classgroup
        table = load_fixtures(fixtures)
        result: ClassGroupResult
        if unit_field_p is not None:
            result = unit_field_class_group(unit_field_p, config, table)
        elif pure_quartic_p is not None:
            result = class_group(maximal_order(pure_quartic(pure_quartic_p)), config, table)
        else:
            assert poly is not None
            result = class_group(maximal_order(_parse_poly(poly)), config, table)
    except QuarticAuditError as e:
        raise _fail(e) from e
    _renderer(output).emit_classgroup(result)


@app.command()
def profiles() -> None:
    """List the configuration profiles."""
    table = Table(title="quarticaudit profiles")
    table.add_column("profile", style="cyan")
    table.add_column("trial cap")
    table.add_column("relation radii")
    table.add_column("deep primes")
    for name in ProfileStore.list_profiles():
        config = ProfileStore.resolve(name)
        table.add_row(
            name,
            str(config.arithmetic.trial_division_cap),
            f"{config.classgroup.relation_radius}/{config.classgroup.order_relation_radius}",
            ",".join(str(p) for p in config.deep.primes) or "none",
        )
    Console().print(table)


def main() -> None:
    """Entry point for the quarticaudit console script."""
    sys.set_int_max_str_digits(0)
    app()


if __name__ == "__main__":
    main()
