"""Structured logging for quarticaudit.

Diagnostics always go to stderr through a rich handler; stdout carries only
records (reports, class groups, units) so that json-lines and csv output can
be piped.
"""

import json
import logging
from collections import Counter
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from rich.console import Console
from rich.logging import RichHandler

from .errors import ErrorSeverity, FalsificationError, QuarticAuditError

FILE_FORMAT = "%(asctime)s %(levelname)-8s %(name)s: %(message)s"


class QuarticAuditLogger:
    """Rich stderr logger that understands the quarticaudit error taxonomy.

    Structured payloads travel on each record as ``record.structured_data``
    so a file or test handler can pick them up without parsing messages.
    """

    def __init__(
        self,
        name: str = "quarticaudit",
        level: str = "WARNING",
        enable_rich: bool = True,
        log_file: Path | str | None = None,
    ):
        self.name = name
        self.base_level = getattr(logging, level.upper())
        self.console = Console(stderr=True) if enable_rich else None
        self.debug_mode = False

        self.logger = logging.getLogger(name)
        self.logger.setLevel(self.base_level)
        for handler in list(self.logger.handlers):
            self.logger.removeHandler(handler)
            handler.close()
        self.logger.propagate = False

        if self.console is not None:
            handler = RichHandler(
                console=self.console,
                show_path=False,
                markup=False,
                rich_tracebacks=True,
            )
            handler.setFormatter(logging.Formatter("%(message)s"))
            self.logger.addHandler(handler)

        if log_file is not None:
            path = Path(log_file)
            path.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(path, encoding="utf-8")
            file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
            self.logger.addHandler(file_handler)

    def enable_debug_mode(self, enabled: bool = True) -> None:
        """Switch debug output on, or back to the configured level."""
        self.debug_mode = enabled
        self.logger.setLevel(logging.DEBUG if enabled else self.base_level)

    def log_error(
        self, error: QuarticAuditError, p: int | None = None, show_rich: bool = True
    ) -> None:
        """Log an error; ``p`` names the prime being processed when it failed."""
        payload = error.to_dict()
        if p is not None:
            payload["p"] = p
        self.logger.error("%s", error.format_message(), extra={"structured_data": payload})
        if show_rich and self.console is not None:
            error.format_rich_message(self.console)

    def log_falsification(self, error: FalsificationError) -> None:
        """Log a computed fact that contradicts a claimed result."""
        self.logger.critical(
            "FALSIFICATION %s",
            error.format_message(),
            extra={"structured_data": error.to_dict()},
        )
        if self.console is not None:
            error.format_rich_message(self.console)

    def log_warning(self, message: str, category: str = "general", **fields: Any) -> None:
        self.logger.warning(
            "[%s] %s", category, message, extra={"structured_data": {"category": category, **fields}}
        )

    def aggregate_errors(self, errors: list[QuarticAuditError]) -> dict[str, Any]:
        """Log a batch of errors and return their counts by type and severity."""
        summary = summarize_errors(errors)
        for error in errors:
            self.logger.error("%s", error.format_message())
        if errors and self.console is not None:
            by_type = ", ".join(f"{k}={v}" for k, v in summary["by_type"].items())
            self.console.print(f"{summary['count']} error(s): {by_type}")
        return summary

    def export_error_log(self, output_path: Path | str, errors: list[QuarticAuditError]) -> Path:
        """Write the errors and their summary as one JSON document."""
        path = Path(output_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        document = {
            "written_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "summary": summarize_errors(errors),
            "errors": [error.to_dict() for error in errors],
        }
        path.write_text(json.dumps(document, indent=2, default=str), encoding="utf-8")
        return path


def summarize_errors(errors: list[QuarticAuditError]) -> dict[str, Any]:
    """Counts by error type and severity; ``falsified`` marks any critical error."""
    return {
        "count": len(errors),
        "by_type": dict(Counter(e.category for e in errors)),
        "by_severity": dict(Counter(e.severity.value for e in errors)),
        "falsified": any(e.severity == ErrorSeverity.CRITICAL for e in errors),
    }


_global_logger: QuarticAuditLogger | None = None


def get_logger() -> QuarticAuditLogger:
    """The process-wide logger, created with defaults on first use."""
    global _global_logger
    if _global_logger is None:
        _global_logger = QuarticAuditLogger()
    return _global_logger


def configure_logging(
    level: str = "WARNING", debug: bool = False, log_file: Path | str | None = None
) -> QuarticAuditLogger:
    """Install a freshly configured process-wide logger."""
    global _global_logger
    _global_logger = QuarticAuditLogger(level=level, log_file=log_file)
    if debug:
        _global_logger.enable_debug_mode()
    return _global_logger
