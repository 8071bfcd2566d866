"""Record rendering for the command line."""

from .config import OutputFormat, RenderConfig
from .renderer import ReportRenderer, parse_jsonl_classgroup, parse_jsonl_report

__all__ = [
    "OutputFormat",
    "RenderConfig",
    "ReportRenderer",
    "parse_jsonl_classgroup",
    "parse_jsonl_report",
]
