"""Rendering of reports, class groups and units as text, json-lines or csv.

json-lines records carry a ``kind`` key ("report", "classgroup", "unit");
every integer is written as a decimal string so that consumers without big
integer support lose nothing. ``parse_jsonl_report`` reads a report line
back into a ``ProofChainReport``.
"""

import csv
import json
from collections.abc import Mapping
from typing import Any, TextIO

from ..arith.pell import FundUnit
from ..quartic.classgroup import ClassGroupResult
from ..verify.models import CheckTag, ProofChainReport
from .config import OutputFormat, RenderConfig

REPORT_CSV_FIELDS = [
    "p",
    "class_mod16",
    "a",
    "b",
    "overall",
    *(field for tag in CheckTag for field in (tag.value, f"{tag.value}.witness")),
    "deep_h",
    "deep_h_mod4",
    "deep_certified",
]

CLASSGROUP_CSV_FIELDS = [
    "poly",
    "disc",
    "signature",
    "h",
    "h_mod4",
    "elementary_divisors",
    "certified",
    "oracle_h",
    "minkowski_bound",
    "factor_base_size",
    "relations",
    "rank_deficiency",
    "diagnostic",
]

UNIT_CSV_FIELDS = ["p", "a", "b", "norm"]


def stringify_ints(value: Any) -> Any:
    """Recursively replace ints (not bools) by their decimal strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Mapping):
        return {str(k): stringify_ints(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [stringify_ints(v) for v in value]
    return value


def report_record(report: ProofChainReport) -> dict[str, Any]:
    data = report.model_dump(mode="json")
    return {"kind": "report", **stringify_ints(data)}


def classgroup_record(result: ClassGroupResult) -> dict[str, Any]:
    data = result.model_dump(mode="json")
    return {"kind": "classgroup", **stringify_ints(data)}


def unit_record(unit: FundUnit) -> dict[str, Any]:
    return {"kind": "unit", **stringify_ints({"p": unit.p, "a": unit.a, "b": unit.b, "norm": unit.norm})}


def parse_jsonl_report(line: str) -> ProofChainReport:
    """Inverse of the json-lines rendering of a report."""
    data = json.loads(line)
    kind = data.pop("kind", None)
    if kind != "report":
        raise ValueError(f"expected a report record, got kind={kind!r}")
    return ProofChainReport.model_validate(data)


def parse_jsonl_classgroup(line: str) -> ClassGroupResult:
    data = json.loads(line)
    kind = data.pop("kind", None)
    if kind != "classgroup":
        raise ValueError(f"expected a classgroup record, got kind={kind!r}")
    return ClassGroupResult.model_validate(data)


def _flat_witness(witness: Mapping[str, str]) -> str:
    return ";".join(f"{k}={v}" for k, v in witness.items())


def _poly_text(poly: tuple[int, ...]) -> str:
    terms = []
    for degree in range(len(poly) - 1, -1, -1):
        c = poly[degree]
        if c == 0:
            continue
        mono = {0: "", 1: "x"}.get(degree, f"x^{degree}")
        if mono and abs(c) == 1:
            coeff = ""
        else:
            coeff = str(abs(c)) + ("*" if mono else "")
        sign = "-" if c < 0 else "+"
        terms.append((sign, coeff + mono))
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    return text + "".join(f" {s} {t}" for s, t in terms[1:])


class ReportRenderer:
    """Writes records to a stream in the configured format."""

    def __init__(self, stream: TextIO, config: RenderConfig | None = None):
        self.stream = stream
        self.config = config or RenderConfig()
        self._writers: dict[str, "csv.DictWriter[str]"] = {}

    @property
    def format(self) -> OutputFormat:
        return self.config.format

    def _csv_row(self, kind: str, fields: list[str], row: dict[str, Any]) -> None:
        writer = self._writers.get(kind)
        if writer is None:
            writer = csv.DictWriter(self.stream, fieldnames=fields, lineterminator="\n")
            writer.writeheader()
            self._writers[kind] = writer
        writer.writerow(row)

    def _jsonl(self, record: dict[str, Any]) -> None:
        self.stream.write(json.dumps(record, ensure_ascii=False) + "\n")

    # ------------------------------------------------------------------
    # Reports
    # ------------------------------------------------------------------

    def emit_report(self, report: ProofChainReport) -> None:
        if self.format == OutputFormat.JSONL:
            self._jsonl(report_record(report))
        elif self.format == OutputFormat.CSV:
            self._csv_row("report", REPORT_CSV_FIELDS, self._report_row(report))
        else:
            self.stream.write(self.report_text(report))

    def _report_row(self, report: ProofChainReport) -> dict[str, Any]:
        row: dict[str, Any] = {
            "p": report.p,
            "class_mod16": report.class_mod16,
            "a": report.unit.a if report.unit else "",
            "b": report.unit.b if report.unit else "",
            "overall": report.overall.value,
        }
        for record in report.checks:
            row[record.tag.value] = record.verdict.value
            row[f"{record.tag.value}.witness"] = _flat_witness(record.witness)
        if report.deep is not None:
            row["deep_h"] = report.deep.h if report.deep.h is not None else ""
            row["deep_h_mod4"] = report.deep.h_mod4 if report.deep.h_mod4 is not None else ""
            row["deep_certified"] = report.deep.certified.value
        return row

    def report_text(self, report: ProofChainReport) -> str:
        lines = [f"p = {report.p} ({report.class_mod16} mod 16)"]
        if report.unit is not None:
            lines[0] += f"   eps = {report.unit.a} + {report.unit.b}*sqrt({report.p})"
        width = max((len(tag.value) for tag in report.tags), default=0)
        for record in report.checks:
            line = f"  {record.verdict.value.upper():<18} {record.tag.value:<{width}}  {record.tag.label}"
            if self.config.witnesses and record.witness:
                line += f"  [{_flat_witness(record.witness)}]"
            if record.note:
                line += f"  ({record.note})"
            lines.append(line)
        lines.append(f"overall: {report.overall.value}")
        return "\n".join(lines) + "\n"

    # ------------------------------------------------------------------
    # Class groups and units
    # ------------------------------------------------------------------

    def emit_classgroup(self, result: ClassGroupResult) -> None:
        if self.format == OutputFormat.JSONL:
            self._jsonl(classgroup_record(result))
        elif self.format == OutputFormat.CSV:
            row = {
                "poly": ",".join(str(c) for c in result.poly),
                "disc": result.disc,
                "signature": f"{result.signature[0]},{result.signature[1]}",
                "h": result.h if result.h is not None else "",
                "h_mod4": result.h_mod4 if result.h_mod4 is not None else "",
                "elementary_divisors": ",".join(str(d) for d in result.elementary_divisors),
                "certified": result.certified.value,
                "oracle_h": result.oracle_h if result.oracle_h is not None else "",
                "minkowski_bound": result.minkowski_bound,
                "factor_base_size": result.factor_base_size,
                "relations": result.relations,
                "rank_deficiency": result.rank_deficiency,
                "diagnostic": result.diagnostic or "",
            }
            self._csv_row("classgroup", CLASSGROUP_CSV_FIELDS, row)
        else:
            self.stream.write(self.classgroup_text(result))

    def classgroup_text(self, result: ClassGroupResult) -> str:
        structure = " x ".join(f"C{d}" for d in result.elementary_divisors) or "trivial"
        h = "unknown" if result.h is None else str(result.h)
        lines = [
            f"field: Q[x]/({_poly_text(result.poly)})",
            f"  discriminant {result.disc}, signature {result.signature}",
            f"  Minkowski bound {result.minkowski_bound}, {result.factor_base_size} generators, "
            f"{result.relations} relations",
            f"  h = {h}   h mod 4 = {result.h_mod4 if result.h_mod4 is not None else 'unknown'}",
            f"  class group: {structure}",
            f"  certified: {result.certified.value}",
        ]
        if result.diagnostic:
            lines.append(f"  note: {result.diagnostic}")
        return "\n".join(lines) + "\n"

    def emit_unit(self, unit: FundUnit) -> None:
        if self.format == OutputFormat.JSONL:
            self._jsonl(unit_record(unit))
        elif self.format == OutputFormat.CSV:
            row = {"p": unit.p, "a": unit.a, "b": unit.b, "norm": unit.norm}
            self._csv_row("unit", UNIT_CSV_FIELDS, row)
        else:
            self.stream.write(
                f"p = {unit.p}: eps = {unit.a} + {unit.b}*sqrt({unit.p})  a={unit.a} b={unit.b} "
                f"norm={unit.norm}\n"
            )
