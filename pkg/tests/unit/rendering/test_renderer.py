"""Unit tests for text, json-lines and csv rendering."""

import csv
import io
import json

import pytest

from quarticaudit.arith.pell import FundUnit
from quarticaudit.quartic.classgroup import Certification, ClassGroupResult
from quarticaudit.rendering.config import OutputFormat, RenderConfig
from quarticaudit.rendering.renderer import (
    REPORT_CSV_FIELDS,
    ReportRenderer,
    parse_jsonl_classgroup,
    parse_jsonl_report,
    stringify_ints,
)


@pytest.fixture
def trivial_group() -> ClassGroupResult:
    """Class group of Q(2^¼) as the relation search reports it."""
    return ClassGroupResult(
        poly=(-2, 0, 0, 0, 1),
        disc=-2048,
        signature=(2, 1),
        h=1,
        elementary_divisors=[],
        h_mod4=1,
        certified=Certification.ORACLE_MATCHED,
        oracle_h=1,
        minkowski_bound=5,
        factor_base_size=4,
        relations=6,
    )


def _renderer(fmt: OutputFormat, **options) -> tuple[ReportRenderer, io.StringIO]:
    stream = io.StringIO()
    return ReportRenderer(stream, RenderConfig(format=fmt, **options)), stream


@pytest.mark.unit
class TestStringifyInts:
    """Test the big-integer-safe json encoding."""

    def test_nested(self):
        """Ints become strings at any depth; bools and None stay."""
        value = {"p": 41, "flags": [True, None], "unit": {"b": 10**40}, "poly": (1, -2)}

        assert stringify_ints(value) == {
            "p": "41",
            "flags": [True, None],
            "unit": {"b": str(10**40)},
            "poly": ["1", "-2"],
        }


@pytest.mark.unit
class TestJsonLines:
    """Test json-lines records."""

    def test_report_round_trip(self, passing_report):
        """A report read back from its record equals the original."""
        renderer, stream = _renderer(OutputFormat.JSONL)
        renderer.emit_report(passing_report)

        line = stream.getvalue()
        record = json.loads(line)
        assert record["kind"] == "report"
        assert record["p"] == "41"
        assert record["unit"] == {"p": "41", "a": "32", "b": "5"}

        parsed = parse_jsonl_report(line)
        assert parsed.model_dump() == passing_report.model_dump()

    def test_report_with_deep_result(self, passing_report, trivial_group):
        """Nested class group results survive the round trip."""
        report = passing_report.model_copy(update={"deep": trivial_group})
        renderer, stream = _renderer(OutputFormat.JSONL)
        renderer.emit_report(report)

        parsed = parse_jsonl_report(stream.getvalue())
        assert parsed.deep == trivial_group

    def test_classgroup_round_trip(self, trivial_group):
        """Class group records parse back."""
        renderer, stream = _renderer(OutputFormat.JSONL)
        renderer.emit_classgroup(trivial_group)

        assert parse_jsonl_classgroup(stream.getvalue()) == trivial_group

    def test_wrong_kind(self, trivial_group):
        """A class group line is not a report."""
        renderer, stream = _renderer(OutputFormat.JSONL)
        renderer.emit_classgroup(trivial_group)

        with pytest.raises(ValueError, match="expected a report record"):
            parse_jsonl_report(stream.getvalue())

    def test_unit(self):
        """Unit records carry the norm."""
        renderer, stream = _renderer(OutputFormat.JSONL)
        renderer.emit_unit(FundUnit(p=41, a=32, b=5))

        assert json.loads(stream.getvalue()) == {
            "kind": "unit",
            "p": "41",
            "a": "32",
            "b": "5",
            "norm": "-1",
        }


@pytest.mark.unit
class TestText:
    """Test the human-readable rendering."""

    def test_report(self, passing_report):
        """One line per check, then the overall verdict."""
        renderer, stream = _renderer(OutputFormat.TEXT)
        renderer.emit_report(passing_report)
        lines = stream.getvalue().splitlines()

        assert lines[0] == "p = 41 (9 mod 16)   eps = 32 + 5*sqrt(41)"
        assert "unit-norm-minus-one" in lines[1]
        assert "fundamental unit has norm -1" in lines[1]
        assert "[a=32;b=5;norm=-1]" in lines[1]
        assert lines[2].strip().startswith("INCONCLUSIVE")
        assert "(cofactor left unfactored)" in lines[2]
        assert lines[-1] == "overall: pass"

    def test_witnesses_optional(self, passing_report):
        """Witnesses can be left out of text output."""
        renderer, stream = _renderer(OutputFormat.TEXT, witnesses=False)
        renderer.emit_report(passing_report)

        assert "a=32" not in stream.getvalue()

    def test_classgroup(self, trivial_group):
        """The trivial group is named as such."""
        text = ReportRenderer(io.StringIO()).classgroup_text(trivial_group)

        assert "field: Q[x]/(x^4 - 2)" in text
        assert "h = 1   h mod 4 = 1" in text
        assert "class group: trivial" in text
        assert "certified: oracle_matched" in text

    def test_unknown_class_number(self, trivial_group):
        """A rank-deficient search reports h as unknown."""
        result = ClassGroupResult(
            **{
                **trivial_group.model_dump(),
                "h": None,
                "elementary_divisors": [],
                "h_mod4": None,
                "certified": Certification.HEURISTIC,
                "rank_deficiency": 1,
                "diagnostic": "relation lattice rank deficient by 1; h unknown",
            }
        )
        text = ReportRenderer(io.StringIO()).classgroup_text(result)

        assert "h = unknown   h mod 4 = unknown" in text
        assert "note: relation lattice rank deficient by 1; h unknown" in text

    def test_unit(self):
        """ε with its coordinates and norm."""
        renderer, stream = _renderer(OutputFormat.TEXT)
        renderer.emit_unit(FundUnit(p=17, a=4, b=1))

        assert stream.getvalue() == "p = 17: eps = 4 + 1*sqrt(17)  a=4 b=1 norm=-1\n"


@pytest.mark.unit
class TestCsv:
    """Test csv rows."""

    def test_header_once(self, passing_report):
        """Two reports share one header."""
        renderer, stream = _renderer(OutputFormat.CSV)
        renderer.emit_report(passing_report)
        renderer.emit_report(passing_report)

        rows = list(csv.DictReader(io.StringIO(stream.getvalue())))
        assert list(rows[0]) == REPORT_CSV_FIELDS
        assert len(rows) == 2
        assert rows[0]["p"] == "41"
        assert rows[0]["overall"] == "pass"
        assert rows[0]["unit-norm-minus-one"] == "pass"
        assert rows[0]["unit-norm-minus-one.witness"] == "a=32;b=5;norm=-1"
        assert rows[0]["quartic-h-mod4"] == ""

    def test_classgroup_row(self, trivial_group):
        """Tuples are comma-joined inside one cell."""
        renderer, stream = _renderer(OutputFormat.CSV)
        renderer.emit_classgroup(trivial_group)

        (row,) = csv.DictReader(io.StringIO(stream.getvalue()))
        assert row["poly"] == "-2,0,0,0,1"
        assert row["signature"] == "2,1"
        assert row["h"] == "1"
        assert row["certified"] == "oracle_matched"
