"""Oracle class numbers recorded from an independent computer algebra run.

One record per line::

    c0,c1,c2,c3,c4,h  # source note

``#`` starts a comment; blank lines are ignored. The packaged file carries
the format and whatever records have been produced by
``scripts/oracle_fixtures.gp``; ``QA_FIXTURES`` or an explicit path
overrides it.
"""

import logging
from collections.abc import Iterator
from importlib import resources
from pathlib import Path

from pydantic import BaseModel, Field

from ..config.settings import get_settings
from ..core.errors import FixtureError

logger = logging.getLogger(__name__)

PACKAGED_FIXTURES = "oracle_class_numbers.csv"


class FixtureRecord(BaseModel):
    poly: tuple[int, int, int, int, int]
    h: int = Field(..., ge=1)
    note: str = ""
    line: int | None = None

    class Config:
        frozen = True


class FixtureTable:
    """Oracle class numbers keyed by defining polynomial."""

    def __init__(self, records: list[FixtureRecord] | None = None, source: str = "<memory>"):
        self.source = source
        self._records: dict[tuple[int, ...], FixtureRecord] = {}
        for record in records or []:
            self.add(record)

    def add(self, record: FixtureRecord) -> None:
        existing = self._records.get(record.poly)
        if existing is not None and existing.h != record.h:
            raise FixtureError(
                f"conflicting class numbers {existing.h} and {record.h} for {list(record.poly)}",
                self.source,
                record.line,
            )
        self._records[record.poly] = record

    def lookup(self, poly: tuple[int, ...]) -> int | None:
        record = self._records.get(tuple(poly))
        return record.h if record else None

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[FixtureRecord]:
        return iter(self._records.values())

    def __contains__(self, poly: object) -> bool:
        return isinstance(poly, tuple) and poly in self._records


def parse_fixture_line(text: str, source: str, line: int) -> FixtureRecord | None:
    body, _, note = text.partition("#")
    body = body.strip()
    if not body:
        return None
    fields = [f.strip() for f in body.split(",")]
    if len(fields) != 6:
        raise FixtureError(f"expected 6 comma-separated integers, got {len(fields)}", source, line)
    try:
        values = [int(f) for f in fields]
    except ValueError as e:
        raise FixtureError(f"non-integer field: {e}", source, line) from e
    if values[4] != 1:
        raise FixtureError("defining polynomial must be monic (c4 = 1)", source, line)
    if values[5] < 1:
        raise FixtureError(f"class number {values[5]} is not positive", source, line)
    return FixtureRecord(
        poly=(values[0], values[1], values[2], values[3], values[4]),
        h=values[5],
        note=note.strip(),
        line=line,
    )


def parse_fixtures(text: str, source: str = "<string>") -> FixtureTable:
    table = FixtureTable(source=source)
    for number, line in enumerate(text.splitlines(), start=1):
        record = parse_fixture_line(line, source, number)
        if record is not None:
            table.add(record)
    return table


def load_fixtures(path: str | Path | None = None) -> FixtureTable:
    """Load the oracle table from path, ``QA_FIXTURES``, or the packaged file."""
    if path is None:
        path = get_settings().fixtures
    if path is not None:
        path = Path(path)
        if not path.is_file():
            raise FixtureError("fixture file does not exist", str(path))
        table = parse_fixtures(path.read_text(encoding="utf-8"), str(path))
    else:
        packaged = resources.files(__package__).joinpath(PACKAGED_FIXTURES)
        table = parse_fixtures(packaged.read_text(encoding="utf-8"), PACKAGED_FIXTURES)
    logger.debug("loaded %d oracle records from %s", len(table), table.source)
    return table
