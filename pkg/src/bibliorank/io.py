"""Text formats: raw counts, aggregated levels, scenarios, tables and reports.

Output is comma separated with ``.`` decimals and LF line endings, and is
byte-identical for identical input.
"""

from __future__ import annotations

import json
from typing import Iterator, NamedTuple, Sequence

from .core import (
    INDICATORS,
    CitationDistribution,
    IndicatorTable,
    build_distribution,
    display,
    display_indicator,
)
from .exceptions import (
    DuplicateLevel,
    EmptyInput,
    NegativeCount,
    NonPositiveFrequency,
    ParseError,
    UnknownDirective,
)
from .scenario import Mutation, ParadoxReport, Scenario

TABLE_COLUMNS = ("u", "n", "i", "p100", "j", "p100_prime", "n_cum", "incites", "piic", "prou", "ppag", "p100_pp")
SERIES_COLUMNS = ("paper_rank", "u", "p100", "p100_prime", "piic", "prou", "ppag", "p100_pp")
FORMATS = ("text", "csv", "json")
INPUT_FORMATS = ("counts", "aggregated")

# csv/json column name -> IndicatorRow attribute
_ATTR = {name: ("p100_double_prime" if name == "p100_pp" else name) for name in TABLE_COLUMNS}


class DatasetDescriptor(NamedTuple):
    source: str
    format: str
    records: int


def _records(text: str) -> Iterator[tuple]:
    """Yield ``(line_number, stripped_line)`` skipping blanks and comments."""
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line and not line.startswith("#"):
            yield number, line


def _int(field: str, number: int, line: str) -> int:
    try:
        return int(field.strip())
    except ValueError:
        raise ParseError(number, line, "expected an integer") from None


def _split(line: str, number: int, width: int = 2) -> list:
    parts = [p.strip() for p in line.split(",")]
    if len(parts) != width:
        raise ParseError(number, line, f"expected {width} comma-separated fields")
    return parts


def parse_counts(text: str) -> CitationDistribution:
    """One citation count per line, or ``id,count`` records under that header."""
    return parse_counts_with_descriptor(text)[0]


def parse_counts_with_descriptor(text: str, source: str = "<text>"):
    records = _records(text)
    counts = []
    first = next(records, None)
    if first is None:
        raise EmptyInput()
    keyed = [p.lower() for p in first[1].split(",")] == ["id", "count"]
    if not keyed:
        records = iter([first, *records])
    for number, line in records:
        field = _split(line, number)[1] if keyed else line
        count = _int(field, number, line)
        if count < 0:
            raise NegativeCount(f"line {number}", count)
        counts.append(count)
    if not counts:
        raise EmptyInput()
    return build_distribution(counts), DatasetDescriptor(source, "counts", len(counts))


def parse_aggregated(text: str) -> CitationDistribution:
    """``u,n`` lines below a ``u,n`` header, in any order."""
    return parse_aggregated_with_descriptor(text)[0]


def parse_aggregated_with_descriptor(text: str, source: str = "<text>"):
    records = _records(text)
    header = next(records, None)
    if header is None:
        raise EmptyInput()
    number, line = header
    if [p.strip().lower() for p in line.split(",")] != ["u", "n"]:
        raise ParseError(number, line, "expected header 'u,n'")
    levels = {}
    for number, line in records:
        u_field, n_field = _split(line, number)
        u, n = _int(u_field, number, line), _int(n_field, number, line)
        if u < 0:
            raise NegativeCount(f"line {number}", u)
        if n < 1:
            raise NonPositiveFrequency(u, n)
        if u in levels:
            raise DuplicateLevel(u)
        levels[u] = n
    if not levels:
        raise EmptyInput()
    dist = CitationDistribution.from_levels(levels.items())
    return dist, DatasetDescriptor(source, "aggregated", len(levels))


def parse_dataset(text: str, input_format: str, source: str = "<text>"):
    """Dispatch on ``input_format``; returns ``(distribution, descriptor)``."""
    if input_format == "counts":
        return parse_counts_with_descriptor(text, source)
    if input_format == "aggregated":
        return parse_aggregated_with_descriptor(text, source)
    raise ValueError(f"unknown input format {input_format!r}")


_ARITY = {"move": 3, "add": 2, "remove": 2}


def parse_scenario(text: str) -> Scenario:
    """Parse ``scenario <name>`` followed by move/add/remove directives.

    Only the syntax is checked here; whether a step applies to the
    distribution is decided when the scenario runs.
    """
    records = _records(text)
    first = next(records, None)
    if first is None:
        raise EmptyInput("scenario file has no 'scenario <name>' line")
    number, line = first
    words = line.split()
    if words[0] != "scenario" or len(words) != 2:
        raise ParseError(number, line, "expected 'scenario <name>'")
    name = words[1]
    steps = []
    for number, line in records:
        directive, *args = line.split()
        if directive not in _ARITY:
            raise UnknownDirective(number, directive)
        if len(args) != _ARITY[directive]:
            raise ParseError(number, line, f"{directive} takes {_ARITY[directive]} arguments")
        values = [_int(a, number, line) for a in args]
        try:
            steps.append(getattr(Mutation, directive)(*values))
        except ValueError as exc:
            raise ParseError(number, line, str(exc)) from None
    return Scenario(name, tuple(steps))


def write_scenario(s: Scenario) -> str:
    return "".join([f"scenario {s.name}\n", *(f"{m}\n" for m in s.steps)])


def write_aggregated(dist: CitationDistribution) -> str:
    lines = ["u,n"] + [f"{u},{n}" for u, n in reversed(dist.levels)]
    return "\n".join(lines) + "\n"


def _display_row(row) -> list:
    out = []
    for name in TABLE_COLUMNS:
        value = getattr(row, _ATTR[name])
        out.append(display_indicator(_ATTR[name], value) if _ATTR[name] in INDICATORS else str(value))
    return out


def _table_csv(table: IndicatorTable) -> str:
    lines = [",".join(TABLE_COLUMNS)] + [",".join(_display_row(row)) for row in table.rows]
    return "\n".join(lines) + "\n"


def _table_text(table: IndicatorTable) -> str:
    cells = [list(TABLE_COLUMNS)] + [_display_row(row) for row in table.rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(TABLE_COLUMNS))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    if table.provenance:
        lines.insert(0, f"# {table.provenance}")
    return "\n".join(lines) + "\n"


def table_to_dict(table: IndicatorTable) -> dict:
    rows = []
    for row in table.rows:
        record = {name: getattr(row, _ATTR[name]) for name in TABLE_COLUMNS}
        record["display"] = {
            name: display_indicator(_ATTR[name], record[name])
            for name in TABLE_COLUMNS
            if _ATTR[name] in INDICATORS
        }
        rows.append(record)
    return {
        "provenance": table.provenance,
        "n_papers": table.n_papers,
        "n_levels": len(table),
        "columns": list(TABLE_COLUMNS),
        "rows": rows,
    }


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def write_table(table: IndicatorTable, format: str = "csv") -> str:
    if format == "csv":
        return _table_csv(table)
    if format == "text":
        return _table_text(table)
    if format == "json":
        return _dumps(table_to_dict(table))
    raise ValueError(f"unknown output format {format!r}")


def write_paper_series(table: IndicatorTable) -> str:
    """One line per paper, most cited first, at full float precision."""
    lines = [",".join(SERIES_COLUMNS)]
    rank = 0
    for row in table.rows:
        values = ",".join(
            repr(getattr(row, _ATTR[name])) for name in SERIES_COLUMNS[2:]
        )
        for _ in range(row.n):
            rank += 1
            lines.append(f"{rank},{row.u},{values}")
    return "\n".join(lines) + "\n"


def report_to_dict(report: ParadoxReport) -> dict:
    return {
        "interval_escapes": [e._asdict() for e in report.interval_escapes],
        "counterintuitive_gains": [g._asdict() for g in report.counterintuitive_gains],
        "p100_cascade": [c._asdict() for c in report.p100_cascade],
        "levels_created": list(report.levels_created),
        "levels_deleted": list(report.levels_deleted),
    }


def _report_text(report: ParadoxReport) -> list:
    lines = []
    for e in report.interval_escapes:
        lines.append(
            f"  escape: {e.indicator} at i={e.i} (u={e.u}) = {display_indicator(e.indicator, e.value)}"
            f" outside [{display_indicator('piic', e.lower)}, {display_indicator('prou', e.upper)}]"
        )
    for g in report.counterintuitive_gains:
        lines.append(
            f"  gain: {g.indicator} at u={g.u} {display_indicator(g.indicator, g.before)}"
            f" -> {display_indicator(g.indicator, g.after)}"
        )
    for c in report.p100_cascade:
        lines.append(f"  p100 cascade: u={c.u} {display(c.before, 2)} -> {display(c.after, 2)}")
    if report.levels_created:
        lines.append("  levels created: " + " ".join(map(str, report.levels_created)))
    if report.levels_deleted:
        lines.append("  levels deleted: " + " ".join(map(str, report.levels_deleted)))
    return lines or ["  no paradoxes"]


def write_scenario_report(name: str, results: Sequence, reports: Sequence[ParadoxReport], format: str = "text") -> str:
    """Serialize the per-step tables of a scenario run with their reports."""
    if format == "json":
        steps = [
            {
                "step": r.step,
                "mutation": None if r.mutation is None else str(r.mutation),
                "table": table_to_dict(r.table),
                "report": report_to_dict(rep),
            }
            for r, rep in zip(results, reports)
        ]
        return _dumps({"scenario": name, "steps": steps})
    if format not in ("text", "csv"):
        raise ValueError(f"unknown output format {format!r}")
    chunks = []
    for r, rep in zip(results, reports):
        title = "base" if r.mutation is None else str(r.mutation)
        chunks.append(f"## step {r.step}: {title}\n")
        chunks.append(write_table(r.table, format))
        chunks.append("\n".join(["paradoxes:", *_report_text(rep)]) + "\n\n")
    return f"# scenario {name}\n\n" + "".join(chunks)
