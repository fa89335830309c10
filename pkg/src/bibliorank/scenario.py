"""Mutate citation distributions and look for paradoxical indicator behaviour.

Three kinds of anomaly are detected:

* interval escapes: a tie-handling indicator leaving ``[piic, prou]``;
* counterintuitive gains: papers whose citation count did not change are
  rated better after some other paper moved;
* P100 cascades: creation or deletion of a unique citation value shifting
  the P100 value of untouched levels.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .core import (
    DESCENDING,
    CitationDistribution,
    IndicatorTable,
    check_indicator,
    indicator_table,
)
from .exceptions import (
    BiblioRankError,
    EmptyResult,
    InsufficientPapers,
    ScenarioStepError,
    StructureMismatch,
    UnknownLevel,
)

TOLERANCE = 1e-9

ESCAPE_INDICATORS = ("p100_prime", "ppag", "p100_double_prime")
GAIN_INDICATORS = ("p100_prime", "piic", "prou", "ppag", "p100_double_prime")

MUTATION_KINDS = ("move", "add", "remove")


@dataclass(frozen=True)
class Mutation:
    """Move, add or remove ``count`` papers at given citation values."""

    kind: str
    count: int
    from_u: Optional[int] = None
    to_u: Optional[int] = None

    def __post_init__(self):
        if self.kind not in MUTATION_KINDS:
            raise ValueError(f"unknown mutation kind {self.kind!r}")
        if self.count < 1:
            raise ValueError("mutation count must be positive")
        needs_from = self.kind in ("move", "remove")
        needs_to = self.kind in ("move", "add")
        if needs_from != (self.from_u is not None) or needs_to != (self.to_u is not None):
            raise ValueError(f"{self.kind} mutation has wrong endpoints")
        for u in (self.from_u, self.to_u):
            if u is not None and u < 0:
                raise ValueError("citation values must be non-negative")
        if self.kind == "move" and self.from_u == self.to_u:
            raise ValueError("move must change the citation value")

    @classmethod
    def move(cls, count, from_u, to_u):
        return cls("move", count, from_u, to_u)

    @classmethod
    def add(cls, count, u):
        return cls("add", count, to_u=u)

    @classmethod
    def remove(cls, count, u):
        return cls("remove", count, from_u=u)

    @property
    def touched(self) -> frozenset:
        return frozenset(u for u in (self.from_u, self.to_u) if u is not None)

    def inverse(self) -> "Mutation":
        if self.kind == "move":
            return Mutation.move(self.count, self.to_u, self.from_u)
        if self.kind == "add":
            return Mutation.remove(self.count, self.to_u)
        return Mutation.add(self.count, self.from_u)

    def __str__(self):
        ends = [u for u in (self.from_u, self.to_u) if u is not None]
        return " ".join(str(x) for x in [self.kind, self.count, *ends])


@dataclass(frozen=True)
class Scenario:
    name: str
    steps: tuple = ()
    base: Optional[CitationDistribution] = None


def apply_mutation(dist: CitationDistribution, m: Mutation) -> CitationDistribution:
    freq = Counter(dict(dist.levels))
    if m.from_u is not None:
        if m.from_u not in freq:
            raise UnknownLevel(m.from_u)
        if freq[m.from_u] < m.count:
            raise InsufficientPapers(m.from_u, m.count, freq[m.from_u])
        freq[m.from_u] -= m.count
    if m.to_u is not None:
        freq[m.to_u] += m.count
    levels = [(u, n) for u, n in freq.items() if n > 0]
    if not levels:
        raise EmptyResult()
    return CitationDistribution.from_levels(levels)


class StepResult(NamedTuple):
    step: int
    mutation: Optional[Mutation]
    distribution: CitationDistribution
    table: IndicatorTable


def run_scenario(s: Scenario, base: Optional[CitationDistribution] = None) -> list:
    """Tables for the base distribution (step 0) and after each mutation.

    Errors are re-raised as ``ScenarioStepError`` carrying the 1-based index
    of the failing step (0 when the base itself is unusable).
    """
    dist = base if base is not None else s.base
    if dist is None:
        raise ValueError(f"scenario {s.name!r} has no base distribution")
    try:
        results = [StepResult(0, None, dist, indicator_table(dist, f"{s.name}: base"))]
    except BiblioRankError as exc:
        raise ScenarioStepError(0, exc) from exc
    for k, m in enumerate(s.steps, start=1):
        try:
            dist = apply_mutation(dist, m)
            table = indicator_table(dist, f"{s.name}: step {k} ({m})")
        except BiblioRankError as exc:
            raise ScenarioStepError(k, exc) from exc
        results.append(StepResult(k, m, dist, table))
    return results


class IntervalEscape(NamedTuple):
    i: int
    u: int
    indicator: str
    value: float
    lower: float
    upper: float


class Gain(NamedTuple):
    u: int
    indicator: str
    before: float
    after: float


class Cascade(NamedTuple):
    u: int
    before: float
    after: float


@dataclass(frozen=True)
class ParadoxReport:
    interval_escapes: tuple = ()
    counterintuitive_gains: tuple = ()
    p100_cascade: tuple = ()
    levels_created: tuple = ()
    levels_deleted: tuple = ()

    def __bool__(self):
        return bool(self.interval_escapes or self.counterintuitive_gains or self.p100_cascade)

    def merge(self, other: "ParadoxReport") -> "ParadoxReport":
        return ParadoxReport(
            *(getattr(self, f) + getattr(other, f) for f in self.__dataclass_fields__)
        )


def detect_interval_escapes(table: IndicatorTable, indicator: str = "p100_prime", tol: float = TOLERANCE) -> tuple:
    check_indicator(indicator)
    escapes = []
    for row in table.ascending():
        value = getattr(row, indicator)
        if value < row.piic - tol or value > row.prou + tol:
            escapes.append(IntervalEscape(row.i, row.u, indicator, value, row.piic, row.prou))
    return tuple(escapes)


def detect_counterintuitive(
    before: IndicatorTable,
    after: IndicatorTable,
    mutated_values,
    indicators: Sequence[str] = GAIN_INDICATORS,
    tol: float = TOLERANCE,
) -> ParadoxReport:
    """Compare two tables level by level, keyed on citation value.

    Levels whose value is in ``mutated_values`` are skipped: their papers did
    change.  A gain is an improvement beyond ``tol`` (a decrease for
    InCites).  Any P100 change at an untouched level is a cascade.
    """
    old, new = before.by_value(), after.by_value()
    mutated = set(mutated_values)
    gains, cascade = [], []
    for u in sorted(old.keys() & new.keys()):
        if u in mutated:
            continue
        for name in indicators:
            b, a = getattr(old[u], name), getattr(new[u], name)
            delta = b - a if name in DESCENDING else a - b
            if delta > tol:
                gains.append(Gain(u, name, b, a))
        b, a = old[u].p100, new[u].p100
        if abs(a - b) > tol:
            cascade.append(Cascade(u, b, a))
    return ParadoxReport(
        counterintuitive_gains=tuple(gains),
        p100_cascade=tuple(cascade),
        levels_created=tuple(sorted(new.keys() - old.keys())),
        levels_deleted=tuple(sorted(old.keys() - new.keys())),
    )


def step_report(
    results: Sequence[StepResult],
    index: int,
    escape_indicators: Sequence[str] = ESCAPE_INDICATORS,
) -> ParadoxReport:
    current = results[index]
    escapes = tuple(
        e for name in escape_indicators for e in detect_interval_escapes(current.table, name)
    )
    report = ParadoxReport(interval_escapes=escapes)
    if index > 0:
        report = report.merge(
            detect_counterintuitive(results[index - 1].table, current.table, current.mutation.touched)
        )
    return report


def analyze_scenario(results: Sequence[StepResult], escape_indicators: Sequence[str] = ESCAPE_INDICATORS) -> list:
    """One ``ParadoxReport`` per step of a ``run_scenario`` result."""
    return [step_report(results, k, escape_indicators) for k in range(len(results))]


class LevelVerdict(NamedTuple):
    i: int
    u: int
    values: tuple
    non_increasing: bool


def p100pp_improvement_check(tables: Sequence[IndicatorTable], tol: float = TOLERANCE) -> tuple:
    """Whether P100'' at each interior level never rises along ``tables``."""
    if not tables:
        return ()
    structure = tables[0].column("u")
    for t in tables[1:]:
        if t.column("u") != structure:
            raise StructureMismatch(f"levels {t.column('u')} differ from {structure}")
    verdicts = []
    for i in range(1, len(structure) - 1):
        values = tuple(t.column("p100_double_prime")[i] for t in tables)
        ok = all(b <= a + tol for a, b in zip(values, values[1:]))
        verdicts.append(LevelVerdict(i, structure[i], values, ok))
    return tuple(verdicts)
