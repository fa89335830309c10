"""Percentile indicators over the unique citation values of a reference set.

Every indicator is a function of three integers per citation level: the
unique-value rank ``i``, the number of papers with strictly fewer citations
``j`` and the number of tied papers ``n``.  Magnitudes of the citation counts
never enter the formulas.
"""

from __future__ import annotations

import operator
from collections import Counter
from dataclasses import dataclass, fields
from decimal import ROUND_HALF_UP, Decimal
from typing import Iterable, NamedTuple, Optional

from .exceptions import DegenerateDistribution, EmptyInput, InputError, NegativeCount, NonPositiveFrequency

INDICATORS = ("p100", "p100_prime", "piic", "incites", "prou", "ppag", "p100_double_prime")

# indicators normalised by i_max or j_max; undefined for a single level
RANK_NORMALISED = ("p100", "p100_prime", "p100_double_prime")

# only InCites counts from the top, so a smaller value is the better one
DESCENDING = frozenset({"incites"})

DISPLAY_DECIMALS = {name: (1 if name == "p100" else 2) for name in INDICATORS}


@dataclass(frozen=True)
class CitationDistribution:
    """Unique citation values ``values`` (ascending) with paper counts ``frequencies``."""

    values: tuple
    frequencies: tuple

    def __post_init__(self):
        values = tuple(operator.index(u) for u in self.values)
        frequencies = tuple(operator.index(n) for n in self.frequencies)
        if len(values) != len(frequencies):
            raise InputError("values and frequencies differ in length")
        if not values:
            raise EmptyInput()
        for k, (u, n) in enumerate(zip(values, frequencies)):
            if u < 0:
                raise NegativeCount(f"level {k}", u)
            if n < 1:
                raise NonPositiveFrequency(u, n)
        if any(a >= b for a, b in zip(values, values[1:])):
            raise InputError("citation values must be strictly increasing")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "frequencies", frequencies)

    @classmethod
    def from_levels(cls, levels: Iterable[tuple]) -> "CitationDistribution":
        """Build from ``(u, n)`` pairs in any order; duplicates are rejected."""
        levels = sorted(levels)
        return cls(tuple(u for u, _ in levels), tuple(n for _, n in levels))

    @property
    def levels(self):
        return tuple(zip(self.values, self.frequencies))

    @property
    def n_papers(self) -> int:
        return sum(self.frequencies)

    @property
    def n_levels(self) -> int:
        return len(self.values)

    @property
    def total_citations(self) -> int:
        return sum(u * n for u, n in self.levels)

    def expand(self) -> list:
        """Return one citation count per paper, ascending."""
        return [u for u, n in self.levels for _ in range(n)]

    def __len__(self):
        return self.n_levels


def build_distribution(counts: Iterable) -> CitationDistribution:
    """Aggregate raw per-paper citation counts into a distribution.

    Raises ``EmptyInput`` for an empty sequence and ``NegativeCount`` with the
    offending index for any negative entry.
    """
    tally = Counter()
    for index, raw in enumerate(counts):
        try:
            count = operator.index(raw)
        except TypeError:
            if isinstance(raw, float) and raw.is_integer():
                count = int(raw)
            else:
                raise InputError(f"citation count at index {index} is not an integer: {raw!r}") from None
        if count < 0:
            raise NegativeCount(index, count)
        tally[count] += 1
    if not tally:
        raise EmptyInput()
    return CitationDistribution.from_levels(tally.items())


@dataclass(frozen=True)
class RankAssignment:
    """Per-level ranks of a distribution.

    ``j[k]`` counts papers with fewer citations than level ``k`` and
    ``n_cum[k]`` counts papers with at least as many; they always sum to
    ``n_papers``.
    """

    values: tuple
    frequencies: tuple
    j: tuple
    n_cum: tuple

    @property
    def i(self) -> range:
        return range(len(self.values))

    @property
    def i_max(self) -> int:
        return len(self.values) - 1

    @property
    def j_max(self) -> int:
        return self.j[-1]

    @property
    def n_papers(self) -> int:
        return self.n_cum[0]

    @property
    def j_next(self) -> tuple:
        """``j`` of the following level, with ``n_papers`` past the top."""
        return self.j[1:] + (self.n_papers,)


def assign_ranks(dist: CitationDistribution) -> RankAssignment:
    j, below = [], 0
    for n in dist.frequencies:
        j.append(below)
        below += n
    n_cum, above = [], 0
    for n in reversed(dist.frequencies):
        above += n
        n_cum.append(above)
    n_cum.reverse()
    return RankAssignment(dist.values, dist.frequencies, tuple(j), tuple(n_cum))


def _require_levels(ranks: RankAssignment, indicator: str) -> None:
    if ranks.i_max < 1:
        raise DegenerateDistribution(
            [indicator], "a single unique citation value cannot be both rank 0 and rank 100"
        )


def p100(ranks: RankAssignment) -> tuple:
    _require_levels(ranks, "p100")
    return tuple(100.0 * i / ranks.i_max for i in ranks.i)


def p100_prime(ranks: RankAssignment) -> tuple:
    if ranks.j_max < 1:
        raise DegenerateDistribution(["p100_prime"], "all papers tie at one citation value")
    return tuple(100.0 * j / ranks.j_max for j in ranks.j)


def piic_and_incites(ranks: RankAssignment) -> tuple:
    """Return ``(piic, incites)`` pairs; InCites counts papers from the top."""
    N = ranks.n_papers
    return tuple((100.0 * j / N, 100.0 * c / N) for j, c in zip(ranks.j, ranks.n_cum))


def piic(ranks: RankAssignment) -> tuple:
    N = ranks.n_papers
    return tuple(100.0 * j / N for j in ranks.j)


def incites(ranks: RankAssignment) -> tuple:
    N = ranks.n_papers
    return tuple(100.0 * c / N for c in ranks.n_cum)


def prou(ranks: RankAssignment) -> tuple:
    N = ranks.n_papers
    return tuple(100.0 * jn / N for jn in ranks.j_next)


def ppag(ranks: RankAssignment) -> tuple:
    # mean of the individual percentiles (j+1)/N .. (j+n)/N of the tied papers
    N = ranks.n_papers
    return tuple(100.0 * (2 * j + n + 1) / (2 * N) for j, n in zip(ranks.j, ranks.frequencies))


class UncertaintyInterval(NamedTuple):
    lower: float
    upper: float
    midpoint: float

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def contains(self, value: float, tol: float = 0.0) -> bool:
        return self.lower - tol <= value <= self.upper + tol


def interval(ranks: RankAssignment) -> tuple:
    N = ranks.n_papers
    return tuple(
        UncertaintyInterval(100.0 * j / N, 100.0 * jn / N, 100.0 * (2 * j + n) / (2 * N))
        for j, jn, n in zip(ranks.j, ranks.j_next, ranks.frequencies)
    )


def p100_double_prime(ranks: RankAssignment) -> tuple:
    """Interpolate inside the uncertainty interval by the P100 position.

    Evaluated as ``100 * (j*i_max + n*i) / (N*i_max)`` so that the top level
    lands on exactly 100 whatever the number of tied papers there.
    """
    if ranks.i_max < 1:
        raise DegenerateDistribution(
            ["p100_double_prime"], "a single unique citation value has no P100 position"
        )
    N, i_max = ranks.n_papers, ranks.i_max
    return tuple(
        100.0 * (j * i_max + n * i) / (N * i_max)
        for i, j, n in zip(ranks.i, ranks.j, ranks.frequencies)
    )


_COMPUTE = {
    "p100": p100,
    "p100_prime": p100_prime,
    "piic": piic,
    "incites": incites,
    "prou": prou,
    "ppag": ppag,
    "p100_double_prime": p100_double_prime,
}


def check_indicator(name: str) -> str:
    if name not in _COMPUTE:
        raise ValueError(f"unknown indicator {name!r}; expected one of {', '.join(INDICATORS)}")
    return name


def compute(ranks: RankAssignment, indicator: str) -> tuple:
    """Per-level values (ascending ``u``) of one indicator."""
    return _COMPUTE[check_indicator(indicator)](ranks)


@dataclass(frozen=True)
class IndicatorRow:
    u: int
    n: int
    i: int
    p100: float
    j: int
    p100_prime: float
    n_cum: int
    incites: float
    piic: float
    prou: float
    ppag: float
    p100_double_prime: float

    def interval(self) -> UncertaintyInterval:
        return UncertaintyInterval(self.piic, self.prou, (self.piic + self.prou) / 2)


ROW_FIELDS = tuple(f.name for f in fields(IndicatorRow))


@dataclass(frozen=True)
class IndicatorTable:
    """All indicators for every level, highest citation value first."""

    rows: tuple
    provenance: str = ""

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    @property
    def n_papers(self) -> int:
        return self.rows[-1].n_cum

    def ascending(self) -> tuple:
        return self.rows[::-1]

    def column(self, name: str) -> tuple:
        """Column values in ascending ``u`` order (rank ``i`` = position)."""
        return tuple(getattr(row, name) for row in self.ascending())

    def by_value(self) -> dict:
        return {row.u: row for row in self.rows}

    def row_at(self, u: int) -> IndicatorRow:
        try:
            return self.by_value()[u]
        except KeyError:
            raise KeyError(f"no level with {u} citations") from None


def indicator_table(dist: CitationDistribution, provenance: str = "") -> IndicatorTable:
    ranks = assign_ranks(dist)
    if ranks.i_max < 1:
        raise DegenerateDistribution(RANK_NORMALISED, "only one unique citation value")
    cols = {name: compute(ranks, name) for name in INDICATORS}
    rows = [
        IndicatorRow(
            u=ranks.values[i],
            n=ranks.frequencies[i],
            i=i,
            p100=cols["p100"][i],
            j=ranks.j[i],
            p100_prime=cols["p100_prime"][i],
            n_cum=ranks.n_cum[i],
            incites=cols["incites"][i],
            piic=cols["piic"][i],
            prou=cols["prou"][i],
            ppag=cols["ppag"][i],
            p100_double_prime=cols["p100_double_prime"][i],
        )
        for i in reversed(ranks.i)
    ]
    return IndicatorTable(tuple(rows), provenance)


class IndicatorMean(NamedTuple):
    level_mean: float
    paper_weighted_mean: float


def indicator_means(table: IndicatorTable) -> dict:
    """Mean over unique levels and mean over papers, per indicator."""
    weights = table.column("n")
    total = sum(weights)
    out = {}
    for name in INDICATORS:
        col = table.column(name)
        out[name] = IndicatorMean(
            sum(col) / len(col),
            sum(w * v for w, v in zip(weights, col)) / total,
        )
    return out


class ClassReport(NamedTuple):
    min_citations: int
    paper_count: int


def class_report(dist: CitationDistribution, indicator: str, threshold: float) -> Optional[ClassReport]:
    """Smallest citation count whose indicator reaches ``threshold``.

    The boundary is closed.  For ``incites`` (smaller is better) a level
    qualifies when its value is at most ``threshold``.  Returns ``None``
    when no level qualifies.
    """
    check_indicator(indicator)
    if not 0 < threshold < 100:
        raise ValueError(f"threshold must lie strictly between 0 and 100, got {threshold}")
    ranks = assign_ranks(dist)
    values = compute(ranks, indicator)
    for k, value in enumerate(values):
        ok = value <= threshold if indicator in DESCENDING else value >= threshold
        if ok:
            return ClassReport(ranks.values[k], ranks.n_cum[k])
    return None


def display(value: float, decimals: int) -> str:
    """Format ``value`` rounding half away from zero.

    Rounds the shortest decimal representation of the float, so a value
    printed as ``0.145`` becomes ``0.15`` regardless of binary error.
    """
    quantum = Decimal(1).scaleb(-decimals)
    return str(Decimal(repr(float(value))).quantize(quantum, rounding=ROUND_HALF_UP))


def display_indicator(name: str, value: float) -> str:
    return display(value, DISPLAY_DECIMALS[name])
