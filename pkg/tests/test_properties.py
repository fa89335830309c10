"""Invariants that must hold on every distribution."""

from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bibliorank.core import (
    INDICATORS,
    CitationDistribution,
    assign_ranks,
    build_distribution,
    indicator_means,
    indicator_table,
    interval,
)

from oracle import per_level
from strategies import distributions, unique_top

TOL = 1e-9


@given(distributions())
def test_rank_identities(dist):
    ranks = assign_ranks(dist)
    N = dist.n_papers
    assert ranks.j[0] == 0
    for k in ranks.i:
        assert ranks.j[k] + ranks.n_cum[k] == N
        assert ranks.j_next[k] - ranks.j[k] == dist.frequencies[k]
    assert ranks.j_max == N - dist.frequencies[-1]
    assert ranks.j_next[-1] == N
    assert list(ranks.i) == list(range(ranks.i_max + 1))


@given(distributions())
def test_endpoint_anchoring(dist):
    low, high = indicator_table(dist).rows[-1], indicator_table(dist).rows[0]
    assert low.p100 == 0 and high.p100 == 100
    assert low.p100_prime == 0 and high.p100_prime == 100
    assert low.piic == 0 and high.prou == 100
    assert low.p100_double_prime == low.piic
    assert high.p100_double_prime == 100


@given(distributions())
def test_containment(dist):
    for row in indicator_table(dist):
        assert row.piic - TOL <= row.p100_double_prime <= row.prou + TOL
        assert row.piic - TOL <= row.ppag <= row.prou + TOL


@given(unique_top())
def test_p100_prime_contained_with_unique_top(dist):
    for row in indicator_table(dist):
        assert row.piic - TOL <= row.p100_prime <= row.prou + TOL


@given(distributions())
def test_strict_monotonicity(dist):
    table = indicator_table(dist)
    for name in INDICATORS:
        col = table.column(name)
        pairs = list(zip(col, col[1:]))
        if name == "incites":
            assert all(a > b for a, b in pairs)
        else:
            assert all(a < b for a, b in pairs), name


@given(distributions())
def test_exact_identities(dist):
    N = dist.n_papers
    ranks = assign_ranks(dist)
    for row, b in zip(indicator_table(dist).ascending(), interval(ranks)):
        assert row.incites + row.piic == pytest.approx(100, abs=TOL)
        assert row.ppag - b.midpoint == pytest.approx(50 / N, abs=TOL)
        assert row.prou == pytest.approx(row.piic + 100 * row.n / N, abs=TOL)


@given(distributions())
def test_p100_level_mean(dist):
    assert indicator_means(indicator_table(dist))["p100"].level_mean == pytest.approx(50, abs=TOL)


@given(distributions(max_papers=12, max_levels=12))
def test_oracle_equivalence(dist):
    expected = per_level(dist.expand())
    for row in indicator_table(dist):
        ref = expected[row.u]
        assert (row.j, row.n_cum) == (ref["j"], ref["n_cum"])
        for name in INDICATORS:
            assert getattr(row, name) == pytest.approx(float(ref[name]), abs=TOL)


@given(distributions(max_papers=60), st.integers(2, 50))
def test_scale_invariance(dist, factor):
    scaled = CitationDistribution(tuple(u * factor for u in dist.values), dist.frequencies)
    a, b = indicator_table(dist), indicator_table(scaled)
    for ra, rb in zip(a, b):
        assert [getattr(ra, k) for k in INDICATORS] == [getattr(rb, k) for k in INDICATORS]


@given(st.lists(st.integers(0, 100), min_size=1, max_size=150), st.randoms())
def test_aggregation_is_order_independent(counts, rnd):
    shuffled = counts[:]
    rnd.shuffle(shuffled)
    dist = build_distribution(counts)
    assert dist == build_distribution(shuffled)
    assert dist.n_papers == len(counts)
    assert Counter(dist.expand()) == Counter(counts)
    assert build_distribution(dist.expand()) == dist

