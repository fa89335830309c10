from hypothesis import strategies as st

from bibliorank.core import CitationDistribution


@st.composite
def distributions(draw, max_papers=200, max_levels=40, min_levels=2):
    n_levels = draw(st.integers(min_levels, max_levels))
    values = sorted(draw(st.sets(st.integers(0, 5000), min_size=n_levels, max_size=n_levels)))
    budget = max_papers - n_levels
    freqs = []
    for _ in values:
        extra = draw(st.integers(0, min(budget, 30)))
        budget -= extra
        freqs.append(1 + extra)
    return CitationDistribution(tuple(values), tuple(freqs))


@st.composite
def unique_top(draw, **kw):
    dist = draw(distributions(**kw))
    return CitationDistribution(dist.values, dist.frequencies[:-1] + (1,))
