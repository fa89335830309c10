"""Brute-force reference computations, independent of bibliorank's rank code.

Every quantity is derived per paper from the expanded list of citation counts
and kept as an exact ``Fraction``.
"""

from fractions import Fraction


def per_level(counts):
    """Map each unique count to a dict of exact indicator values."""
    counts = list(counts)
    N = len(counts)
    uniq = sorted(set(counts))
    top_ties = counts.count(uniq[-1])
    ordered = sorted(counts)
    out = {}
    for i, u in enumerate(uniq):
        # papers cited less than the item under study
        fewer = sum(1 for c in counts if c < u)
        # the item under study and its ties count as well
        at_most = sum(1 for c in counts if c <= u)
        # each paper gets a distinct position 1..N; ties share the average
        positions = [k + 1 for k, c in enumerate(ordered) if c == u]
        level = {
            "n": len(positions),
            "j": fewer,
            "n_cum": sum(1 for c in counts if c >= u),
            "piic": Fraction(100 * fewer, N),
            "incites": Fraction(100 * sum(1 for c in counts if c >= u), N),
            "prou": Fraction(100 * at_most, N),
            "ppag": Fraction(100 * sum(positions), N * len(positions)),
        }
        if len(uniq) > 1:
            level["p100"] = Fraction(100 * i, len(uniq) - 1)
            level["p100_prime"] = Fraction(100 * fewer, N - top_ties)
            level["p100_double_prime"] = level["piic"] + (level["prou"] - level["piic"]) * level["p100"] / 100
        out[u] = level
    return out
