"""Small model datasets: citation values 0, 1, 2, ... with given paper counts."""

from bibliorank.core import CitationDistribution


def model(*frequencies):
    return CitationDistribution(tuple(range(len(frequencies))), frequencies)


# initial situation and the five successive modifications
MODIFICATIONS = [
    model(2, 1, 1, 1),
    model(1, 2, 1, 1),
    model(1, 1, 2, 1),
    model(1, 1, 1, 2),
    model(1, 1, 1, 3),
    model(1, 1, 1, 4),
]

FIVE_DISTINCT = model(1, 1, 1, 1, 1)

# printed integer values of P100'' for levels i = 0..3, one list per modification
PRINTED_P100PP = [
    [0, 47, 74, 100],
    [0, 34, 74, 100],
    [0, 27, 67, 100],
    [0, 27, 54, 100],
    [0, 23, 44, 100],
    [0, 19, 39, 100],
]
