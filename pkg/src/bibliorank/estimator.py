"""scikit-learn compatible wrapper around the percentile indicators."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .core import (
    CitationDistribution,
    assign_ranks,
    build_distribution,
    check_indicator,
    compute,
    indicator_table,
    interval,
)


def _as_counts(X, name="X"):
    arr = np.asarray(X)
    if arr.ndim == 2:
        if arr.shape[1] != 1:
            raise ValueError(f"{name} must hold a single column of citation counts, got shape {arr.shape}")
    elif arr.ndim != 1:
        raise ValueError(f"{name} must be 1-d or a single column, got {arr.ndim} dimensions")
    flat = arr.reshape(-1)
    if flat.size and not np.issubdtype(flat.dtype, np.integer):
        if not np.issubdtype(flat.dtype, np.floating) or not np.all(np.isfinite(flat)):
            raise ValueError(f"{name} must contain finite integer citation counts")
        if np.any(flat != np.round(flat)):
            raise ValueError(f"{name} must contain whole-number citation counts")
    return arr, flat.astype(np.int64)


class CitationPercentileTransformer(TransformerMixin, BaseEstimator):
    """Map citation counts to percentile values within a reference set.

    ``fit`` learns the reference set; ``transform`` looks up each count's
    indicator value.  Counts that do not occur in the reference set have no
    rank and raise ``ValueError``.

    Parameters
    ----------
    indicator : str, default="p100_prime"
        One of ``p100``, ``p100_prime``, ``piic``, ``incites``, ``prou``,
        ``ppag``, ``p100_double_prime``.

    Attributes
    ----------
    distribution_ : CitationDistribution
    table_ : IndicatorTable
        Every indicator for every level, for inspection.
    levels_ : ndarray of shape (n_levels,)
        Unique citation counts, ascending.
    values_ : ndarray of shape (n_levels,)
        Indicator value at each level.
    """

    def __init__(self, indicator="p100_prime"):
        self.indicator = indicator

    def fit(self, X, y=None, sample_weight=None):
        """Learn the reference set.

        ``sample_weight``, when given, holds the integer number of papers at
        each entry of ``X`` (aggregated input).
        """
        check_indicator(self.indicator)
        _, counts = _as_counts(X)
        if sample_weight is None:
            dist = build_distribution(counts.tolist())
        else:
            weights = np.asarray(sample_weight).reshape(-1)
            if weights.shape != counts.shape:
                raise ValueError("sample_weight must have one entry per sample")
            if np.any(weights != np.round(weights)):
                raise ValueError("sample_weight must be whole paper counts")
            total = {}
            for u, w in zip(counts.tolist(), weights.astype(np.int64).tolist()):
                total[u] = total.get(u, 0) + w
            dist = CitationDistribution.from_levels((u, w) for u, w in total.items() if w)
        ranks = assign_ranks(dist)
        self.values_ = np.asarray(compute(ranks, self.indicator), dtype=np.float64)
        self.distribution_ = dist
        self.levels_ = np.asarray(dist.values, dtype=np.int64)
        self._ranks = ranks
        self.n_features_in_ = 1
        return self

    @property
    def table_(self):
        check_is_fitted(self, "distribution_")
        return indicator_table(self.distribution_)

    def _level_index(self, X):
        check_is_fitted(self, "distribution_")
        arr, counts = _as_counts(X)
        idx = np.searchsorted(self.levels_, counts)
        idx = np.clip(idx, 0, len(self.levels_) - 1)
        unseen = self.levels_[idx] != counts
        if np.any(unseen):
            missing = np.unique(counts[unseen])[:5].tolist()
            raise ValueError(f"citation counts not in the reference set: {missing}")
        return arr, idx

    def transform(self, X):
        arr, idx = self._level_index(X)
        return self.values_[idx].reshape(arr.shape).astype(np.float64)

    def uncertainty_interval(self, X):
        """Lower (PiIC) and upper (PRou) interval bounds for each count."""
        arr, idx = self._level_index(X)
        bounds = np.asarray([(b.lower, b.upper) for b in interval(self._ranks)])
        lower, upper = bounds[idx, 0], bounds[idx, 1]
        return lower.reshape(arr.shape), upper.reshape(arr.shape)

    def get_feature_names_out(self, input_features=None):
        return np.asarray([self.indicator], dtype=object)
