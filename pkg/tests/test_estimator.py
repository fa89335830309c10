import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

from bibliorank.core import INDICATORS, indicator_table
from bibliorank.estimator import CitationPercentileTransformer
from bibliorank.exceptions import DegenerateDistribution


@pytest.fixture
def counts():
    return np.array([0, 0, 3, 7, 9])


def test_get_set_params():
    est = CitationPercentileTransformer(indicator="ppag")
    assert est.get_params() == {"indicator": "ppag"}
    assert clone(est.set_params(indicator="prou")).indicator == "prou"


def test_fit_transform_1d(counts):
    out = CitationPercentileTransformer().fit_transform(counts)
    assert out.shape == (5,)
    assert out.tolist() == pytest.approx([0, 0, 50, 75, 100])


def test_column_vector_keeps_shape(counts):
    out = CitationPercentileTransformer("piic").fit(counts).transform(counts.reshape(-1, 1))
    assert out.shape == (5, 1)
    assert out[:, 0].tolist() == pytest.approx([0, 0, 40, 60, 80])


@pytest.mark.parametrize("indicator", INDICATORS)
def test_matches_table(table1, indicator):
    est = CitationPercentileTransformer(indicator).fit(table1.values, sample_weight=table1.frequencies)
    table = indicator_table(table1)
    assert est.transform(table1.values).tolist() == list(table.column(indicator))
    assert est.table_ == table


def test_sample_weight_equals_expansion(table1):
    a = CitationPercentileTransformer().fit(table1.values, sample_weight=table1.frequencies)
    b = CitationPercentileTransformer().fit(np.array(table1.expand()))
    assert a.distribution_ == b.distribution_


def test_unseen_count(counts):
    est = CitationPercentileTransformer().fit(counts)
    with pytest.raises(ValueError, match="not in the reference set"):
        est.transform([4])


def test_not_fitted():
    with pytest.raises(NotFittedError):
        CitationPercentileTransformer().transform([1])


def test_bad_indicator(counts):
    with pytest.raises(ValueError):
        CitationPercentileTransformer("p200").fit(counts)


def test_rejects_multiple_columns():
    with pytest.raises(ValueError):
        CitationPercentileTransformer().fit(np.zeros((3, 2)))


def test_rejects_fractional_counts():
    with pytest.raises(ValueError):
        CitationPercentileTransformer().fit([0.5, 2.0])


def test_float_integers_accepted(counts):
    est = CitationPercentileTransformer().fit(counts.astype(float))
    assert est.transform([3.0]).tolist() == pytest.approx([50])


def test_degenerate_fit():
    with pytest.raises(DegenerateDistribution):
        CitationPercentileTransformer("p100").fit([4, 4, 4])
    assert CitationPercentileTransformer("prou").fit([4, 4, 4]).transform([4]).tolist() == [100.0]


def test_uncertainty_interval(counts):
    lower, upper = CitationPercentileTransformer().fit(counts).uncertainty_interval(counts)
    assert lower.tolist() == pytest.approx([0, 0, 40, 60, 80])
    assert upper.tolist() == pytest.approx([40, 40, 60, 80, 100])


def test_in_pipeline(counts):
    pipe = make_pipeline(CitationPercentileTransformer("p100"), FunctionTransformer(lambda x: x / 100))
    assert pipe.fit_transform(counts).tolist() == pytest.approx([0, 0, 1 / 3, 2 / 3, 1])


def test_feature_names(counts):
    est = CitationPercentileTransformer("ppag").fit(counts)
    assert est.get_feature_names_out().tolist() == ["ppag"]
