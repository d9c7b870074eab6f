import numpy as np
import pytest

from lrdpyground.estimators import (
    HuberPsi,
    KnownLocation,
    MeanEstimator,
    MEstimator,
    m_estimate,
    parse_estimator,
    parse_psi,
    sample_mean,
)
from lrdpyground.exceptions import ParameterDomainError, PsiParseError


def test_sign_score_gives_the_median():
    rng = np.random.default_rng(5)
    sample = rng.standard_normal(101)
    assert m_estimate(sample, parse_psi("sign")) == pytest.approx(np.median(sample), abs=1e-8)


def test_sign_score_even_length_midpoint():
    assert m_estimate([4.0, 1.0, 3.0, 2.0], parse_psi("sign")) == pytest.approx(2.5, abs=1e-8)


def test_wide_huber_gives_the_mean():
    rng = np.random.default_rng(6)
    sample = rng.standard_normal(64)
    assert m_estimate(sample, HuberPsi(100.0)) == pytest.approx(sample.mean(), abs=1e-8)


def test_huber_downweights_outliers():
    # Three clipped residuals -x balance the outlier at +1.
    assert m_estimate([0.0, 0.0, 0.0, 100.0], HuberPsi(1.0)) == pytest.approx(1 / 3, abs=1e-8)


def test_far_root_expands_the_bracket():
    # The root sits 100/3 away from the median, past the initial bracket.
    assert m_estimate([0.0, 0.0, 0.0, 1000.0], HuberPsi(100.0)) == pytest.approx(
        100 / 3, abs=1e-7
    )


def test_equivariance():
    rng = np.random.default_rng(7)
    sample = rng.standard_normal(50)
    psi = parse_psi("ssign:0.2")
    assert m_estimate(sample + 3.0, psi) == pytest.approx(m_estimate(sample, psi) + 3.0, abs=1e-7)


@pytest.mark.parametrize("sample", [[], [[1.0, 2.0]]])
def test_invalid_samples(sample):
    with pytest.raises(ParameterDomainError):
        m_estimate(sample, parse_psi("sign"))
    with pytest.raises(ParameterDomainError):
        sample_mean(sample)


def test_invalid_tolerance():
    with pytest.raises(ParameterDomainError):
        m_estimate([1.0, 2.0], parse_psi("sign"), tol=0.0)


def test_estimator_classes():
    sample = np.array([1.0, 2.0, 6.0])
    assert KnownLocation(0.5).estimate(sample) == 0.5
    assert MeanEstimator().estimate(sample) == 3.0
    assert MEstimator(parse_psi("sign")).estimate(sample) == pytest.approx(2.0, abs=1e-8)


@pytest.mark.parametrize(
    "spec,name",
    [
        ("none", "none"),
        ("mean", "mean"),
        ("m:sign", "m:sign"),
        ("m:huber:2", "m:huber:2"),
        ("m:ssign", "m:ssign:0.1"),
    ],
)
def test_parse_estimator(spec, name):
    estimator = parse_estimator(spec)
    assert estimator.name == name
    assert str(estimator) == name


def test_parse_estimator_uses_theta0():
    assert parse_estimator("none", theta0=2.0).estimate(np.zeros(3)) == 2.0


def test_parse_estimator_errors():
    with pytest.raises(ParameterDomainError):
        parse_estimator("median")
    with pytest.raises(PsiParseError):
        parse_estimator("m:tukey")


def test_huber_estimate_agrees_with_a_grid_search():
    rng = np.random.default_rng(2024)
    n = 10_000
    sample = 3.0 + rng.standard_normal(n)
    psi = HuberPsi()
    estimate = m_estimate(sample, psi)
    # Huber at the default constant is 95% efficient for Gaussian data.
    assert abs(estimate - 3.0) < 5 * 1.03 / np.sqrt(n)

    step = 1e-4
    candidates = estimate + step * np.arange(-100, 101)
    objective = [abs(float(np.sum(psi(sample - x)))) for x in candidates]
    assert abs(candidates[int(np.argmin(objective))] - estimate) <= step
