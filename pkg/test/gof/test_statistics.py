import math

import numpy as np
import pytest
import scipy.integrate
import scipy.stats

from lrdpyground.estimators import KnownLocation, MeanEstimator, parse_estimator
from lrdpyground.exceptions import NumericDomainError, RegimeError
from lrdpyground.gof import (
    Normalization,
    cvm_estimated,
    cvm_limit_constant,
    cvm_order_statistic_sum,
    ks_estimated,
    ks_known,
    regime_normalization,
)
from lrdpyground.process import (
    MarginalModel,
    ProcessConfig,
    gen_coefficients,
    generate_path,
    marginal_model,
)
from lrdpyground.scalings import Regime, build_scaling_set

N = 200


def _setup(beta, mu=1.0, sigma=2.0, seed=17):
    coeffs = gen_coefficients(beta, 128)
    config = ProcessConfig(beta=beta, trunc_k=128, mu=mu, sigma=sigma, seed=seed)
    path = generate_path(config, N, coeffs=coeffs)
    return path, marginal_model(coeffs, mu=mu, sigma=sigma), build_scaling_set(config, N)


def test_ks_known_matches_kolmogorov_smirnov():
    path, marginal, scalings = _setup(0.65)
    result = ks_known(path, marginal, scalings)
    expected = scipy.stats.kstest(path.y, marginal.location_cdf).statistic
    assert result.statistic_raw == pytest.approx(expected, abs=1e-14)
    assert result.normalization is Normalization.SIGMA_N1_N
    assert result.statistic_normalized == pytest.approx(N * expected / scalings.sigma_n1)
    assert (result.estimator_used, result.theta_hat) == ("none", 1.0)


def test_ks_with_the_true_location_is_the_known_statistic():
    path, marginal, scalings = _setup(0.65)
    known = ks_known(path, marginal, scalings)
    estimated = ks_estimated(path, marginal, KnownLocation(1.0), scalings)
    assert estimated.statistic_raw == known.statistic_raw
    assert estimated.first_order_normalized == pytest.approx(known.statistic_normalized)


def test_ks_estimated_uses_the_estimate():
    path, marginal, scalings = _setup(0.65)
    result = ks_estimated(path, marginal, MeanEstimator(), scalings)
    theta_hat = float(path.y.mean())
    assert result.theta_hat == pytest.approx(theta_hat)
    expected = scipy.stats.kstest(path.y, lambda x: marginal.location_cdf(x, theta_hat))
    assert result.statistic_raw == pytest.approx(expected.statistic, abs=1e-12)
    assert result.normalization is Normalization.SIGMA_N2_N
    assert result.normalization_value == pytest.approx(N / scalings.sigma_n2)


def test_precomputed_estimate_is_reused():
    path, marginal, scalings = _setup(0.65)
    result = ks_estimated(path, marginal, MeanEstimator(), scalings, theta_hat=1.25)
    assert result.theta_hat == 1.25


@pytest.mark.parametrize("estimator", ["mean", "m:sign", "m:huber"])
def test_cvm_matches_scipy(estimator):
    path, marginal, scalings = _setup(0.65)
    result = cvm_estimated(path, marginal, parse_estimator(estimator), scalings)
    expected = scipy.stats.cramervonmises(
        path.y, lambda x: marginal.location_cdf(x, result.theta_hat)
    ).statistic
    assert result.statistic_raw * N == pytest.approx(expected, rel=1e-10)
    assert result.stat == "cvm"


def test_cvm_is_scaled_by_the_squared_factor():
    path, marginal, scalings = _setup(0.85)
    result = cvm_estimated(path, marginal, MeanEstimator(), scalings)
    assert result.normalization is Normalization.SQRT_N
    assert result.normalization_value == pytest.approx(N)
    assert result.statistic_normalized == pytest.approx(result.statistic_raw * N)
    assert result.first_order_normalized == pytest.approx(
        result.statistic_raw * scalings.first_order_scale**2
    )


def test_cvm_far_from_the_sample():
    path, marginal, scalings = _setup(0.65)
    with pytest.raises(NumericDomainError):
        cvm_estimated(path, marginal, MeanEstimator(), scalings, theta_hat=1e3)


@pytest.mark.parametrize(
    "beta,requested,expected",
    [
        (0.65, None, Normalization.SIGMA_N2_N),
        (0.65, "sigma_n1_n", Normalization.SIGMA_N1_N),
        (0.65, Normalization.SIGMA_N2_N, Normalization.SIGMA_N2_N),
        (0.85, None, Normalization.SQRT_N),
        (0.85, "sigma_n1_n", Normalization.SIGMA_N1_N),
        (0.85, "sqrt_n", Normalization.SQRT_N),
    ],
)
def test_regime_normalization(beta, requested, expected):
    scalings = build_scaling_set(ProcessConfig(beta=beta, trunc_k=64), 64)
    assert regime_normalization(scalings, requested) is expected


@pytest.mark.parametrize("beta,requested", [(0.65, "sqrt_n"), (0.85, "sigma_n2_n")])
def test_normalization_outside_its_regime(beta, requested):
    scalings = build_scaling_set(ProcessConfig(beta=beta, trunc_k=64), 64)
    with pytest.raises(RegimeError):
        regime_normalization(scalings, requested)


def test_unknown_normalization():
    scalings = build_scaling_set(ProcessConfig(beta=0.65, trunc_k=64), 64)
    with pytest.raises(ValueError):
        regime_normalization(scalings, "log_n")


def test_record():
    path, marginal, scalings = _setup(0.65)
    record = ks_estimated(path, marginal, MeanEstimator(), scalings).to_record(N, 0.65, 17)
    assert set(record) == {
        "stat",
        "raw",
        "normalized",
        "normalization",
        "normalized_sigma_n1",
        "estimator",
        "theta_hat",
        "n",
        "beta",
        "seed",
    }
    assert record["normalization"] == "sigma_n2_n"
    assert record["estimator"] == "mean"


def test_regime_is_recorded():
    path, marginal, scalings = _setup(0.85)
    assert ks_known(path, marginal, scalings).regime is Regime.BETA_ABOVE_3_4


@pytest.mark.parametrize("var_x", [0.5, 1.0, 4.0])
def test_cvm_limit_constant(var_x):
    expected = 1 / (6 * math.sqrt(3) * math.pi) / var_x**2
    assert cvm_limit_constant(MarginalModel(var_x=var_x)) == pytest.approx(expected, rel=1e-9)


@pytest.mark.parametrize("size", [1, 7, 50])
def test_cvm_order_statistic_formula_matches_quadrature(size):
    u = np.sort(np.random.default_rng(size).uniform(size=size))
    knots = np.concatenate(([0.0], u, [1.0]))
    integral = 0.0
    for i in range(size + 1):
        level = i / size
        value, _ = scipy.integrate.quad(
            lambda t, level=level: (level - t) ** 2, knots[i], knots[i + 1], epsabs=1e-13
        )
        integral += value
    assert cvm_order_statistic_sum(u) == pytest.approx(size * integral, abs=1e-6)
