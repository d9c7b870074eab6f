import numpy as np
import pytest

from lrdpyground.empirical import (
    EvaluationGrid,
    ProcessTrace,
    TraceLabel,
    process_trace,
    sup_norm_exact,
)
from lrdpyground.exceptions import ParameterDomainError
from lrdpyground.process import ProcessConfig, gen_coefficients, generate_path, marginal_model
from lrdpyground.scalings import build_scaling_set


@pytest.fixture
def model_path():
    config = ProcessConfig(beta=0.7, trunc_k=64, mu=2.0, sigma=3.0, seed=21)
    path = generate_path(config, 128)
    marginal = marginal_model(gen_coefficients(0.7, 64), mu=2.0, sigma=3.0)
    return path, marginal, build_scaling_set(config, 128)


def test_gamma_n_is_beta_n_after_change_of_variables(model_path):
    path, marginal, scalings = model_path
    beta_n = process_trace(
        path, marginal, scalings, "beta_n", grid=EvaluationGrid.sample_jumps(path.x)
    )
    gamma_n = process_trace(
        path, marginal, scalings, "gamma_n", grid=EvaluationGrid.sample_jumps(path.y)
    )
    np.testing.assert_allclose(gamma_n.values, beta_n.values, atol=1e-9)
    np.testing.assert_allclose(gamma_n.left_limits, beta_n.left_limits, atol=1e-9)


def test_gamma_hat_at_the_true_location(model_path):
    path, marginal, scalings = model_path
    gamma_n = process_trace(path, marginal, scalings, TraceLabel.GAMMA_N)
    gamma_hat_n = process_trace(path, marginal, scalings, "gamma_hat_n", theta_hat=2.0)
    np.testing.assert_array_equal(gamma_hat_n.values, gamma_n.values)
    assert gamma_hat_n.label is TraceLabel.GAMMA_HAT_N


def test_sup_on_the_jumps_is_the_scaled_distance(model_path):
    path, marginal, scalings = model_path
    trace = process_trace(
        path, marginal, scalings, "gamma_n", grid=EvaluationGrid.sample_jumps(path.y)
    )
    distance = sup_norm_exact(path.y, marginal.location_cdf)
    assert trace.sup() == pytest.approx(128 * distance / scalings.sigma_n1, rel=1e-10)
    assert trace.scaling_used == pytest.approx(1 / scalings.sigma_n1)


def test_default_grid_contains_the_jumps(model_path):
    path, marginal, scalings = model_path
    trace = process_trace(path, marginal, scalings, "gamma_n")
    assert np.all(np.isin(path.y, trace.grid.points))
    assert len(trace.grid) == 128 + 512


def test_invalid_requests(model_path):
    path, marginal, scalings = model_path
    with pytest.raises(ParameterDomainError):
        process_trace(path, marginal, scalings, "gamma_hat_n")
    with pytest.raises(ParameterDomainError):
        process_trace(path, marginal, scalings, "gamma_hat_n", theta_hat=float("nan"))
    with pytest.raises(ParameterDomainError):
        process_trace(path, marginal, scalings, "beta_n", theta_hat=0.0)
    with pytest.raises(ParameterDomainError):
        process_trace(path, marginal, scalings, "s_np_residual")
    with pytest.raises(ValueError):
        process_trace(path, marginal, scalings, "delta_n")
    other = build_scaling_set(path.config, 64)
    with pytest.raises(ParameterDomainError):
        process_trace(path, marginal, other, "gamma_n")


def test_trace_validation():
    grid = EvaluationGrid.sample_jumps([0.0, 1.0])
    with pytest.raises(ParameterDomainError):
        ProcessTrace(grid, np.array([1.0]), TraceLabel.BETA_N, 1.0)
    with pytest.raises(ParameterDomainError):
        ProcessTrace(grid, np.array([1.0, np.inf]), TraceLabel.BETA_N, 1.0)
    trace = ProcessTrace(grid, np.array([0.5, -2.0]), TraceLabel.BETA_N, 1.0)
    assert trace.sup() == 2.0
