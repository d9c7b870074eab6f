import numpy as np
import pytest

from lrdpyground.empirical import EvaluationGrid
from lrdpyground.harness import (
    POINTWISE_LEVELS,
    ExperimentConfig,
    column_name,
    pointwise_column,
    run_replication,
)
from lrdpyground.harness import records as records_module
from lrdpyground.process import gen_coefficients, marginal_model, replication_seed
from lrdpyground.scalings import build_scaling_set

CONFIG = ExperimentConfig.from_dict(
    {
        "process": {"beta": 0.65, "trunc_k": 64, "mu": 1.0, "sigma": 2.0},
        "n_grid": [64],
        "reps": 50,
        "master_seed": 3,
        "estimators": ["mean", "m:sign"],
        "statistics": ["ks_known", "ks", "cvm", "reduction", "profile", "pointwise"],
        "grid_m": 16,
    }
)


@pytest.fixture(scope="module")
def replication_inputs():
    marginal = marginal_model(gen_coefficients(0.65, 64), mu=1.0, sigma=2.0)
    grid = EvaluationGrid.quantile_grid(marginal, 16)
    return build_scaling_set(CONFIG.process, 64), grid


def test_values_of_a_replication(replication_inputs):
    scalings, grid = replication_inputs
    record = run_replication(CONFIG, 64, 4, scalings, grid)
    assert not record.failed
    assert record.seed == replication_seed(3, 64, 4)
    values = record.values
    for name in ("y1", "y2", "z1_n", "v_n", "sample_mean", "ks_known", "reduction_sup"):
        assert np.isfinite(values[name])
    for estimator in ("mean", "m:sign"):
        for stat in ("theta_hat", "ks", "ks_raw", "ks_sigma_n1", "cvm", "cvm_raw"):
            assert column_name(stat, estimator) in values
        for level in POINTWISE_LEVELS:
            assert pointwise_column(level, estimator) in values
        assert record.profiles[estimator].shape == (16,)
    assert "m_gap[m:sign]" in values
    assert "m_gap[mean]" not in values
    assert values["theta_hat[mean]"] == pytest.approx(values["sample_mean"])
    assert values["ks_sigma_n1[mean]"] == pytest.approx(
        values["ks_raw[mean]"] * 64 / scalings.sigma_n1
    )


def test_replications_are_reproducible(replication_inputs):
    scalings, grid = replication_inputs
    first = run_replication(CONFIG, 64, 7, scalings, grid)
    second = run_replication(CONFIG, 64, 7, scalings, grid)
    assert first.values == second.values
    np.testing.assert_array_equal(first.profiles["mean"], second.profiles["mean"])
    other = run_replication(CONFIG, 64, 8, scalings, grid)
    assert other.values["y1"] != first.values["y1"]


def test_failures_are_captured(replication_inputs, monkeypatch):
    scalings, grid = replication_inputs

    def broken(*args):
        raise RuntimeError("boom")

    monkeypatch.setattr(records_module, "compute_sums", broken)
    record = run_replication(CONFIG, 64, 0, scalings, grid)
    assert record.failed
    assert record.error == "RuntimeError: boom"
    assert record.values == {}
