import os

import numpy as np
import pytest

from lrdpyground.commands.lrd import main
from lrdpyground.harness import (
    ExperimentConfig,
    bundled_configs,
    load_experiment_config,
    run_experiment,
)
from lrdpyground.multilinear import (
    compute_sums,
    exact_sigma1_sq,
    sigma2_sq_from_autocovariances,
)
from lrdpyground.multilinear.oracles import brute_force_y2
from lrdpyground.process import ProcessConfig, gen_coefficients, generate_path, replication_seed

pytestmark = pytest.mark.slow

JOBS = os.cpu_count() or 1
SLOPE_SIZES = [2**p for p in range(8, 15)]


def _log_log_slope(sizes, values):
    return float(np.polyfit(np.log(sizes), np.log(values), 1)[0])


def _failures(result):
    return "; ".join(
        f"{verdict.name}: {verdict.detail or verdict.measured}"
        for verdict in result.verdicts
        if not verdict.passed
    )


def test_second_order_sum_over_many_seeds():
    for trunc_k in range(2, 17):
        coeffs = gen_coefficients(0.7, trunc_k)
        config = ProcessConfig(beta=0.7, trunc_k=trunc_k)
        for n in range(2, 17):
            for index in range(100):
                path = generate_path(
                    config.with_seed(replication_seed(2024, n, index)), n, coeffs=coeffs
                )
                expected = brute_force_y2(path.eps, coeffs.c, n)
                assert compute_sums(path, coeffs).y2 == pytest.approx(
                    expected, rel=1e-12, abs=1e-12
                )


def test_first_order_variance_growth():
    coeffs = gen_coefficients(0.7, 2**20)
    values = [exact_sigma1_sq(n, coeffs) for n in SLOPE_SIZES]
    assert _log_log_slope(SLOPE_SIZES, values) == pytest.approx(3 - 2 * 0.7, abs=0.05)


def test_second_order_variance_growth():
    coeffs = gen_coefficients(0.65, 2**22)
    values = [sigma2_sq_from_autocovariances(n, coeffs) for n in SLOPE_SIZES]
    assert _log_log_slope(SLOPE_SIZES, values) == pytest.approx(4 - 4 * 0.65, abs=0.08)


@pytest.mark.parametrize("name", bundled_configs())
def test_bundled_experiment_passes(name):
    result = run_experiment(load_experiment_config(name), jobs=JOBS)
    assert result.failed_count == 0
    assert result.passed, _failures(result)


def test_huber_estimate_approaches_the_mean():
    config = ExperimentConfig.from_dict(
        {
            "name": "m_equivalence_huber",
            "process": {"beta": 0.7, "trunc_k": 65536},
            "n_grid": [1024, 2048, 4096, 8192, 16384],
            "reps": 1000,
            "master_seed": 20240408,
            "estimators": ["m:huber"],
            "statistics": ["ks_known"],
            "checks": [{"name": "m_equivalence", "estimator": "m:huber"}],
        }
    )
    result = run_experiment(config, jobs=JOBS)
    assert result.passed, _failures(result)


def test_results_do_not_depend_on_the_worker_count(tmp_path):
    argv = ["reduction-check", "--beta", "0.65", "--n-grid", "1024", "2048", "4096"]
    argv += ["--reps", "50", "--seed", "11", "--grid-m", "64"]
    outputs = []
    for jobs in (1, max(JOBS, 2)):
        out = tmp_path / f"jobs{jobs}"
        main(argv + ["--jobs", str(jobs), "--out", str(out)])
        outputs.append({path.name: path.read_bytes() for path in sorted(out.iterdir())})
    assert outputs[0].keys() == {
        "reduction_check_results.csv",
        "reduction_check_medians.csv",
        "reduction_check_verdicts.json",
    }
    assert outputs[0] == outputs[1]
