import json

import numpy as np
import pyarrow as pa
import pyarrow.compute as pc
import pytest

from lrdpyground.exceptions import NumericDomainError, ParameterDomainError
from lrdpyground.harness import ExperimentConfig, run_experiment
from lrdpyground.harness import experiment as experiment_module
from lrdpyground.reporting import dumps
from lrdpyground.version import __version__

DOCUMENT = {
    "name": "tiny",
    "process": {"beta": 0.65, "trunc_k": 64},
    "n_grid": [32, 64, 128],
    "reps": 50,
    "master_seed": 99,
    "estimators": ["mean", "m:sign"],
    "statistics": ["ks_known", "ks", "reduction", "profile"],
    "grid_m": 16,
    "checks": [
        {"name": "negligibility", "estimator": "mean"},
        {"name": "m_equivalence", "estimator": "m:sign"},
        {"name": "profile_proportionality", "estimator": "mean", "n": 64},
        {"name": "reduction_rate"},
    ],
}


@pytest.fixture(scope="module")
def result():
    return run_experiment(ExperimentConfig.from_dict(DOCUMENT))


def test_replications(result):
    table = result.to_table()
    assert table.num_rows == 150
    assert table.column("n").to_pylist() == [32] * 50 + [64] * 50 + [128] * 50
    assert table.column("index").to_pylist()[:3] == [0, 1, 2]
    assert table.schema.field("seed").type == pa.uint64()
    assert result.failed_count == 0
    assert "ks[mean]" in result.value_columns()
    assert len(result.column("ks[mean]", 64)) == 50


def test_verdicts(result):
    names = [verdict.name for verdict in result.verdicts]
    assert names == ["negligibility", "m_equivalence", "profile_proportionality", "reduction_rate"]
    assert result.verdicts[2].n == 64
    assert result.verdicts[0].n is None
    assert result.passed == all(verdict.passed for verdict in result.verdicts)


def test_profiles(result):
    traces, v_n = result.profile_matrix("mean", 128)
    assert traces.shape == (50, 16)
    assert v_n.shape == (50,)
    empty, _ = result.profile_matrix("m:huber:1.345", 128)
    assert empty.shape == (0, 16)
    profiles = result.profiles_table()
    assert profiles.num_rows == 150 * 2 * 16
    assert profiles.column_names == ["n", "index", "estimator", "x", "value"]


def test_medians(result):
    medians = result.medians_table()
    ks_known = medians.filter(pc.equal(medians.column("statistic"), "ks_known"))
    assert ks_known.column("n").to_pylist() == [32, 64, 128]
    assert ks_known.column("count").to_pylist() == [50, 50, 50]
    expected = np.median(result.column("ks_known", 64))
    assert ks_known.column("median").to_pylist()[1] == pytest.approx(expected)


def test_verdicts_document(result):
    document = result.verdicts_document()
    assert document["config_hash"] == result.config_hash
    assert document["tool_version"] == __version__
    assert document["master_seed"] == 99
    assert document["replications"] == 150
    assert [entry["n"] for entry in document["scalings"]] == [32, 64, 128]
    assert json.loads(dumps(document)) == document


def test_parallel_run_is_identical(result):
    parallel = run_experiment(ExperimentConfig.from_dict(DOCUMENT), jobs=2)
    assert parallel.to_table().equals(result.to_table())
    assert [v.to_dict() for v in parallel.verdicts] == [v.to_dict() for v in result.verdicts]


def test_runs_are_reproducible(result):
    again = run_experiment(ExperimentConfig.from_dict(DOCUMENT))
    assert again.to_table().equals(result.to_table())
    assert again.config_hash == result.config_hash


@pytest.mark.parametrize("jobs", [0, -2, 1.5])
def test_invalid_jobs(jobs):
    with pytest.raises(ParameterDomainError):
        run_experiment(ExperimentConfig.from_dict(DOCUMENT), jobs=jobs)


def test_check_errors_become_failed_verdicts(monkeypatch):
    def failing(spec, result):
        raise NumericDomainError("no data")

    monkeypatch.setattr(experiment_module, "evaluate_check", failing)
    result = run_experiment(ExperimentConfig.from_dict(DOCUMENT))
    assert not result.passed
    assert all(verdict.detail == "NumericDomainError: no data" for verdict in result.verdicts)
