"""Monte Carlo experiments.

An experiment runs ``reps`` independent replications at every sample size
of its grid, see :mod:`lrdpyground.harness.records`, and then evaluates
the configured checks on them, see :mod:`lrdpyground.harness.checks`.

Replications are independent, so they can be spread over multiple
processes. Each one derives its own seed from the master seed, its sample
size and its index, and the records are sorted before being assembled:
the result does not depend on how many processes were used.

>>> from lrdpyground.harness import ExperimentConfig, run_experiment
>>> config = ExperimentConfig.from_dict({
...     "process": {"beta": 0.7, "trunc_k": 32},
...     "n_grid": [32],
...     "reps": 50,
...     "master_seed": 1,
...     "estimators": ["mean"],
...     "statistics": ["ks_known", "ks"],
... })
>>> result = run_experiment(config)
>>> result.to_table().num_rows, result.failed_count
(50, 0)
"""

import dataclasses
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import pyarrow as pa

from ..empirical import EvaluationGrid
from ..exceptions import LRDError, ParameterDomainError
from ..process import MarginalModel, gen_coefficients, marginal_model
from ..reporting import median_by_n
from ..scalings import ScalingSet, build_scaling_set
from ..version import __version__
from .checks import Verdict, evaluate_check
from .config import ExperimentConfig, config_hash
from .records import ReplicationRecord, run_replication

__all__ = ("ExperimentResult", "run_experiment")

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ExperimentResult:
    """Replications and verdicts of an experiment.

    ``records`` are sorted by sample size and replication index.
    """

    config: ExperimentConfig
    config_hash: str
    records: tuple[ReplicationRecord, ...] = field(repr=False)
    scalings: dict[int, ScalingSet] = field(repr=False)
    marginal: MarginalModel
    profile_grid: EvaluationGrid = field(repr=False)
    verdicts: tuple[Verdict, ...] = ()

    @property
    def passed(self) -> bool:
        """Whether every check passed."""
        return all(verdict.passed for verdict in self.verdicts)

    @property
    def failed_count(self) -> int:
        """Number of replications that raised an error."""
        return sum(record.failed for record in self.records)

    def column(self, name: str, n: int) -> np.ndarray:
        """Values of ``name`` over the replications of size ``n``, ``nan`` where missing."""
        return np.array(
            [record.values.get(name, np.nan) for record in self.records if record.n == n],
            dtype=np.float64,
        )

    def profile_matrix(self, estimator: str, n: int) -> tuple[np.ndarray, np.ndarray]:
        """Profiles of ``estimator`` at size ``n``, one row per replication, with their ``v_n``."""
        rows = [
            record
            for record in self.records
            if record.n == n and not record.failed and estimator in record.profiles
        ]
        if not rows:
            return np.empty((0, len(self.profile_grid))), np.empty(0)
        return (
            np.vstack([record.profiles[estimator] for record in rows]),
            np.array([record.values["v_n"] for record in rows]),
        )

    def value_columns(self) -> list[str]:
        """Names of every value computed by at least one replication, sorted."""
        return sorted({name for record in self.records for name in record.values})

    def to_table(self) -> pa.Table:
        """One row per replication: ``n, index, seed, error`` and every value."""
        columns: dict[str, pa.Array] = {
            "n": pa.array([record.n for record in self.records], type=pa.int64()),
            "index": pa.array([record.index for record in self.records], type=pa.int64()),
            "seed": pa.array([record.seed for record in self.records], type=pa.uint64()),
            "error": pa.array([record.error for record in self.records], type=pa.string()),
        }
        for name in self.value_columns():
            columns[name] = pa.array(
                [record.values.get(name) for record in self.records], type=pa.float64()
            )
        return pa.table(columns)

    def profiles_table(self) -> pa.Table:
        """Tidy ``n, index, estimator, x, value`` rows of every profile trace."""
        points = self.profile_grid.points
        n_column, index_column, estimator_column, x_column, value_column = [], [], [], [], []
        for record in self.records:
            for estimator, values in sorted(record.profiles.items()):
                size = len(values)
                n_column.extend([record.n] * size)
                index_column.extend([record.index] * size)
                estimator_column.extend([estimator] * size)
                x_column.extend(points.tolist())
                value_column.extend(values.tolist())
        return pa.table(
            {
                "n": pa.array(n_column, type=pa.int64()),
                "index": pa.array(index_column, type=pa.int64()),
                "estimator": pa.array(estimator_column, type=pa.string()),
                "x": pa.array(x_column, type=pa.float64()),
                "value": pa.array(value_column, type=pa.float64()),
            }
        )

    def medians_table(self) -> pa.Table:
        """Median of every value at each sample size, see :func:`~lrdpyground.reporting.median_by_n`."""
        return median_by_n(self.to_table(), columns=self.value_columns())

    def verdicts_document(self) -> dict[str, Any]:
        """JSON friendly summary of the verdicts and of the provenance of the run."""
        return {
            "name": self.config.name,
            "config_hash": self.config_hash,
            "tool_version": __version__,
            "master_seed": self.config.master_seed,
            "passed": self.passed,
            "replications": len(self.records),
            "failed_replications": self.failed_count,
            "scalings": [self.scalings[n].to_dict() for n in self.config.n_grid],
            "verdicts": [verdict.to_dict() for verdict in self.verdicts],
        }


def _evaluate(config: ExperimentConfig, result: ExperimentResult) -> tuple[Verdict, ...]:
    verdicts = []
    for spec in config.checks:
        try:
            verdicts.append(evaluate_check(spec, result))
        except LRDError as err:
            logger.warning("Check %s could not be evaluated: %s", spec.name, err)
            verdicts.append(
                Verdict(
                    name=spec.name,
                    passed=False,
                    measured={},
                    thresholds=spec.thresholds,
                    detail=f"{type(err).__name__}: {err}",
                    estimator=spec.estimator,
                    n=spec.n,
                )
            )
    return tuple(verdicts)


def run_experiment(config: ExperimentConfig, jobs: int = 1) -> ExperimentResult:
    """Run every replication of ``config`` and evaluate its checks.

    :param config: The experiment.
    :param jobs: Number of worker processes, ``1`` runs everything in
                 the calling process.
    """
    if not isinstance(jobs, int) or jobs < 1:
        raise ParameterDomainError("jobs", jobs, "integer >= 1")
    process = config.process
    logger.info(
        "Running %s: beta=%g, n_grid=%s, reps=%d, jobs=%d",
        config.name,
        process.beta,
        list(config.n_grid),
        config.reps,
        jobs,
    )
    marginal = marginal_model(
        gen_coefficients(process.beta, process.trunc_k), process.mu, process.sigma
    )
    profile_grid = EvaluationGrid.quantile_grid(marginal, config.grid_m, on="y")
    scalings = {
        n: build_scaling_set(process, n, sigma2_method=config.sigma2_method)  # type: ignore[arg-type]
        for n in config.n_grid
    }

    records: list[ReplicationRecord] = []
    if jobs == 1:
        for n in config.n_grid:
            records.extend(
                run_replication(config, n, index, scalings[n], profile_grid)
                for index in range(config.reps)
            )
            logger.info("Completed %d replications at n=%d", config.reps, n)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [
                executor.submit(run_replication, config, n, index, scalings[n], profile_grid)
                for n in config.n_grid
                for index in range(config.reps)
            ]
            records.extend(future.result() for future in futures)
    records.sort(key=lambda record: (record.n, record.index))

    for record in records:
        if record.failed:
            logger.warning("Replication %d at n=%d failed: %s", record.index, record.n, record.error)

    result = ExperimentResult(
        config=config,
        config_hash=config_hash(config),
        records=tuple(records),
        scalings=scalings,
        marginal=marginal,
        profile_grid=profile_grid,
    )
    result = dataclasses.replace(result, verdicts=_evaluate(config, result))
    logger.info(
        "Finished %s: %d checks, %s",
        config.name,
        len(result.verdicts),
        "all passed" if result.passed else "some failed",
    )
    return result


