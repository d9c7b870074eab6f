"""One replication of an experiment.

A replication draws one path of each size in the grid and computes on it
every statistic enabled by the configuration, together with the same-path
proxies of the limiting variables. Its results are stored as a flat
mapping of named values, which becomes one row of the results table.
Values attached to an estimator are named ``statistic[estimator]``:

>>> column_name("ks", "m:sign"), column_name("z1_n")
('ks[m:sign]', 'z1_n')
>>> pointwise_column(0.5, "mean")
'pointwise_0.5[mean]'

Replication ``index`` at size ``n`` always draws its path from the seed
derived from ``(master_seed, n, index)``, so a replication computes the
same values whatever process executes it.
"""

import functools
import math
from dataclasses import dataclass, field

import numpy as np

from ..empirical import EvaluationGrid, process_trace, reduction_residual
from ..estimators import MEstimator, parse_estimator, sample_mean
from ..gof import cvm_estimated, ks_estimated, ks_known
from ..multilinear import compute_sums
from ..process import (
    CoefficientSet,
    gen_coefficients,
    generate_path,
    marginal_model,
    replication_seed,
)
from ..scalings import ScalingSet
from .config import ExperimentConfig
from .proxies import limit_proxies, v1_proxy

__all__ = (
    "ReplicationRecord",
    "run_replication",
    "column_name",
    "pointwise_column",
    "POINTWISE_LEVELS",
)

POINTWISE_LEVELS = (0.1, 0.3, 0.5, 0.7, 0.9)
"""Levels of the model quantiles where the pointwise statistics are taken."""


def column_name(stat: str, estimator: str | None = None) -> str:
    """Name of the value of ``stat``, optionally attached to an estimator."""
    return stat if estimator is None else f"{stat}[{estimator}]"


def pointwise_column(level: float, estimator: str) -> str:
    """Name of ``sqrt(n) (H_n - H(.; theta_hat))`` at the quantile of the given level."""
    return column_name(f"pointwise_{level:g}", estimator)


@dataclass(frozen=True, eq=False)
class ReplicationRecord:
    """What one replication computed.

    ``profiles`` holds, for each estimator, ``a_n^-1 gamma_hat_n``
    on the profile grid of the experiment. When the replication
    failed ``error`` describes the failure and ``values`` only holds
    what was computed before it.
    """

    n: int
    index: int
    seed: int
    values: dict[str, float] = field(default_factory=dict)
    profiles: dict[str, np.ndarray] = field(default_factory=dict, repr=False)
    error: str | None = None

    @property
    def failed(self) -> bool:
        """Whether the replication raised an error."""
        return self.error is not None


@functools.lru_cache(maxsize=4)
def _coefficients(beta: float, trunc_k: int) -> CoefficientSet:
    return gen_coefficients(beta, trunc_k)


def run_replication(
    config: ExperimentConfig,
    n: int,
    index: int,
    scalings: ScalingSet,
    profile_grid: EvaluationGrid,
) -> ReplicationRecord:
    """Simulate replication ``index`` at size ``n`` and compute its statistics.

    Errors raised while computing are captured in the returned record.
    """
    seed = replication_seed(config.master_seed, n, index)
    values: dict[str, float] = {}
    profiles: dict[str, np.ndarray] = {}
    try:
        _compute(config, n, seed, scalings, profile_grid, values, profiles)
    except Exception as err:
        return ReplicationRecord(
            n=n,
            index=index,
            seed=seed,
            values=values,
            profiles=profiles,
            error=f"{type(err).__name__}: {err}",
        )
    return ReplicationRecord(n=n, index=index, seed=seed, values=values, profiles=profiles)


def _compute(
    config: ExperimentConfig,
    n: int,
    seed: int,
    scalings: ScalingSet,
    profile_grid: EvaluationGrid,
    values: dict[str, float],
    profiles: dict[str, np.ndarray],
) -> None:
    process = config.process
    coeffs = _coefficients(process.beta, process.trunc_k)
    marginal = marginal_model(coeffs, process.mu, process.sigma)
    path = generate_path(process.with_seed(seed), n, coeffs=coeffs)
    sums = compute_sums(path, coeffs)
    proxies = limit_proxies(sums, scalings)
    mean = sample_mean(path.y)
    values.update(
        {
            "y1": sums.y1,
            "y2": sums.y2,
            "z1_n": proxies.z1_n,
            "v_n": proxies.v_n,
            "sample_mean": mean,
        }
    )

    if "ks_known" in config.statistics:
        known = ks_known(path, marginal, scalings)
        values["ks_known"] = known.statistic_normalized
        values["ks_known_raw"] = known.statistic_raw
    if "reduction" in config.statistics:
        residual = reduction_residual(path, marginal, sums, scalings, p=2, m=config.grid_m)
        values["reduction_sup"] = residual.sup()

    pointwise_grid = EvaluationGrid(
        points=marginal.quantile(np.array(POINTWISE_LEVELS)), origin=profile_grid.origin
    )
    for name in config.estimators:
        estimator = parse_estimator(name, theta0=process.mu)
        theta_hat = estimator.estimate(path.y)
        values[column_name("theta_hat", name)] = theta_hat

        if isinstance(estimator, MEstimator):
            gap = theta_hat - mean
            values[column_name("m_gap", name)] = abs(n * gap / scalings.sigma_n1)
            values[column_name("sqrt_n_m_gap", name)] = math.sqrt(n) * gap
            values[column_name("v1_proxy", name)] = v1_proxy(mean, theta_hat, scalings)

        if "ks" in config.statistics:
            ks = ks_estimated(path, marginal, estimator, scalings, theta_hat=theta_hat)
            values[column_name("ks", name)] = ks.statistic_normalized
            values[column_name("ks_raw", name)] = ks.statistic_raw
            values[column_name("ks_sigma_n1", name)] = ks.first_order_normalized
        if "cvm" in config.statistics:
            cvm = cvm_estimated(path, marginal, estimator, scalings, theta_hat=theta_hat)
            values[column_name("cvm", name)] = cvm.statistic_normalized
            values[column_name("cvm_raw", name)] = cvm.statistic_raw
            values[column_name("cvm_sigma_n1", name)] = cvm.first_order_normalized
        if "profile" in config.statistics:
            trace = process_trace(
                path, marginal, scalings, "gamma_hat_n", theta_hat=theta_hat, grid=profile_grid
            )
            profiles[name] = trace.values / scalings.a_n
        if "pointwise" in config.statistics:
            trace = process_trace(
                path, marginal, scalings, "gamma_hat_n", theta_hat=theta_hat, grid=pointwise_grid
            )
            # gamma_hat_n carries n / sigma_{n,1}, the classical scale is sqrt(n).
            scaled = trace.values * scalings.sigma_n1 / scalings.sqrt_n
            for level, value in zip(POINTWISE_LEVELS, scaled):
                values[pointwise_column(level, name)] = float(value)
