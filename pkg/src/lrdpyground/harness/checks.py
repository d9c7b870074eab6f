"""Statistical verdicts on the replications of an experiment.

The limit theorems are asymptotic, so none of them can be verified on a
single path. Each check reduces the replications to a handful of measured
values, compares them with thresholds taken from the configuration and
returns a :class:`Verdict`.

The checks are plain functions of arrays, so they can be exercised on
synthetic data:

>>> check_negligibility([1.0, 0.7, 0.4]).passed
True
>>> check_negligibility([1.0, 1.0, 1.0]).passed
False

:func:`evaluate_check` extracts the arrays a check needs from an
:class:`~lrdpyground.harness.experiment.ExperimentResult`.
"""

import dataclasses
import logging
import math
import typing
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np
import scipy.stats

from ..estimators import MEstimator, lambda_pair, parse_estimator
from ..exceptions import (
    InsufficientGridError,
    InternalError,
    NumericDomainError,
    RankClaimError,
    RegimeError,
)
from ..gof import cvm_limit_constant
from ..multilinear import sample_variance_estimate
from ..scalings import Regime, SecondOrderRank, regime_for, second_order_rank
from .config import CheckSpec
from .records import POINTWISE_LEVELS, column_name, pointwise_column

if typing.TYPE_CHECKING:
    from .experiment import ExperimentResult

__all__ = (
    "Verdict",
    "RegressionFit",
    "profile_regression",
    "check_negligibility",
    "check_profile_proportionality",
    "check_m_estimator_branch",
    "check_gaussian_regime",
    "check_reduction_rate",
    "check_known_ks_limit",
    "check_cvm_consistency",
    "check_m_equivalence",
    "check_sigma_psi_positive",
    "check_z1_normality",
    "evaluate_check",
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check: what was measured, against which thresholds."""

    name: str
    passed: bool
    measured: dict[str, float]
    thresholds: dict[str, float]
    detail: str = ""
    estimator: str | None = None
    n: int | None = None

    def to_dict(self) -> dict[str, Any]:
        """JSON friendly representation, non finite measures become ``None``."""
        return {
            "name": self.name,
            "passed": bool(self.passed),
            "estimator": self.estimator,
            "n": self.n,
            "measured": {key: _json_float(value) for key, value in self.measured.items()},
            "thresholds": dict(self.thresholds),
            "detail": self.detail,
        }


def _json_float(value: float) -> float | None:
    value = float(value)
    return value if math.isfinite(value) else None


@dataclass(frozen=True)
class RegressionFit:
    """Least squares fit without intercept, ``r_squared`` is uncentered."""

    coefficients: tuple[float, ...]
    r_squared: float
    residuals: np.ndarray = field(repr=False)


def profile_regression(trace: np.ndarray, regressors: Sequence[np.ndarray]) -> RegressionFit:
    """Regress a trace on fixed functions of the grid, without intercept.

    >>> grid = np.linspace(-2.0, 2.0, 9)
    >>> fit = profile_regression(3.7 * grid, [grid])
    >>> round(fit.coefficients[0], 10), round(fit.r_squared, 10)
    (3.7, 1.0)

    :param trace: Values of the process on the grid.
    :param regressors: One array of values on the grid per fitted component.
    """
    y = np.asarray(trace, dtype=np.float64)
    design = np.column_stack([np.asarray(r, dtype=np.float64) for r in regressors])
    if design.shape[0] != len(y):
        raise NumericDomainError(
            f"trace of {len(y)} points and regressors of {design.shape[0]} points"
        )
    coefficients, *_ = np.linalg.lstsq(design, y, rcond=None)
    residuals = y - design @ coefficients
    total = float(np.dot(y, y))
    r_squared = 1.0 - float(np.dot(residuals, residuals)) / total if total > 0 else 1.0
    return RegressionFit(
        coefficients=tuple(float(c) for c in coefficients),
        r_squared=r_squared,
        residuals=residuals,
    )


def _strictly_decreasing(values: Sequence[float]) -> bool:
    return all(later < earlier for earlier, later in zip(values, values[1:]))


def _correlation(a: np.ndarray, b: np.ndarray) -> float:
    if len(a) < 2 or np.std(a) == 0 or np.std(b) == 0:
        return float("nan")
    return float(np.corrcoef(a, b)[0, 1])


def _t_statistic(samples: np.ndarray) -> float:
    mean = float(np.mean(samples))
    spread = float(np.std(samples, ddof=1)) if len(samples) > 1 else 0.0
    if spread == 0.0:
        return 0.0 if mean == 0.0 else math.copysign(math.inf, mean)
    return mean / (spread / math.sqrt(len(samples)))


def check_negligibility(medians: Sequence[float], ratio: float = 0.5) -> Verdict:
    """Medians of ``sup |gamma_hat_n|`` across increasing ``n`` vanish.

    Passes when the medians strictly decrease and the last one
    is below ``ratio`` times the first.
    """
    medians = [float(m) for m in medians]
    if len(medians) < 3:
        raise InsufficientGridError(f"negligibility needs 3 sample sizes, got {len(medians)}")
    final_ratio = medians[-1] / medians[0] if medians[0] else math.inf
    passed = _strictly_decreasing(medians) and medians[-1] < ratio * medians[0]
    return Verdict(
        name="negligibility",
        passed=passed,
        measured={"initial": medians[0], "final": medians[-1], "final_over_initial": final_ratio},
        thresholds={"ratio": ratio},
        detail="medians " + ", ".join(f"{m:.6g}" for m in medians),
    )


def check_reduction_rate(
    n_grid: Sequence[int], medians: Sequence[float], max_slope: float = -0.05
) -> Verdict:
    """The normalized reduction residual shrinks as a power of ``n``.

    >>> check_reduction_rate([256, 1024, 4096], [1.0, 0.5, 0.25]).measured["slope"]
    -0.5
    """
    if len(n_grid) != len(medians):
        raise InternalError("one median per sample size is expected")
    if len(n_grid) < 3:
        raise InsufficientGridError(f"reduction rate needs 3 sample sizes, got {len(n_grid)}")
    medians_array = np.asarray(medians, dtype=np.float64)
    if np.any(medians_array <= 0) or not np.all(np.isfinite(medians_array)):
        raise NumericDomainError("the medians of the residual must be positive to take logs")
    slope, _ = np.polyfit(np.log(np.asarray(n_grid, dtype=np.float64)), np.log(medians_array), 1)
    slope = round(float(slope), 12)
    return Verdict(
        name="reduction_rate",
        passed=slope <= max_slope,
        measured={"slope": slope},
        thresholds={"max_slope": max_slope},
    )


def check_profile_proportionality(
    traces: np.ndarray,
    derivative: np.ndarray,
    v_n: np.ndarray | None = None,
    min_r2: float = 0.9,
    min_correlation: float = 0.9,
) -> Verdict:
    """Each trace is a fixed shape ``f'`` times a random slope.

    Every replication is regressed on ``f'`` without intercept; the check
    passes when the mean uncentered ``R^2`` reaches ``min_r2`` and, when the
    same-path proxies ``v_n`` are given, the fitted slopes correlate with
    them at least by ``min_correlation``.

    :param traces: One row per replication, one column per grid point.
    :param derivative: ``f'`` at the standardized grid points.
    :param v_n: The proxy of ``V`` of each replication.
    """
    traces = np.atleast_2d(np.asarray(traces, dtype=np.float64))
    fits = [profile_regression(row, [derivative]) for row in traces]
    slopes = np.array([fit.coefficients[0] for fit in fits])
    mean_r2 = float(np.mean([fit.r_squared for fit in fits]))
    measured = {"mean_r2": mean_r2, "mean_slope": float(np.mean(slopes))}
    passed = mean_r2 >= min_r2
    if v_n is not None:
        correlation = _correlation(slopes, np.asarray(v_n, dtype=np.float64))
        measured["slope_v_n_correlation"] = correlation
        passed = passed and correlation >= min_correlation
    return Verdict(
        name="profile_proportionality",
        passed=passed,
        measured=measured,
        thresholds={"min_r2": min_r2, "min_correlation": min_correlation},
    )


def check_m_estimator_branch(
    traces: np.ndarray,
    derivative: np.ndarray,
    density: np.ndarray,
    claimed: SecondOrderRank | str,
    actual: SecondOrderRank | str,
    max_t: float = 3.0,
) -> Verdict:
    """Whether the profile of an M-estimator carries a density component.

    Each replication is regressed on ``f'`` and ``f``. With a rank larger
    than 2 the ``f`` coefficient must be indistinguishable from zero
    (``|t| < max_t`` across replications), with rank 2 it must not be.
    """
    claimed = SecondOrderRank(claimed)
    actual = SecondOrderRank(actual)
    if claimed is not actual:
        raise RankClaimError(
            f"the rank was claimed to be {claimed.value} but the score has {actual.value}"
        )
    traces = np.atleast_2d(np.asarray(traces, dtype=np.float64))
    fits = [profile_regression(row, [derivative, density]) for row in traces]
    derivative_coefficients = np.array([fit.coefficients[0] for fit in fits])
    density_coefficients = np.array([fit.coefficients[1] for fit in fits])
    t = _t_statistic(density_coefficients)
    if claimed is SecondOrderRank.RANK_GT_2:
        passed = abs(t) < max_t
    else:
        passed = abs(t) >= max_t
    return Verdict(
        name="m_estimator_branch",
        passed=passed,
        measured={
            "derivative_coefficient": float(np.mean(derivative_coefficients)),
            "density_coefficient": float(np.mean(density_coefficients)),
            "density_coefficient_t": t,
        },
        thresholds={"max_t": max_t},
        detail=f"rank {claimed.value}",
    )


def check_gaussian_regime(
    samples: Mapping[int, np.ndarray],
    max_skew: float = 0.35,
    max_excess_kurtosis: float = 0.7,
    max_ks_distance: float = 0.1,
    regime: Regime | None = None,
) -> Verdict:
    """Pointwise Gaussian marginals, stable in ``n``.

    :param samples: For each sample size, one row per replication and one
                    column per fixed evaluation point.
    :param regime: The regime of the model, must be above ``beta = 3/4`` when given.
    """
    if regime is not None and Regime(regime) is not Regime.BETA_ABOVE_3_4:
        raise RegimeError("the Gaussian limit only holds for beta > 3/4")
    if len(samples) < 2:
        raise InsufficientGridError("stability needs two sample sizes")
    sizes = sorted(samples)
    first = np.asarray(samples[sizes[0]], dtype=np.float64)
    last = np.asarray(samples[sizes[-1]], dtype=np.float64)
    skews = np.abs(scipy.stats.skew(last, axis=0))
    kurtoses = np.abs(scipy.stats.kurtosis(last, axis=0, fisher=True))
    distances = np.array(
        [scipy.stats.ks_2samp(first[:, j], last[:, j]).statistic for j in range(last.shape[1])]
    )
    measured = {
        "max_abs_skew": float(skews.max()),
        "max_abs_excess_kurtosis": float(kurtoses.max()),
        "max_ks_distance": float(distances.max()),
    }
    return Verdict(
        name="gaussian_regime",
        passed=bool(
            measured["max_abs_skew"] < max_skew
            and measured["max_abs_excess_kurtosis"] < max_excess_kurtosis
            and measured["max_ks_distance"] < max_ks_distance
        ),
        measured=measured,
        thresholds={
            "max_skew": max_skew,
            "max_excess_kurtosis": max_excess_kurtosis,
            "max_ks_distance": max_ks_distance,
        },
        detail=f"screened at n={sizes[-1]}, stability between n={sizes[0]} and n={sizes[-1]}",
    )


def check_known_ks_limit(
    statistics: np.ndarray, sup_density: float, seed: int, max_ks_distance: float = 0.1
) -> Verdict:
    """The known location KS statistics follow ``|Z| sup f``.

    The reference sample has as many draws as ``statistics`` and is
    generated from ``seed``.
    """
    statistics = np.asarray(statistics, dtype=np.float64)
    rng = np.random.default_rng(seed)
    reference = np.abs(rng.standard_normal(len(statistics))) * sup_density
    distance = float(scipy.stats.ks_2samp(statistics, reference).statistic)
    return Verdict(
        name="known_ks_limit",
        passed=distance < max_ks_distance,
        measured={"ks_distance": distance, "median": float(np.median(statistics))},
        thresholds={"max_ks_distance": max_ks_distance},
    )


def check_cvm_consistency(
    cvm: np.ndarray, v_n: np.ndarray, kappa: float, min_correlation: float = 0.9
) -> Verdict:
    """Normalized CvM statistics co-move with ``v_n^2 kappa`` on the same paths."""
    cvm = np.asarray(cvm, dtype=np.float64)
    limit = np.asarray(v_n, dtype=np.float64) ** 2 * kappa
    correlation = _correlation(cvm, limit)
    return Verdict(
        name="cvm_consistency",
        passed=correlation >= min_correlation,
        measured={
            "correlation": correlation,
            "median_statistic": float(np.median(cvm)),
            "median_limit": float(np.median(limit)),
        },
        thresholds={"min_correlation": min_correlation},
    )


def check_m_equivalence(medians: Sequence[float]) -> Verdict:
    """Medians of ``|sigma_{n,1}^-1 n (M_n - Y_bar_n)|`` strictly decrease in ``n``."""
    medians = [float(m) for m in medians]
    if len(medians) < 2:
        raise InsufficientGridError(f"M equivalence needs 2 sample sizes, got {len(medians)}")
    return Verdict(
        name="m_equivalence",
        passed=_strictly_decreasing(medians),
        measured={"initial": medians[0], "final": medians[-1]},
        thresholds={},
        detail="medians " + ", ".join(f"{m:.6g}" for m in medians),
    )


def check_sigma_psi_positive(
    scaled_gaps: np.ndarray,
    min_z: float = 5.0,
    center_m: np.ndarray | None = None,
    center_mean: np.ndarray | None = None,
    min_inflation_z: float = 3.0,
) -> Verdict:
    """``sigma_psi^2``, the variance of ``sqrt(n) (M_n - Y_bar_n)``, is positive.

    When the values of ``sqrt(n) (H_n - H(mu; theta_hat))`` are given for
    both the M-estimator and the mean, the variance of the former must also
    exceed the one of the latter by ``min_inflation_z`` standard errors.
    """
    estimate = sample_variance_estimate(np.asarray(scaled_gaps, dtype=np.float64))
    if estimate.stderr > 0:
        z = estimate.value / estimate.stderr
    else:
        z = math.inf if estimate.value > 0 else 0.0
    measured = {"sigma_psi_sq": estimate.value, "stderr": estimate.stderr, "z": z}
    passed = z >= min_z
    if center_m is not None and center_mean is not None:
        with_m = sample_variance_estimate(np.asarray(center_m, dtype=np.float64))
        with_mean = sample_variance_estimate(np.asarray(center_mean, dtype=np.float64))
        inflation = with_m.value - with_mean.value
        stderr = math.hypot(with_m.stderr, with_mean.stderr)
        if stderr > 0:
            inflation_z = inflation / stderr
        else:
            inflation_z = math.copysign(math.inf, inflation) if inflation else 0.0
        measured.update({"variance_inflation": inflation, "variance_inflation_z": inflation_z})
        passed = passed and inflation_z >= min_inflation_z
    return Verdict(
        name="sigma_psi_positive",
        passed=passed,
        measured=measured,
        thresholds={"min_z": min_z, "min_inflation_z": min_inflation_z},
    )


def check_z1_normality(
    z1: np.ndarray,
    max_mean: float = 0.15,
    max_variance_error: float = 0.15,
    max_autocorrelation: float = 0.1,
) -> Verdict:
    """``z1_n`` across replications looks standard normal and uncorrelated in the index."""
    z1 = np.asarray(z1, dtype=np.float64)
    mean = float(np.mean(z1))
    variance = float(np.var(z1, ddof=1))
    autocorrelation = _correlation(z1[:-1], z1[1:])
    return Verdict(
        name="z1_normality",
        passed=bool(
            abs(mean) < max_mean
            and abs(variance - 1.0) < max_variance_error
            and abs(autocorrelation) < max_autocorrelation
        ),
        measured={"mean": mean, "variance": variance, "lag1_autocorrelation": autocorrelation},
        thresholds={
            "max_mean": max_mean,
            "max_variance_error": max_variance_error,
            "max_autocorrelation": max_autocorrelation,
        },
    )


def _finite(*columns: np.ndarray) -> tuple[np.ndarray, ...]:
    """Drop the replications where any of the columns is missing."""
    keep = np.ones(len(columns[0]), dtype=bool)
    for column in columns:
        keep &= np.isfinite(column)
    return tuple(column[keep] for column in columns)


def _medians(result: "ExperimentResult", column: str) -> list[float]:
    medians = []
    for n in result.config.n_grid:
        (values,) = _finite(result.column(column, n))
        if len(values) == 0:
            raise NumericDomainError(f"no successful replication for {column} at n={n}")
        medians.append(float(np.median(values)))
    return medians


def evaluate_check(spec: CheckSpec, result: "ExperimentResult") -> Verdict:
    """Run the check described by ``spec`` on the replications of ``result``."""
    config = result.config
    n = spec.n if spec.n is not None else config.n_grid[-1]
    marginal = result.marginal
    thresholds = spec.thresholds
    estimator = spec.estimator

    if spec.name == "negligibility":
        verdict = check_negligibility(
            _medians(result, column_name("ks_sigma_n1", estimator)), **thresholds
        )
    elif spec.name == "reduction_rate":
        verdict = check_reduction_rate(
            config.n_grid, _medians(result, column_name("reduction_sup")), **thresholds
        )
    elif spec.name == "m_equivalence":
        verdict = check_m_equivalence(_medians(result, column_name("m_gap", estimator)))
    elif spec.name == "profile_proportionality":
        traces, v_n = result.profile_matrix(estimator, n)
        z = marginal.standardize(result.profile_grid.points)
        verdict = check_profile_proportionality(
            traces, marginal.pdf_derivative(z, 1), v_n, **thresholds
        )
    elif spec.name == "m_estimator_branch":
        traces, _ = result.profile_matrix(estimator, n)
        z = marginal.standardize(result.profile_grid.points)
        m_estimator = parse_estimator(estimator)
        if not isinstance(m_estimator, MEstimator):
            raise InternalError(f"{estimator} is not an M-estimator")
        lambda2 = lambda_pair(m_estimator.psi, marginal).lambda2
        verdict = check_m_estimator_branch(
            traces,
            marginal.pdf_derivative(z, 1),
            marginal.pdf(z),
            claimed=spec.rank,
            actual=second_order_rank(config.process.beta, lambda2),
            **thresholds,
        )
    elif spec.name == "gaussian_regime":
        samples = {}
        for size in (config.n_grid[0], n):
            columns = [
                result.column(pointwise_column(level, estimator), size)
                for level in POINTWISE_LEVELS
            ]
            samples[size] = np.column_stack(_finite(*columns))
        verdict = check_gaussian_regime(
            samples, regime=regime_for(config.process.beta), **thresholds
        )
    elif spec.name == "known_ks_limit":
        (statistics,) = _finite(result.column(column_name("ks_known"), n))
        verdict = check_known_ks_limit(
            statistics, marginal.sup_density(), seed=config.master_seed, **thresholds
        )
    elif spec.name == "cvm_consistency":
        cvm, v_n = _finite(
            result.column(column_name("cvm", estimator), n), result.column("v_n", n)
        )
        verdict = check_cvm_consistency(cvm, v_n, cvm_limit_constant(marginal), **thresholds)
    elif spec.name == "sigma_psi_positive":
        (gaps,) = _finite(result.column(column_name("sqrt_n_m_gap", estimator), n))
        center_m = center_mean = None
        if "pointwise" in config.statistics and "mean" in config.estimators:
            center_m, center_mean = _finite(
                result.column(pointwise_column(0.5, estimator), n),
                result.column(pointwise_column(0.5, "mean"), n),
            )
        verdict = check_sigma_psi_positive(
            gaps, center_m=center_m, center_mean=center_mean, **thresholds
        )
    elif spec.name == "z1_normality":
        (z1,) = _finite(result.column("z1_n", n))
        verdict = check_z1_normality(z1, **thresholds)
    else:
        raise InternalError(f"no implementation for the check {spec.name}")

    verdict = dataclasses.replace(
        verdict,
        estimator=estimator,
        n=None if spec.name in ("negligibility", "reduction_rate", "m_equivalence") else n,
    )
    logger.info("Check %s %s", spec.name, "passed" if verdict.passed else "failed")
    return verdict
