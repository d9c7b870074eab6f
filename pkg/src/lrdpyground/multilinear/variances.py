"""Exact and simulated variances of the multilinear sums.

All the statistics of the package are normalized by the finite sample
standard deviations ``sigma_{n,p} = sqrt(Var(Y_{n,p}))`` rather than by
their asymptotic power laws, which removes every unknown slowly varying
constant from the normalizations.

For unit variance innovations ``Y_{n,1}`` is a sum of correlated
observations, so its variance follows from the autocovariances:

    ``sigma_{n,1}^2 = n rho_0 + 2 sum_{k=1}^{n-1} (n-k) rho_k``

``Y_{n,2}`` is a quadratic form ``sum_{t_1<t_2} B(t_1,t_2) eps_{t_1} eps_{t_2}``
without diagonal, whose variance is ``sum_{t_1<t_2} B(t_1,t_2)^2``.
Two exact evaluations are provided: the direct sum of the squared weights,
computed lag by lag through prefix sums, and a closed form in terms of the
autocovariances that scales to much larger sizes.

>>> from lrdpyground.process import gen_coefficients
>>> exact_sigma1_sq(5, gen_coefficients(0.7, 0))
5.0
>>> exact_sigma2_sq(5, gen_coefficients(0.7, 0))
0.0
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
import scipy.signal

from ..exceptions import BudgetExceededError, ParameterDomainError
from ..process import CoefficientSet, ProcessConfig, gen_coefficients, generate_path
from ..process.seeding import replication_seed
from .sums import compute_sums

__all__ = (
    "VariancePair",
    "MonteCarloEstimate",
    "exact_sigma1_sq",
    "exact_sigma2_sq",
    "sigma2_sq_from_autocovariances",
    "monte_carlo_sigma2",
    "sample_variance_estimate",
    "DEFAULT_SIGMA2_BUDGET",
    "MIN_SIGMA2_REPS",
)

logger = logging.getLogger(__name__)

DEFAULT_SIGMA2_BUDGET = 2**13
"""Largest ``n + K`` the lag by lag evaluation of ``sigma_{n,2}^2`` accepts."""

MIN_SIGMA2_REPS = 100


@dataclass(frozen=True)
class VariancePair:
    """Variances of ``Y_{n,1}`` and ``Y_{n,2}`` at sample size ``n``."""

    n: int
    sigma_n1_sq: float
    sigma_n2_sq: float


@dataclass(frozen=True)
class MonteCarloEstimate:
    """A quantity estimated over independent replications.

    ``stderr`` is the standard error of ``value``, it shrinks
    like ``reps^-1/2``.
    """

    value: float
    stderr: float
    reps: int


def _check_n(n: int) -> int:
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ParameterDomainError("n", n, "integer >= 1")
    return int(n)


def exact_sigma1_sq(n: int, coeffs: CoefficientSet) -> float:
    """Variance of ``Y_{n,1}`` for unit variance innovations.

    :param n: The sample size.
    :param coeffs: The coefficients of the process.
    """
    n = _check_n(n)
    rho = coeffs.autocovariances(n - 1)
    weights = n - np.arange(1, n, dtype=np.float64)
    return float(n * rho[0] + 2.0 * np.dot(weights, rho[1:]))


def exact_sigma2_sq(
    n: int, coeffs: CoefficientSet, budget: int = DEFAULT_SIGMA2_BUDGET
) -> float:
    """Variance of ``Y_{n,2}`` as the sum of the squared pair weights.

    For a fixed lag ``d = t_2 - t_1`` the weight of the pair is a window
    of the sequence ``g_m = c_m c_{m+d}``::

        B(t_2 - d, t_2) = sum_{m=lo}^{hi} g_m,  lo = max(0, 1 - t_2),  hi = min(K - d, n - t_2)

    so every window is the difference of two prefix sums of ``g``.
    The cost is ``O(K (n + K))``, sizes with ``n + K`` above ``budget``
    are refused: use :func:`sigma2_sq_from_autocovariances` or
    :func:`monte_carlo_sigma2` for those.

    :param n: The sample size.
    :param coeffs: The coefficients of the process.
    :param budget: Largest ``n + K`` accepted.
    """
    n = _check_n(n)
    trunc_k = coeffs.trunc_k
    if n + trunc_k > budget:
        raise BudgetExceededError(
            f"exact sigma_n2 with n={n} and trunc_k={trunc_k} exceeds the budget "
            f"n + trunc_k <= {budget}, use sigma2_sq_from_autocovariances "
            "or monte_carlo_sigma2 instead"
        )
    c = np.asarray(coeffs.c)
    total = 0.0
    for d in range(1, trunc_k + 1):
        g = c[: trunc_k + 1 - d] * c[d:]
        prefix = np.concatenate(([0.0], np.cumsum(g)))
        t2 = np.arange(1 - trunc_k + d, n + 1)
        lo = np.maximum(0, 1 - t2)
        hi = np.minimum(trunc_k - d, n - t2)
        valid = hi >= lo
        weights = prefix[hi[valid] + 1] - prefix[lo[valid]]
        total += float(np.dot(weights, weights))
    return total


def sigma2_sq_from_autocovariances(n: int, coeffs: CoefficientSet) -> float:
    """Variance of ``Y_{n,2}`` through the autocovariances of the process.

    The pair weights are the off diagonal entries of the Gram matrix
    ``B = C^T C`` of the ``n x (n+K)`` matrix of coefficients, whose
    squared Frobenius norm equals the one of ``C C^T``, the covariance
    matrix of ``X_1 .. X_n``. Removing the diagonal ``D_t = sum_i c_{i-t}^2``
    gives::

        Var(Y_{n,2}) = (n rho_0^2 + 2 sum_{k=1}^{n-1} (n-k) rho_k^2 - sum_t D_t^2) / 2

    which only needs convolutions, ``O((n + K) log(n + K))``.
    """
    n = _check_n(n)
    if coeffs.trunc_k == 0:
        return 0.0
    rho = coeffs.autocovariances(n - 1)
    weights = n - np.arange(1, n, dtype=np.float64)
    frobenius = n * rho[0] ** 2 + 2.0 * np.dot(weights, rho[1:] ** 2)
    diagonal = scipy.signal.fftconvolve(np.ones(n), np.asarray(coeffs.c) ** 2, mode="full")
    return float(0.5 * (frobenius - np.dot(diagonal, diagonal)))


def sample_variance_estimate(samples: np.ndarray) -> MonteCarloEstimate:
    """Sample variance with the standard error ``sqrt((m_4 - s^4) / R)``.

    >>> sample_variance_estimate(np.zeros(10))
    MonteCarloEstimate(value=0.0, stderr=0.0, reps=10)
    """
    samples = np.asarray(samples, dtype=np.float64)
    reps = len(samples)
    if reps < 2:
        raise ParameterDomainError("reps", reps, "integer >= 2")
    variance = float(np.var(samples, ddof=1))
    fourth = float(np.mean((samples - samples.mean()) ** 4))
    stderr = math.sqrt(max(fourth - variance**2, 0.0) / reps)
    return MonteCarloEstimate(value=variance, stderr=stderr, reps=reps)


def monte_carlo_sigma2(config: ProcessConfig, n: int, reps: int) -> MonteCarloEstimate:
    """Estimate the variance of ``Y_{n,2}`` over ``reps`` independent paths.

    Replication ``r`` is driven by the seed derived from
    ``(config.seed, n, r)``, see :func:`lrdpyground.process.replication_seed`.

    :param config: The model to simulate.
    :param n: The sample size.
    :param reps: Number of replications, at least 100.
    """
    n = _check_n(n)
    if not isinstance(reps, (int, np.integer)) or reps < MIN_SIGMA2_REPS:
        raise ParameterDomainError("reps", reps, f"integer >= {MIN_SIGMA2_REPS}")
    coeffs = gen_coefficients(config.beta, config.trunc_k)
    samples = np.empty(reps)
    for index in range(reps):
        path = generate_path(
            config.with_seed(replication_seed(config.seed, n, index)), n, coeffs=coeffs
        )
        samples[index] = compute_sums(path, coeffs).y2
    logger.info("Simulated sigma_n2^2 for n=%d over %d paths", n, reps)
    return sample_variance_estimate(samples)
