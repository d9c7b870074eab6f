"""Functionals of a score under the marginal law.

The asymptotic expansion of an M-estimator involves the integrals of the
score against the derivatives of the marginal density,

    ``lambda_k = int psi(y) f^(k)(y) dy``

For an odd score and a symmetric density ``lambda_2`` vanishes by parity,
while ``lambda_1`` is negative for every nondecreasing score:

>>> from lrdpyground.estimators import parse_psi
>>> from lrdpyground.process import MarginalModel
>>> standard = MarginalModel(var_x=1.0)
>>> round(lambda_k(parse_psi("sign"), standard, 1), 6)
-0.797885
>>> abs(lambda_k(parse_psi("sign"), standard, 2)) < 1e-9
True

Above ``beta = 3/4`` the difference between an M-estimator and the sample
mean is of the classical order ``n^-1/2``, and its asymptotic variance
``sigma_psi^2`` is estimated by simulation.
"""

import logging
import math
import warnings
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np
import scipy.integrate

from ..exceptions import ParameterDomainError, QuadratureError, RegimeError
from ..multilinear import MonteCarloEstimate, sample_variance_estimate
from ..process import MarginalModel, ProcessConfig, gen_coefficients, generate_path
from ..process.seeding import replication_seed
from ..scalings import Regime, regime_for
from .location import m_estimate, sample_mean
from .psi import PsiFunction

__all__ = (
    "LambdaPair",
    "lambda_k",
    "lambda_pair",
    "psi_mean",
    "estimate_sigma_psi_sq",
    "MIN_SIGMA_PSI_REPS",
)

logger = logging.getLogger(__name__)

MIN_SIGMA_PSI_REPS = 200
_QUADRATURE_EPSABS = 1e-10


@dataclass(frozen=True)
class LambdaPair:
    """The first two functionals ``lambda_1`` and ``lambda_2`` of a score."""

    lambda1: float
    lambda2: float


def _integrate(integrand: Callable[[float], float], span: float, points: list[float]) -> float:
    with warnings.catch_warnings():
        warnings.simplefilter("error", scipy.integrate.IntegrationWarning)
        try:
            value, error = scipy.integrate.quad(
                integrand,
                -span,
                span,
                points=sorted(p for p in points if -span < p < span) or None,
                epsabs=_QUADRATURE_EPSABS,
                epsrel=0.0,
                limit=500,
            )
        except scipy.integrate.IntegrationWarning as warning:
            raise QuadratureError(f"quadrature did not converge: {warning}") from None
    logger.debug("Quadrature on [-%g, %g] gave %.3e with error %.1e", span, span, value, error)
    return float(value)


def lambda_k(psi: PsiFunction, marginal: MarginalModel, k: int) -> float:
    """Compute ``lambda_k = int psi(y) f^(k)(y) dy`` by adaptive quadrature.

    The integral runs over eight standard deviations of ``X_1`` on each side,
    splitting at the breakpoints of the score.

    :param psi: The score.
    :param marginal: The marginal law providing ``f``.
    :param k: The derivative order, 1 or 2.
    """
    if k not in (1, 2):
        raise ParameterDomainError("k", k, "{1, 2}")
    span = 8.0 * marginal.std_x
    return _integrate(
        lambda y: float(psi(y)) * marginal.pdf_derivative(y, k),
        span,
        list(psi.breakpoints),
    )


def lambda_pair(psi: PsiFunction, marginal: MarginalModel) -> LambdaPair:
    """Both ``lambda_1`` and ``lambda_2`` of a score."""
    return LambdaPair(
        lambda1=lambda_k(psi, marginal, 1), lambda2=lambda_k(psi, marginal, 2)
    )


def psi_mean(psi: PsiFunction, marginal: MarginalModel) -> float:
    """Expected score at the true location, ``E psi(Y_1 - mu)``.

    ``Y_1 - mu`` has the law of ``|sigma| X_1``, so the expectation
    is ``int psi(|sigma| z) f(z) dz``.
    """
    span = 8.0 * marginal.std_x
    scale = marginal.scale
    return _integrate(
        lambda z: float(psi(scale * z)) * float(marginal.pdf(z)),
        span,
        [point / scale for point in psi.breakpoints],
    )


def estimate_sigma_psi_sq(
    config: ProcessConfig,
    psi: PsiFunction,
    n: int,
    reps: int,
    tol: float = 1e-10,
) -> MonteCarloEstimate:
    """Estimate the variance of ``sqrt(n) (M_n - Y_bar_n)`` by simulation.

    Only meaningful above ``beta = 3/4``, where the difference between the
    M-estimator and the sample mean has a Gaussian limit at the ``sqrt(n)``
    scale. Replication ``r`` uses the seed derived from ``(config.seed, n, r)``.

    :param config: The model to simulate.
    :param psi: The score of the M-estimator.
    :param n: The sample size.
    :param reps: Number of replications, at least 200.
    :param tol: Tolerance of the M-estimator.
    """
    if regime_for(config.beta) is not Regime.BETA_ABOVE_3_4:
        raise RegimeError(
            f"sigma_psi is only defined for beta > 3/4, got beta={config.beta}"
        )
    if not isinstance(n, int) or n < 1:
        raise ParameterDomainError("n", n, "integer >= 1")
    if not isinstance(reps, int) or reps < MIN_SIGMA_PSI_REPS:
        raise ParameterDomainError("reps", reps, f"integer >= {MIN_SIGMA_PSI_REPS}")

    coeffs = gen_coefficients(config.beta, config.trunc_k)
    samples = np.empty(reps)
    for index in range(reps):
        seed = replication_seed(config.seed, n, index)
        y = generate_path(config.with_seed(seed), n, coeffs=coeffs).y
        samples[index] = math.sqrt(n) * (m_estimate(y, psi, tol) - sample_mean(y))
    logger.info("Estimated sigma_psi^2 of %s at n=%d over %d paths", psi, n, reps)
    return sample_variance_estimate(samples)
