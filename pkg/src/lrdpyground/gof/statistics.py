"""Kolmogorov-Smirnov and Cramer-von Mises statistics.

All the statistics are computed exactly from the order statistics, never
on a grid. With ``u_i = H(Y_(i); theta_hat)`` the two raw statistics are::

    KS  = max_i max(i/n - u_i, u_i - (i-1)/n)
    CvM = int (H_n - H(.; theta_hat))^2 dH(.; theta_hat)
        = (1/(12 n) + sum_i (u_i - (2i - 1)/(2n))^2) / n

The raw values are then scaled according to the regime of the model:

* ``sigma_n1_n``: ``n / sigma_{n,1}``, the scale of the known location
  statistic, under which the estimated statistics vanish.
* ``sigma_n2_n``: ``n / sigma_{n,2}``, the scale of the nondegenerate limit
  of the estimated statistics for ``beta < 3/4``.
* ``sqrt_n``: the classical scale, for ``beta > 3/4``.

The Cramer-von Mises functional is quadratic in the process, so it is
scaled by the square of those factors.

>>> round(cvm_order_statistic_sum(np.array([0.25, 0.75])), 12) == round(1 / 24, 12)
True
"""

import enum
import logging
import math
import warnings
from dataclasses import dataclass
from typing import Any

import numpy as np
import scipy.integrate

from ..empirical import sorted_sample, sup_norm_exact
from ..estimators import KnownLocation, LocationEstimator
from ..exceptions import NumericDomainError, QuadratureError, RegimeError
from ..process import MarginalModel, PathBundle
from ..scalings import Regime, ScalingSet

__all__ = (
    "Normalization",
    "GofResult",
    "ks_known",
    "ks_estimated",
    "cvm_estimated",
    "cvm_order_statistic_sum",
    "cvm_limit_constant",
    "regime_normalization",
)

logger = logging.getLogger(__name__)


class Normalization(str, enum.Enum):
    """Factor a raw statistic is scaled by."""

    SIGMA_N1_N = "sigma_n1_n"
    SIGMA_N2_N = "sigma_n2_n"
    SQRT_N = "sqrt_n"

    def factor(self, scalings: ScalingSet) -> float:
        """Numeric value of the factor for the given scalings."""
        if self is Normalization.SIGMA_N1_N:
            return scalings.first_order_scale
        if self is Normalization.SIGMA_N2_N:
            return scalings.second_order_scale
        return scalings.sqrt_n


@dataclass(frozen=True)
class GofResult:
    """A goodness of fit statistic with its normalization.

    ``statistic_normalized`` is ``statistic_raw * normalization_value``,
    ``first_order_normalized`` is the raw value under the ``sigma_n1_n``
    scaling, recorded for every statistic.
    """

    stat: str
    statistic_raw: float
    normalization: Normalization
    normalization_value: float
    statistic_normalized: float
    first_order_normalized: float
    estimator_used: str
    theta_hat: float
    regime: Regime

    def to_record(self, n: int, beta: float, seed: int) -> dict[str, Any]:
        """JSON friendly record of the statistic."""
        return {
            "stat": self.stat,
            "raw": self.statistic_raw,
            "normalized": self.statistic_normalized,
            "normalization": self.normalization.value,
            "normalized_sigma_n1": self.first_order_normalized,
            "estimator": self.estimator_used,
            "theta_hat": self.theta_hat,
            "n": n,
            "beta": beta,
            "seed": seed,
        }


def regime_normalization(
    scalings: ScalingSet, requested: Normalization | str | None = None
) -> Normalization:
    """Pick the normalization of an estimated statistic.

    ``sigma_n2_n`` below ``beta = 3/4`` and ``sqrt_n`` above. An explicit
    request is honored when it agrees with the regime, ``sigma_n1_n`` is
    accepted in both regimes.
    """
    natural = (
        Normalization.SIGMA_N2_N
        if scalings.regime is Regime.BETA_BELOW_3_4
        else Normalization.SQRT_N
    )
    if requested is None:
        return natural
    requested = Normalization(requested)
    if requested not in (natural, Normalization.SIGMA_N1_N):
        raise RegimeError(
            f"normalization {requested.value} does not apply to {scalings.regime.value}, "
            f"use {natural.value} or {Normalization.SIGMA_N1_N.value}"
        )
    return requested


def ks_known(
    path: PathBundle, marginal: MarginalModel, scalings: ScalingSet
) -> GofResult:
    """Kolmogorov-Smirnov distance from the true law, scaled by ``n / sigma_{n,1}``.

    Its limit is ``|Z| sup f`` with ``Z`` standard normal.
    """
    raw = sup_norm_exact(path.y, marginal.location_cdf)
    factor = scalings.first_order_scale
    return GofResult(
        stat="ks",
        statistic_raw=raw,
        normalization=Normalization.SIGMA_N1_N,
        normalization_value=factor,
        statistic_normalized=raw * factor,
        first_order_normalized=raw * factor,
        estimator_used=KnownLocation(marginal.mu).name,
        theta_hat=marginal.mu,
        regime=scalings.regime,
    )


def ks_estimated(
    path: PathBundle,
    marginal: MarginalModel,
    estimator: LocationEstimator,
    scalings: ScalingSet,
    normalization: Normalization | str | None = None,
    theta_hat: float | None = None,
) -> GofResult:
    """Kolmogorov-Smirnov distance from the law at the estimated location.

    :param path: The realized path.
    :param marginal: The model of the path.
    :param estimator: The location estimator.
    :param scalings: Scalings of the model at the size of the path.
    :param normalization: Override the regime normalization, see
                          :func:`regime_normalization`.
    :param theta_hat: The estimate of ``estimator`` on ``path``, when already known.
    """
    chosen = regime_normalization(scalings, normalization)
    if theta_hat is None:
        theta_hat = estimator.estimate(path.y)
    raw = sup_norm_exact(path.y, lambda x: marginal.location_cdf(x, theta_hat))
    factor = chosen.factor(scalings)
    return GofResult(
        stat="ks",
        statistic_raw=raw,
        normalization=chosen,
        normalization_value=factor,
        statistic_normalized=raw * factor,
        first_order_normalized=raw * scalings.first_order_scale,
        estimator_used=estimator.name,
        theta_hat=theta_hat,
        regime=scalings.regime,
    )


def cvm_order_statistic_sum(u: np.ndarray) -> float:
    """``n int (H_n - H)^2 dH`` from the sorted values ``u_i = H(Y_(i))``.

    >>> cvm_order_statistic_sum(np.array([0.1, 0.3, 0.5, 0.7, 0.9])) == 1 / 60
    True
    """
    n = len(u)
    centers = (2.0 * np.arange(1, n + 1) - 1.0) / (2.0 * n)
    return float(1.0 / (12.0 * n) + np.sum((u - centers) ** 2))


def cvm_estimated(
    path: PathBundle,
    marginal: MarginalModel,
    estimator: LocationEstimator,
    scalings: ScalingSet,
    normalization: Normalization | str | None = None,
    theta_hat: float | None = None,
) -> GofResult:
    """Cramer-von Mises distance from the law at the estimated location.

    The raw statistic is ``int (H_n - H(.; theta_hat))^2 dH(.; theta_hat)``
    and it is scaled by the square of the normalization factor.

    :param path: The realized path.
    :param marginal: The model of the path.
    :param estimator: The location estimator.
    :param scalings: Scalings of the model at the size of the path.
    :param normalization: Override the regime normalization, see
                          :func:`regime_normalization`.
    :param theta_hat: The estimate of ``estimator`` on ``path``, when already known.
    """
    chosen = regime_normalization(scalings, normalization)
    if theta_hat is None:
        theta_hat = estimator.estimate(path.y)
    ordered = sorted_sample(path.y)
    u = np.asarray(marginal.location_cdf(ordered, theta_hat))
    if np.any(u <= 0.0) or np.any(u >= 1.0):
        raise NumericDomainError(
            "H(Y_(i); theta_hat) reached 0 or 1, the sample is too far "
            f"from theta_hat={theta_hat}"
        )
    n = len(u)
    raw = cvm_order_statistic_sum(u) / n
    factor = chosen.factor(scalings) ** 2
    return GofResult(
        stat="cvm",
        statistic_raw=raw,
        normalization=chosen,
        normalization_value=factor,
        statistic_normalized=raw * factor,
        first_order_normalized=raw * scalings.first_order_scale**2,
        estimator_used=estimator.name,
        theta_hat=theta_hat,
        regime=scalings.regime,
    )


def cvm_limit_constant(marginal: MarginalModel) -> float:
    """The constant ``kappa = int f'(z)^2 f(z) dz`` of the Cramer-von Mises limit.

    When ``a_n^-1 gamma_hat_n`` tends to ``f'((x - mu) / sigma) V``, the
    ``sigma_n2_n`` normalized statistic tends to ``V^2 kappa``: the change of
    variables ``z = (x - mu) / sigma`` absorbs the ``1 / sigma`` of ``dH``.
    For ``var_x = v`` the constant is ``v^-2`` times its standard normal value
    ``1 / (6 sqrt(3) pi)``.

    >>> round(cvm_limit_constant(MarginalModel(var_x=1.0)) * 6 * math.sqrt(3) * math.pi, 8)
    1.0
    """
    span = 12.0 * marginal.std_x

    def integrand(z: float) -> float:
        return float(marginal.pdf_derivative(z, 1)) ** 2 * float(marginal.pdf(z))

    with warnings.catch_warnings():
        warnings.simplefilter("error", scipy.integrate.IntegrationWarning)
        try:
            value, error = scipy.integrate.quad(
                integrand, -span, span, points=[0.0], epsabs=1e-14, epsrel=1e-12, limit=200
            )
        except scipy.integrate.IntegrationWarning as warning:
            raise QuadratureError(f"quadrature did not converge: {warning}") from None
    logger.debug("CvM limit constant %.10g with error %.1e", value, error)
    return float(value)
