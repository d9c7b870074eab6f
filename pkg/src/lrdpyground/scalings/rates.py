"""Rates and classification constants of the limit theorems.

All the rates are written for the coefficients ``c_k = (k+1)^-beta``,
whose slowly varying part is the constant 1, so none of them carries
slowly varying factors.

The memory parameter splits in two regimes around ``beta = 3/4``:
below it the second order term ``Y_{n,2}`` still dominates the classical
``sqrt(n)`` fluctuations, above it the empirical process with an estimated
location behaves like in the short memory case.

>>> regime_for(0.7).value, regime_for(0.8).value
('beta_below_3_4', 'beta_above_3_4')
>>> [k_star(beta) for beta in (0.8, 0.7, 0.6)]
[1, 2, 5]
"""

import enum
import math

from ..exceptions import ParameterDomainError, UnsupportedBoundaryError
from ..process import validate_beta

__all__ = (
    "Regime",
    "SecondOrderRank",
    "k_star",
    "second_order_rank",
    "d_np",
    "xi_rate",
    "regime_for",
    "is_rate_boundary",
    "LAMBDA2_TOLERANCE",
)

LAMBDA2_TOLERANCE = 1e-8
"""``|lambda_2|`` at or below this value is treated as exactly zero."""


class Regime(str, enum.Enum):
    """Which side of ``beta = 3/4`` the memory parameter lies on."""

    BETA_BELOW_3_4 = "beta_below_3_4"
    BETA_ABOVE_3_4 = "beta_above_3_4"


class SecondOrderRank(str, enum.Enum):
    """Second order rank of an M-estimator."""

    RANK_2 = "rank_2"
    RANK_GT_2 = "rank_gt_2"


def regime_for(beta: float) -> Regime:
    """Classify ``beta``, the boundary ``3/4`` itself belongs to no regime."""
    beta = validate_beta(beta)
    if beta == 0.75:
        raise UnsupportedBoundaryError(
            "beta=0.75 is the boundary between the two regimes, "
            "the limit theorems do not cover it"
        )
    return Regime.BETA_BELOW_3_4 if beta < 0.75 else Regime.BETA_ABOVE_3_4


def k_star(beta: float) -> int:
    """Integer part of ``1 / (2 beta - 1)``.

    It is the largest power ``k`` such that ``Y_{n,k}`` still has
    a variance growing faster than ``n``.
    """
    beta = validate_beta(beta)
    # Keep exact integers like 1/0.2 from being floored one step down.
    return int(math.floor(1.0 / (2.0 * beta - 1.0) + 1e-12))


def second_order_rank(
    beta: float, lambda2: float, tol: float = LAMBDA2_TOLERANCE
) -> SecondOrderRank:
    """Classify the second order rank of an M-estimator.

    The rank is 2 when only one multilinear term dominates (``k* = 1``)
    or when ``lambda_2`` is nonzero, it is larger than 2 otherwise.

    >>> second_order_rank(0.7, 0.0).value, second_order_rank(0.7, 0.3).value
    ('rank_gt_2', 'rank_2')
    """
    if tol <= 0:
        raise ParameterDomainError("tol", tol, "positive real")
    if k_star(beta) == 1:
        return SecondOrderRank.RANK_2
    if abs(lambda2) <= tol:
        return SecondOrderRank.RANK_GT_2
    return SecondOrderRank.RANK_2


def is_rate_boundary(beta: float, p: int) -> bool:
    """Whether ``(p+1)(2 beta - 1) = 1``, where the rates are undefined."""
    return math.isclose((p + 1) * (2.0 * beta - 1.0), 1.0, rel_tol=0.0, abs_tol=1e-12)


def _check_rate_args(n: int, beta: float, p: int, min_n: int) -> float:
    beta = validate_beta(beta)
    if not isinstance(p, int) or p < 0:
        raise ParameterDomainError("p", p, "integer >= 0")
    if not isinstance(n, int) or n < min_n:
        raise ParameterDomainError("n", n, f"integer >= {min_n}")
    if is_rate_boundary(beta, p):
        raise UnsupportedBoundaryError(
            f"(p+1)(2 beta - 1) = 1 for p={p}, beta={beta}: the rate is undefined there"
        )
    return beta


def d_np(n: int, beta: float, p: int) -> float:
    """Rate of the reduction principle remainder at order ``p``.

    >>> d_np(1024, 0.65, 2) < d_np(256, 0.65, 2)
    True

    :param n: The sample size, at least 3 so that ``log log n`` is positive.
    :param beta: The memory parameter.
    :param p: The order of the reduction.
    """
    beta = _check_rate_args(n, beta, p, min_n=3)
    log_n = math.log(n)
    log_log_n = math.log(log_n)
    if (p + 1) * (2.0 * beta - 1.0) > 1.0:
        return n ** (-(1.0 - beta)) * log_n**2.5 * log_log_n**0.75
    return n ** (-p * (beta - 0.5)) * log_n**0.5 * log_log_n**0.75


def xi_rate(n: int, beta: float, p: int, full: bool = False) -> float:
    """Rate ``Xi_n`` of the reduction principle moment bound.

    >>> xi_rate(1024, 0.8, 2)
    1024.0

    :param n: The sample size.
    :param beta: The memory parameter.
    :param p: The order of the reduction.
    :param full: Return the whole bound ``Xi_n + n (log n)^2`` instead of ``Xi_n``.
    """
    beta = _check_rate_args(n, beta, p, min_n=1)
    if (p + 1) * (2.0 * beta - 1.0) > 1.0:
        xi = float(n)
    else:
        xi = float(n) ** (2.0 - (p + 1) * (2.0 * beta - 1.0))
    if full:
        return xi + n * math.log(n) ** 2
    return xi
