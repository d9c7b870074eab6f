"""Every normalization of a model at a given sample size."""

import logging
import math
import typing
from dataclasses import dataclass
from typing import Any

from ..exceptions import DegenerateModelError, ParameterDomainError
from ..multilinear import (
    DEFAULT_SIGMA2_BUDGET,
    exact_sigma1_sq,
    exact_sigma2_sq,
    monte_carlo_sigma2,
    sigma2_sq_from_autocovariances,
)
from ..process import ProcessConfig, gen_coefficients
from .rates import Regime, d_np, is_rate_boundary, k_star, regime_for

__all__ = ("ScalingSet", "build_scaling_set", "Sigma2Method")

logger = logging.getLogger(__name__)

Sigma2Method = typing.Literal["auto", "exact", "autocovariance", "monte_carlo"]


@dataclass(frozen=True)
class ScalingSet:
    """Normalizing sequences of the limit theorems for one ``(n, beta)``.

    ``a_n = sigma_{n,2} / sigma_{n,1}`` is the factor by which the estimated
    empirical process is smaller than the one with a known location,
    ``c_n = sigma_{n,1}^2 / (n sigma_{n,2})`` is the weight of the squared
    first order term in the second order expansion.
    ``d_n2`` is ``None`` where its rate is undefined, that is at ``beta = 2/3``.
    """

    n: int
    beta: float
    sigma_n1: float
    sigma_n2: float
    a_n: float
    c_n: float
    d_n2: float | None
    k_star: int
    regime: Regime

    @property
    def first_order_scale(self) -> float:
        """The factor ``n / sigma_{n,1}`` applied to ``F_n - F``."""
        return self.n / self.sigma_n1

    @property
    def second_order_scale(self) -> float:
        """The factor ``n / sigma_{n,2}`` applied to ``H_n - H(.; theta_hat)``."""
        return self.n / self.sigma_n2

    @property
    def sqrt_n(self) -> float:
        """The classical factor ``sqrt(n)``."""
        return math.sqrt(self.n)

    def to_dict(self) -> dict[str, Any]:
        """JSON friendly representation with the regime as a string."""
        return {
            "n": self.n,
            "beta": self.beta,
            "sigma_n1": self.sigma_n1,
            "sigma_n2": self.sigma_n2,
            "a_n": self.a_n,
            "c_n": self.c_n,
            "d_n2": self.d_n2,
            "k_star": self.k_star,
            "regime": self.regime.value,
        }


def build_scaling_set(
    config: ProcessConfig,
    n: int,
    sigma2_method: Sigma2Method = "auto",
    budget: int = DEFAULT_SIGMA2_BUDGET,
    mc_reps: int = 1000,
) -> ScalingSet:
    """Compute the scalings of ``config`` at sample size ``n``.

    ``sigma_{n,1}`` is always exact. ``sigma_{n,2}`` is computed according
    to ``sigma2_method``:

    * ``"exact"``: sum of the squared pair weights, refused above ``budget``.
    * ``"autocovariance"``: exact closed form through the autocovariances.
    * ``"monte_carlo"``: sample variance over ``mc_reps`` simulated paths.
    * ``"auto"``: ``"exact"`` within the budget, ``"autocovariance"`` beyond.

    >>> from lrdpyground.process import ProcessConfig
    >>> scalings = build_scaling_set(ProcessConfig(beta=0.8, trunc_k=256), 128)
    >>> scalings.k_star, scalings.regime.value
    (1, 'beta_above_3_4')
    """
    if not isinstance(n, int) or n < 1:
        raise ParameterDomainError("n", n, "integer >= 1")
    regime = regime_for(config.beta)
    coeffs = gen_coefficients(config.beta, config.trunc_k)

    sigma_n1_sq = exact_sigma1_sq(n, coeffs)
    if sigma2_method == "auto":
        sigma2_method = "exact" if n + config.trunc_k <= budget else "autocovariance"
        logger.info("Computing sigma_n2 for n=%d with method %s", n, sigma2_method)
    if sigma2_method == "exact":
        sigma_n2_sq = exact_sigma2_sq(n, coeffs, budget=budget)
    elif sigma2_method == "autocovariance":
        sigma_n2_sq = sigma2_sq_from_autocovariances(n, coeffs)
    elif sigma2_method == "monte_carlo":
        sigma_n2_sq = monte_carlo_sigma2(config, n, mc_reps).value
    else:
        raise ParameterDomainError(
            "sigma2_method", sigma2_method, "{auto, exact, autocovariance, monte_carlo}"
        )
    if sigma_n2_sq <= 0.0:
        raise DegenerateModelError(
            f"sigma_n2 vanishes for trunc_k={config.trunc_k}, n={n}: "
            "there is no pair of innovations in a single observation"
        )

    sigma_n1 = math.sqrt(sigma_n1_sq)
    sigma_n2 = math.sqrt(sigma_n2_sq)
    if n >= 3 and not is_rate_boundary(config.beta, 2):
        d_n2: float | None = d_np(n, config.beta, 2)
    else:
        d_n2 = None
    return ScalingSet(
        n=n,
        beta=config.beta,
        sigma_n1=sigma_n1,
        sigma_n2=sigma_n2,
        a_n=sigma_n2 / sigma_n1,
        c_n=sigma_n1_sq / (n * sigma_n2),
        d_n2=d_n2,
        k_star=k_star(config.beta),
        regime=regime,
    )
