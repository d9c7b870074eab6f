"""Normalizing sequences and classification constants.

Under long memory the empirical distribution function fluctuates on the
scale ``sigma_{n,1} / n`` of the sample mean instead of ``n^-1/2``, and once
the location is estimated the first order fluctuation cancels, leaving a
second order one of size ``sigma_{n,2} / n``. The ratio of the two,
``a_n``, vanishes like ``n^-(beta - 1/2)``.

The scalings package collects every such sequence for a given model and
sample size into a :class:`ScalingSet`, together with the constants used
to decide which limit theorem applies:

>>> from lrdpyground.process import ProcessConfig
>>> from lrdpyground.scalings import build_scaling_set
>>> scalings = build_scaling_set(ProcessConfig(beta=0.7, trunc_k=512), 256)
>>> scalings.k_star, scalings.regime.value
(2, 'beta_below_3_4')
>>> abs(scalings.a_n * scalings.sigma_n1 - scalings.sigma_n2) < 1e-12 * scalings.sigma_n2
True
"""

from .rates import (
    LAMBDA2_TOLERANCE,
    Regime,
    SecondOrderRank,
    d_np,
    is_rate_boundary,
    k_star,
    regime_for,
    second_order_rank,
    xi_rate,
)
from .scalingset import ScalingSet, Sigma2Method, build_scaling_set

__all__ = (
    "LAMBDA2_TOLERANCE",
    "Regime",
    "SecondOrderRank",
    "d_np",
    "is_rate_boundary",
    "k_star",
    "regime_for",
    "second_order_rank",
    "xi_rate",
    "ScalingSet",
    "Sigma2Method",
    "build_scaling_set",
)
