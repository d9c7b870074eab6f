"""Same-path versions of the limiting random variables.

The limits of the estimated empirical processes involve random variables
whose laws are not available in closed form: ``V``, a combination of the
limit ``Z_2`` of ``sigma_{n,2}^-1 Y_{n,2}`` and of the square of the standard
normal ``Z_1``, and ``V_1``, the limit of the rescaled difference between the
sample mean and an M-estimator. Rather than sampling them, every
replication computes their finite sample counterparts on the same path
its statistics come from:

* ``z1_n = sigma_{n,1}^-1 Y_{n,1}``
* ``v_n = sigma_{n,2}^-1 Y_{n,2} - c_n z1_n^2 / 2``
* ``v1_proxy = n (Y_bar_n - M_n) / sigma_{n,2}``

Checks then compare the statistics with these proxies replication by
replication.
"""

from dataclasses import dataclass

from ..multilinear import MultilinearSums
from ..scalings import ScalingSet

__all__ = ("LimitProxies", "limit_proxies", "v1_proxy")


@dataclass(frozen=True)
class LimitProxies:
    """Finite sample proxies of ``Z_1`` and ``V`` for one path."""

    z1_n: float
    v_n: float


def limit_proxies(sums: MultilinearSums, scalings: ScalingSet) -> LimitProxies:
    """Compute ``z1_n`` and ``v_n`` from the multilinear sums of a path.

    >>> from lrdpyground.scalings import ScalingSet, Regime
    >>> scalings = ScalingSet(n=4, beta=0.7, sigma_n1=2.0, sigma_n2=1.0, a_n=0.5,
    ...                       c_n=1.0, d_n2=None, k_star=2, regime=Regime.BETA_BELOW_3_4)
    >>> limit_proxies(MultilinearSums(y0=4, y1=2.0, y2=3.0), scalings)
    LimitProxies(z1_n=1.0, v_n=2.5)
    """
    z1_n = sums.y1 / scalings.sigma_n1
    v_n = sums.y2 / scalings.sigma_n2 - 0.5 * scalings.c_n * z1_n**2
    return LimitProxies(z1_n=z1_n, v_n=v_n)


def v1_proxy(sample_mean: float, m_estimate: float, scalings: ScalingSet) -> float:
    """``a_n^-1 sigma_{n,1}^-1 n (Y_bar_n - M_n)``, that is ``n (Y_bar_n - M_n) / sigma_{n,2}``."""
    return scalings.n * (sample_mean - m_estimate) / scalings.sigma_n2
