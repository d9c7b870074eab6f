"""Regularly varying moving average coefficients.

The linear process is driven by coefficients ``c_k = (k+1)^-beta``,
which is the simplest sequence regularly varying with index ``-beta``
(its slowly varying part is the constant 1). Doubling the lag multiplies
the coefficient by roughly ``2^-beta``:

>>> coeffs = gen_coefficients(0.7, 10)
>>> float(coeffs.c[0])
1.0
>>> round(float(coeffs.c[1]), 6)
0.615572

The covariances of the process, ``rho_k = sum_j c_j c_{j+k}``, decay like
``k^-(2 beta - 1)`` and are thus not summable. The constant in front of the
power law is the beta function ``B(2 beta - 1, 1 - beta)``.
"""

from dataclasses import dataclass, field

import numpy as np
import scipy.signal
import scipy.special

from ..exceptions import ParameterDomainError
from .config import validate_beta

__all__ = ("CoefficientSet", "gen_coefficients")


@dataclass(frozen=True, eq=False)
class CoefficientSet:
    """The truncated coefficients ``c_0 .. c_K`` of the linear process."""

    c: np.ndarray = field(repr=False)
    beta: float

    def __post_init__(self) -> None:
        self.c.setflags(write=False)

    @property
    def trunc_k(self) -> int:
        """Index of the last coefficient kept, ``K``."""
        return len(self.c) - 1

    def __str__(self) -> str:
        return f"CoefficientSet(beta={self.beta}, trunc_k={self.trunc_k})"

    def variance(self) -> float:
        """Variance of ``X_1`` for unit variance innovations, ``sum_k c_k^2``."""
        return float(np.sum(self.c**2))

    def tail_variance(self) -> float:
        """Variance dropped by the truncation, ``sum_{k>K} (k+1)^-2beta``.

        The infinite moving average can't be simulated, this is the bias
        that truncating at ``K`` introduces on ``Var(X_1)``.
        """
        return float(scipy.special.zeta(2 * self.beta, self.trunc_k + 2))

    def regular_variation_ratio(self, k: int) -> float:
        """Return ``c_{2k} / c_k``, which tends to ``2^-beta``."""
        if not 1 <= k <= self.trunc_k // 2:
            raise ParameterDomainError("k", k, f"[1, {self.trunc_k // 2}]")
        return float(self.c[2 * k] / self.c[k])

    def autocovariances(self, max_lag: int) -> np.ndarray:
        """Exact autocovariances ``rho_0 .. rho_max_lag`` of the truncated process.

        Lags beyond ``K`` have zero covariance as the windows
        of the two observations no longer overlap.

        >>> gen_coefficients(0.7, 1).autocovariances(3).round(6).tolist()
        [1.378929, 0.615572, 0.0, 0.0]
        """
        if max_lag < 0:
            raise ParameterDomainError("max_lag", max_lag, "integer >= 0")
        full = scipy.signal.correlate(self.c, self.c, mode="full", method="auto")
        # full[K + k] holds sum_j c_{j+k} c_j for k = -K .. K
        positive = full[self.trunc_k :]
        rho = np.zeros(max_lag + 1)
        upto = min(max_lag, self.trunc_k) + 1
        rho[:upto] = positive[:upto]
        return rho

    def autocovariance_limit(self) -> float:
        """Limit of ``rho_k * k^(2 beta - 1)`` for the untruncated sequence."""
        return float(scipy.special.beta(2 * self.beta - 1, 1 - self.beta))


def gen_coefficients(beta: float, trunc_k: int) -> CoefficientSet:
    """Build the coefficients ``c_k = (k+1)^-beta`` for ``k = 0 .. trunc_k``.

    :param beta: Memory parameter, in ``(1/2, 1)``.
    :param trunc_k: Truncation lag of the moving average,
                    ``0`` degenerates the process to white noise.
    """
    beta = validate_beta(beta)
    if not isinstance(trunc_k, (int, np.integer)) or trunc_k < 0:
        raise ParameterDomainError("trunc_k", trunc_k, "integer >= 0")
    k = np.arange(int(trunc_k) + 1, dtype=np.float64)
    return CoefficientSet(c=(k + 1.0) ** (-beta), beta=beta)
