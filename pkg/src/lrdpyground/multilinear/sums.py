"""Multilinear sums of the innovations.

The multilinear form of order ``r`` sums, over every observation, the
products of ``r`` distinct innovations entering that observation,
weighted by their coefficients:

    ``Y_{n,r} = sum_{i=1}^{n} sum_{0 <= j_1 < ... < j_r} prod_s c_{j_s} eps_{i-j_s}``

Only the first orders are needed: ``Y_{n,0} = n``, ``Y_{n,1}`` is the
plain sum of the observations and ``Y_{n,2}`` is obtained without any
double loop through the identity

    ``sum_{j_1 < j_2} a_{j_1} a_{j_2} = ((sum_j a_j)^2 - sum_j a_j^2) / 2``

applied to every observation, where ``sum_j a_j = X_i`` and the diagonal
``sum_j a_j^2 = c_0^2 eps_i^2 + Q_i`` is provided by the path itself.
"""

from dataclasses import dataclass

import numpy as np

from ..exceptions import ConsistencyError, ParameterDomainError
from ..process import CoefficientSet, PathBundle

__all__ = ("MultilinearSums", "compute_sums")


@dataclass(frozen=True)
class MultilinearSums:
    """The multilinear sums ``Y_{n,0}``, ``Y_{n,1}`` and ``Y_{n,2}`` of a path."""

    y0: int
    y1: float
    y2: float

    def order(self, r: int) -> float:
        """Return ``Y_{n,r}`` for ``r`` in ``0 .. 2``.

        >>> MultilinearSums(y0=4, y1=1.5, y2=-0.25).order(2)
        -0.25
        """
        if r not in (0, 1, 2):
            raise ParameterDomainError("r", r, "{0, 1, 2}")
        return (self.y0, self.y1, self.y2)[r]


def compute_sums(path: PathBundle, coeffs: CoefficientSet) -> MultilinearSums:
    """Compute the multilinear sums up to order 2 of the given path.

    A single pair of innovations contributes to ``Y_{1,2}`` when ``K = 1``:

    >>> import numpy as np
    >>> from lrdpyground.process import ProcessConfig, gen_coefficients, path_from_innovations
    >>> config = ProcessConfig(beta=0.7, trunc_k=1)
    >>> coeffs = gen_coefficients(0.7, 1)
    >>> path = path_from_innovations(config, np.array([0.5, 2.0]), coeffs, method="direct")
    >>> sums = compute_sums(path, coeffs)
    >>> expected = float(coeffs.c[0] * coeffs.c[1]) * 2.0 * 0.5
    >>> sums.y0, abs(sums.y2 - expected) < 1e-12
    (1, True)

    :param path: The realized path.
    :param coeffs: The coefficients that generated the path.
    """
    if coeffs.trunc_k != path.config.trunc_k or coeffs.beta != path.config.beta:
        raise ConsistencyError(
            f"{coeffs} did not generate a path with beta={path.config.beta}, "
            f"trunc_k={path.config.trunc_k}"
        )
    c0 = float(coeffs.c[0])
    diagonal = c0**2 * path.newest_innovations**2 + path.q
    y2 = 0.5 * float(np.sum(path.x**2 - diagonal))
    return MultilinearSums(y0=path.n, y1=float(np.sum(path.x)), y2=y2)
