"""Brute force evaluations used to validate the fast formulas.

These loop over every index combination in pure Python and are only
meant for tiny instances in the test suite.
"""

import numpy as np

__all__ = ("brute_force_y2", "brute_force_sigma2_sq")


def brute_force_y2(eps: np.ndarray, c: np.ndarray, n: int) -> float:
    """Triple loop over ``i`` and ``j_1 < j_2`` of ``c_{j_1} c_{j_2} eps_{i-j_1} eps_{i-j_2}``.

    ``eps`` holds ``eps_{1-K} .. eps_n``, ``K = len(c) - 1``.

    >>> brute_force_y2(np.array([0.5, 2.0]), np.array([1.0, 0.5]), 1)
    0.5
    """
    trunc_k = len(c) - 1
    total = 0.0
    for i in range(1, n + 1):
        for j1 in range(trunc_k + 1):
            for j2 in range(j1 + 1, trunc_k + 1):
                total += (
                    c[j1] * c[j2] * eps[i - j1 - 1 + trunc_k] * eps[i - j2 - 1 + trunc_k]
                )
    return float(total)


def brute_force_sigma2_sq(n: int, c: np.ndarray) -> float:
    """Enumerate every pair of innovations ``t_1 < t_2`` and sum ``B(t_1, t_2)^2``.

    ``B(t_1, t_2) = sum_{i=1}^{n} c_{i-t_1} c_{i-t_2}`` is the weight of
    ``eps_{t_1} eps_{t_2}`` in ``Y_{n,2}``, so for unit variance innovations
    the variance of ``Y_{n,2}`` is the sum of the squared weights.
    """
    trunc_k = len(c) - 1

    def coefficient(m: int) -> float:
        return float(c[m]) if 0 <= m <= trunc_k else 0.0

    total = 0.0
    for t1 in range(1 - trunc_k, n + 1):
        for t2 in range(t1 + 1, n + 1):
            weight = sum(coefficient(i - t1) * coefficient(i - t2) for i in range(1, n + 1))
            total += weight**2
    return total
