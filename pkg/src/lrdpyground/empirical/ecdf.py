"""Empirical distribution functions and exact sup distances.

The empirical distribution function of a sample is the right continuous
step function ``F_n(x) = n^-1 #{i: X_i <= x}``:

>>> ecdf([1.0, 2.0, 3.0], 2.0)
0.6666666666666666
>>> ecdf([1.0, 2.0, 3.0], [0.0, 3.0]).tolist()
[0.0, 1.0]

The sup distance between ``F_n`` and a continuous distribution function
``G`` is reached next to one of the jumps, so it can be computed exactly
from the order statistics ``y_(1) <= ... <= y_(n)``::

    sup |F_n - G| = max_i max(i/n - G(y_(i)), G(y_(i)) - (i-1)/n)

"""

from collections.abc import Callable

import numpy as np

from ..exceptions import ContractError, ParameterDomainError

__all__ = ("ecdf", "ecdf_left", "sup_norm_exact", "sorted_sample")

_MONOTONICITY_SLACK = 1e-12


def sorted_sample(sample: np.ndarray | list[float]) -> np.ndarray:
    """Return the sample sorted, refusing empty or non finite samples."""
    values = np.asarray(sample, dtype=np.float64)
    if values.ndim != 1 or values.size == 0:
        raise ParameterDomainError("len(sample)", int(values.size), "nonempty 1-d sample")
    if not np.all(np.isfinite(values)):
        raise ParameterDomainError("sample", "non finite values", "finite reals")
    return np.sort(values)


def _count(
    sample: np.ndarray | list[float], x: float | np.ndarray, side: str
) -> float | np.ndarray:
    ordered = sorted_sample(sample)
    counts = np.searchsorted(ordered, x, side=side)  # type: ignore[call-overload]
    fraction = counts / len(ordered)
    return fraction if np.ndim(x) else float(fraction)


def ecdf(
    sample: np.ndarray | list[float], x: float | np.ndarray | list[float]
) -> float | np.ndarray:
    """Value of the empirical distribution function of ``sample`` at ``x``."""
    return _count(sample, np.asarray(x, dtype=np.float64), "right")


def ecdf_left(
    sample: np.ndarray | list[float], x: float | np.ndarray | list[float]
) -> float | np.ndarray:
    """Left limit ``F_n(x-)``, the fraction of the sample strictly below ``x``."""
    return _count(sample, np.asarray(x, dtype=np.float64), "left")


def sup_norm_exact(
    sample: np.ndarray | list[float],
    cdf: Callable[[np.ndarray], np.ndarray],
) -> float:
    """Exact ``sup_x |F_n(x) - G(x)|`` for a continuous distribution function ``G``.

    ``G`` is spot checked to be a finite, nondecreasing function with values
    in ``[0, 1]`` both on the order statistics and on a regular grid spanning
    them, a :class:`~lrdpyground.exceptions.ContractError` is raised otherwise.

    >>> sup_norm_exact([0.0], lambda x: np.full_like(x, 0.5))
    0.5

    :param sample: The sample.
    :param cdf: Vectorized evaluator of ``G``.
    """
    ordered = sorted_sample(sample)
    n = len(ordered)
    values = np.asarray(cdf(ordered), dtype=np.float64)
    probe = np.linspace(ordered[0] - 1.0, ordered[-1] + 1.0, 257)
    probe_values = np.asarray(cdf(probe), dtype=np.float64)
    for checked in (values, probe_values):
        if not np.all(np.isfinite(checked)):
            raise ContractError("distribution function returned non finite values")
        if np.any(checked < 0.0) or np.any(checked > 1.0):
            raise ContractError("distribution function left the interval [0, 1]")
        if np.any(np.diff(checked) < -_MONOTONICITY_SLACK):
            raise ContractError("distribution function is not nondecreasing")

    ranks = np.arange(1, n + 1, dtype=np.float64)
    above = ranks / n - values
    below = values - (ranks - 1.0) / n
    return float(max(above.max(), below.max()))
