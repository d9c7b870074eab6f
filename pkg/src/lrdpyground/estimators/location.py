"""Estimators of the location parameter.

The location ``theta_0 = mu`` of the observations is estimated either by
the sample mean or by an M-estimator, the point where the estimating
function ``g(x) = sum_j psi(Y_j - x)`` changes sign.

For a nondecreasing score ``g`` is nonincreasing, so the set of points
where ``|g|`` is smallest lies between ``inf {x: g(x) <= 0}`` and
``sup {x: g(x) >= 0}``. The estimate is the midpoint of that interval,
which for the sign score gives back the usual sample median:

>>> from lrdpyground.estimators import parse_psi
>>> m_estimate([1.0, 2.0, 3.0, 4.0], parse_psi("sign"))
2.5
"""

import abc
import logging
from collections.abc import Callable

import numpy as np

from ..exceptions import NoRootError, ParameterDomainError
from .psi import PsiFunction, parse_psi

__all__ = (
    "sample_mean",
    "m_estimate",
    "LocationEstimator",
    "KnownLocation",
    "MeanEstimator",
    "MEstimator",
    "parse_estimator",
    "DEFAULT_TOLERANCE",
    "MAX_BRACKET_EXPANSIONS",
)

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-10
MAX_BRACKET_EXPANSIONS = 64
_MAX_BISECTIONS = 200


def _as_sample(y: np.ndarray | list[float]) -> np.ndarray:
    sample = np.asarray(y, dtype=np.float64)
    if sample.ndim != 1 or len(sample) == 0:
        raise ParameterDomainError("len(y)", int(sample.size), "nonempty 1-d sample")
    return sample


def sample_mean(y: np.ndarray | list[float]) -> float:
    """Arithmetic mean of a nonempty sample.

    >>> sample_mean([1.0, 2.0, 3.0])
    2.0
    """
    return float(np.mean(_as_sample(y)))


def _boundary(
    predicate: Callable[[float], bool], low: float, high: float, tol: float
) -> float:
    """Locate where a monotone predicate flips from false at ``low`` to true at ``high``."""
    for _ in range(_MAX_BISECTIONS):
        if high - low <= tol:
            break
        middle = 0.5 * (low + high)
        if middle in (low, high):
            break
        if predicate(middle):
            high = middle
        else:
            low = middle
    return 0.5 * (low + high)


def m_estimate(
    y: np.ndarray | list[float], psi: PsiFunction, tol: float = DEFAULT_TOLERANCE
) -> float:
    """M-estimate of location, the midpoint of the minimizers of ``|sum_j psi(Y_j - x)|``.

    The search starts from the bracket ``[median - 1, median + 1]``, doubling
    its half width until the estimating function is strictly positive at the
    left end and strictly negative at the right one, then both ends of the
    minimizing interval are found by bisection down to a width ``tol``.

    :param y: The sample.
    :param psi: A nondecreasing bounded score.
    :param tol: Width the bisection stops at.
    """
    sample = _as_sample(y)
    if not tol > 0:
        raise ParameterDomainError("tol", tol, "positive real")

    def estimating(x: float) -> float:
        return float(np.sum(psi(sample - x)))

    center = float(np.median(sample))
    width = 1.0
    for _ in range(MAX_BRACKET_EXPANSIONS + 1):
        low, high = center - width, center + width
        if estimating(low) > 0 and estimating(high) < 0:
            break
        logger.debug("Expanding M-estimator bracket to half width %g", 2 * width)
        width *= 2.0
    else:
        raise NoRootError(
            f"sum of {psi} does not change sign within {width / 2:g} of the median "
            f"after {MAX_BRACKET_EXPANSIONS} expansions"
        )

    left = _boundary(lambda x: estimating(x) <= 0, low, high, tol)
    right = _boundary(lambda x: estimating(x) < 0, low, high, tol)
    return 0.5 * (left + right)


class LocationEstimator(abc.ABC):
    """Base class for the estimators of the location ``theta_0``."""

    @property
    @abc.abstractmethod
    def name(self) -> str:
        """Stable name of the estimator, used in result records."""
        ...

    @abc.abstractmethod
    def estimate(self, y: np.ndarray) -> float:
        """Estimate the location from the sample ``y``."""
        ...

    def __str__(self) -> str:
        return self.name

    __repr__ = __str__


class KnownLocation(LocationEstimator):
    """No estimation at all, the true location is used.

    >>> KnownLocation(3.0).estimate(np.array([10.0, 20.0]))
    3.0
    """

    def __init__(self, theta0: float = 0.0) -> None:
        """
        :param theta0: The true location, returned for every sample.
        """
        self.theta0 = float(theta0)

    @property
    def name(self) -> str:
        """Always ``none``."""
        return "none"

    def estimate(self, y: np.ndarray) -> float:
        """Return the true location."""
        return self.theta0


class MeanEstimator(LocationEstimator):
    """The sample mean ``Y_bar``."""

    @property
    def name(self) -> str:
        """Always ``mean``."""
        return "mean"

    def estimate(self, y: np.ndarray) -> float:
        """Return the sample mean."""
        return sample_mean(y)


class MEstimator(LocationEstimator):
    """M-estimator with the given score."""

    def __init__(self, psi: PsiFunction, tol: float = DEFAULT_TOLERANCE) -> None:
        """
        :param psi: The score function.
        :param tol: Bisection tolerance, see :func:`m_estimate`.
        """
        self.psi = psi
        self.tol = tol

    @property
    def name(self) -> str:
        """``m:`` followed by the score specification, like ``m:huber:1.345``."""
        return f"m:{self.psi.spec}"

    def estimate(self, y: np.ndarray) -> float:
        """Solve the estimating equation."""
        return m_estimate(y, self.psi, self.tol)


def parse_estimator(spec: str, theta0: float = 0.0) -> LocationEstimator:
    """Build an estimator from ``none``, ``mean`` or ``m:<psi>``.

    >>> parse_estimator("m:huber:1.345").name
    'm:huber:1.345'

    :param spec: The estimator specification.
    :param theta0: The true location, used by ``none``.
    """
    spec = spec.strip()
    if spec == "none":
        return KnownLocation(theta0)
    if spec == "mean":
        return MeanEstimator()
    if spec.startswith("m:"):
        return MEstimator(parse_psi(spec[2:]))
    raise ParameterDomainError("estimator", spec, "{none, mean, m:<psi>}")
