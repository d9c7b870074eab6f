"""Realizations of the truncated linear process.

A path of length ``n`` needs the innovations ``eps_t`` for
``t = 1-K .. n``, so that ``X_1`` is already computed over a full window
of ``K+1`` coefficients and no burn-in phase is required.
The innovations are stored in a single array where position ``j``
holds ``eps_{j+1-K}``.

Each observation is the convolution of the innovations with the
coefficients, ``X_i = sum_{k=0}^{K} c_k eps_{i-k}``, which is exactly
what a ``"valid"`` mode convolution computes. The same machinery computes
the two auxiliary series needed by the second order multilinear sum:

* ``U_i = sum_{j>=1} c_j eps_{i-j}``, the observation without its newest innovation.
* ``Q_i = sum_{j>=1} c_j^2 eps_{i-j}^2``, the diagonal part of ``U_i^2``.

For a white noise model (``K = 0``) both series vanish:

>>> from lrdpyground.process import ProcessConfig
>>> path = generate_path(ProcessConfig(beta=0.7, trunc_k=0, seed=5), 3)
>>> bool((path.x == path.eps).all()), path.u.tolist(), path.q.tolist()
(True, [0.0, 0.0, 0.0], [0.0, 0.0, 0.0])
"""

import logging
import typing
from dataclasses import dataclass, field

import numpy as np
import pyarrow as pa
import scipy.signal

from ..exceptions import ConsistencyError, InternalError, ParameterDomainError
from .coefficients import CoefficientSet, gen_coefficients
from .config import ProcessConfig

__all__ = ("PathBundle", "generate_path", "path_from_innovations", "MAX_INNOVATIONS")

logger = logging.getLogger(__name__)

MAX_INNOVATIONS = 2**34
"""Upper bound on ``n + K``, the number of innovations of a single path."""

ConvolutionMethod = typing.Literal["fft", "direct"]


@dataclass(frozen=True, eq=False)
class PathBundle:
    """One realized sample of the process with the series derived from it."""

    config: ProcessConfig
    eps: np.ndarray = field(repr=False)
    x: np.ndarray = field(repr=False)
    y: np.ndarray = field(repr=False)
    u: np.ndarray = field(repr=False)
    q: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        for array in (self.eps, self.x, self.y, self.u, self.q):
            array.setflags(write=False)

    @property
    def n(self) -> int:
        """Number of observations in the path."""
        return len(self.x)

    @property
    def newest_innovations(self) -> np.ndarray:
        """The innovations ``eps_1 .. eps_n`` entering each observation with ``c_0``."""
        return self.eps[self.config.trunc_k :]

    def to_table(self) -> pa.Table:
        """Return the observations as a table with columns ``i, x, y``.

        >>> from lrdpyground.process import ProcessConfig
        >>> table = generate_path(ProcessConfig(beta=0.7, trunc_k=4, seed=1), 3).to_table()
        >>> table.column_names, table.column("i").to_pylist()
        (['i', 'x', 'y'], [1, 2, 3])
        """
        return pa.table(
            {
                "i": pa.array(np.arange(1, self.n + 1), type=pa.int64()),
                "x": pa.array(self.x, type=pa.float64()),
                "y": pa.array(self.y, type=pa.float64()),
            }
        )


def _convolve(
    signal: np.ndarray, kernel: np.ndarray, method: ConvolutionMethod
) -> np.ndarray:
    if method == "fft":
        return scipy.signal.fftconvolve(signal, kernel, mode="valid")
    return np.convolve(signal, kernel, mode="valid")


def path_from_innovations(
    config: ProcessConfig,
    eps: np.ndarray,
    coeffs: CoefficientSet | None = None,
    method: ConvolutionMethod = "fft",
) -> PathBundle:
    """Build the path driven by the given innovations ``eps_{1-K} .. eps_n``.

    :param config: The model the innovations belong to.
    :param eps: The innovations, ``n + K`` of them.
    :param coeffs: The coefficients of the model, computed from ``config`` when omitted.
    :param method: ``"fft"`` for fast convolution or ``"direct"`` for the
                   plain ``O(nK)`` sum.
    """
    if method not in ("fft", "direct"):
        raise ParameterDomainError("method", method, "{fft, direct}")
    if coeffs is None:
        coeffs = gen_coefficients(config.beta, config.trunc_k)
    elif coeffs.trunc_k != config.trunc_k or coeffs.beta != config.beta:
        raise ConsistencyError(
            f"{coeffs} does not belong to a model with beta={config.beta}, "
            f"trunc_k={config.trunc_k}"
        )

    eps = np.array(eps, dtype=np.float64)
    trunc_k = config.trunc_k
    n = len(eps) - trunc_k
    if n < 1:
        raise ParameterDomainError("len(eps)", len(eps), f"integer >= {trunc_k + 1}")

    c = np.asarray(coeffs.c)
    if trunc_k == 0:
        x = c[0] * eps
        u = np.zeros(n)
        q = np.zeros(n)
    else:
        x = _convolve(eps, c, method)
        # Drop the newest innovation and the c_0 coefficient,
        # what is left is the contribution of eps_{i-1} .. eps_{i-K}.
        u = _convolve(eps[:-1], c[1:], method)
        q = _convolve(eps[:-1] ** 2, c[1:] ** 2, method)
    if len(x) != n or len(u) != n:
        raise InternalError(f"convolution produced {len(x)} observations, expected {n}")

    y = config.sigma * x + config.mu
    return PathBundle(config=config, eps=eps, x=x, y=y, u=u, q=q)


def generate_path(
    config: ProcessConfig,
    n: int,
    method: ConvolutionMethod = "fft",
    coeffs: CoefficientSet | None = None,
) -> PathBundle:
    """Simulate ``n`` observations of the model described by ``config``.

    The innovations are drawn from a :func:`numpy.random.default_rng`
    seeded with ``config.seed``, so the same configuration always
    reproduces the same path bit by bit.

    >>> from lrdpyground.process import ProcessConfig
    >>> config = ProcessConfig(beta=0.7, trunc_k=64, seed=11)
    >>> first, second = generate_path(config, 16), generate_path(config, 16)
    >>> bool((first.x == second.x).all())
    True

    :param config: The model to simulate.
    :param n: The number of observations.
    :param method: The convolution method, see :func:`path_from_innovations`.
    :param coeffs: Precomputed coefficients for ``config``, avoids rebuilding
                   them when many paths of the same model are generated.
    """
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ParameterDomainError("n", n, "integer >= 1")
    total = int(n) + config.trunc_k
    if total > MAX_INNOVATIONS:
        raise InternalError(
            f"a path with n={n} and trunc_k={config.trunc_k} needs {total} innovations, "
            f"more than the supported {MAX_INNOVATIONS}"
        )
    rng = np.random.default_rng(config.seed)
    eps = rng.standard_normal(total)
    logger.debug("Generated %d innovations for %s", total, config)
    return path_from_innovations(config, eps, coeffs=coeffs, method=method)
