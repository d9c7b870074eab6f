"""Multilinear sums and their variances.

The empirical distribution function of a long memory linear process
is not driven by the classical Brownian bridge: its fluctuations are
dominated by the partial sums of the process itself and, at the next
order, by the sums of products of pairs of innovations.
Those are the multilinear sums ``Y_{n,r}``:

>>> from lrdpyground.process import ProcessConfig, gen_coefficients, generate_path
>>> from lrdpyground.multilinear import compute_sums, exact_sigma1_sq
>>> config = ProcessConfig(beta=0.7, trunc_k=32, seed=2)
>>> coeffs = gen_coefficients(0.7, 32)
>>> sums = compute_sums(generate_path(config, 64), coeffs)
>>> sums.y0
64

Their standard deviations ``sigma_{n,1}`` and ``sigma_{n,2}`` grow like
``n^(3/2 - beta)`` and ``n^(2 - 2 beta)``, faster than the ``sqrt(n)``
of short memory sequences, and they are the normalizations of every
statistic in the package. They are always computed exactly for the
truncated model, never replaced by their asymptotic expressions.

The :mod:`lrdpyground.multilinear.oracles` module provides brute force
versions of both the sums and the variances, meant for the test suite.
"""

from .sums import MultilinearSums, compute_sums
from .variances import (
    DEFAULT_SIGMA2_BUDGET,
    MonteCarloEstimate,
    VariancePair,
    exact_sigma1_sq,
    exact_sigma2_sq,
    monte_carlo_sigma2,
    sample_variance_estimate,
    sigma2_sq_from_autocovariances,
)

__all__ = (
    "MultilinearSums",
    "compute_sums",
    "DEFAULT_SIGMA2_BUDGET",
    "MonteCarloEstimate",
    "VariancePair",
    "exact_sigma1_sq",
    "exact_sigma2_sq",
    "monte_carlo_sigma2",
    "sample_variance_estimate",
    "sigma2_sq_from_autocovariances",
)
