"""Goodness of fit statistics.

A goodness of fit statistic measures how far the empirical distribution
function of the observations is from the model. When the location of
the model is known the Kolmogorov-Smirnov statistic, scaled by
``n / sigma_{n,1}``, converges to ``|Z| sup f``. When the location is
estimated the leading term cancels and the same scaling sends the
statistic to zero: the estimated statistics need the larger scale
``n / sigma_{n,2}`` below ``beta = 3/4`` and the classical ``sqrt(n)``
above it.

>>> from lrdpyground.process import ProcessConfig, generate_path, gen_coefficients, marginal_model
>>> from lrdpyground.scalings import build_scaling_set
>>> from lrdpyground.estimators import MeanEstimator
>>> config = ProcessConfig(beta=0.65, trunc_k=256, seed=3)
>>> path = generate_path(config, 128)
>>> model = marginal_model(gen_coefficients(0.65, 256), mu=0.0, sigma=1.0)
>>> result = ks_estimated(path, model, MeanEstimator(), build_scaling_set(config, 128))
>>> result.normalization.value, result.estimator_used
('sigma_n2_n', 'mean')
"""

from .statistics import (
    GofResult,
    Normalization,
    cvm_estimated,
    cvm_limit_constant,
    cvm_order_statistic_sum,
    ks_estimated,
    ks_known,
    regime_normalization,
)

__all__ = (
    "GofResult",
    "Normalization",
    "ks_known",
    "ks_estimated",
    "cvm_estimated",
    "cvm_order_statistic_sum",
    "cvm_limit_constant",
    "regime_normalization",
)
