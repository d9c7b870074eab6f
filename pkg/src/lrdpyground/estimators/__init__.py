"""Estimators of the location of the observations.

Goodness of fit statistics with estimated parameters compare the empirical
distribution function with ``H(.; theta_hat)``, the model evaluated at an
estimated location. Two families of estimators are provided:

* The sample mean ``Y_bar``.
* M-estimators, solving ``sum_j psi(Y_j - x) = 0`` for a score ``psi``
  taken from a small catalog (sign, Huber, smoothed sign).

Estimators are selected by name, which is also how they appear in the
result records:

>>> from lrdpyground.estimators import parse_estimator
>>> [parse_estimator(spec).name for spec in ("none", "mean", "m:sign", "m:huber")]
['none', 'mean', 'm:sign', 'm:huber:1.345']

The expansion of an M-estimator around the true location is governed by
the functionals ``lambda_k`` of its score, see
:mod:`lrdpyground.estimators.functionals`.
"""

from .functionals import (
    LambdaPair,
    estimate_sigma_psi_sq,
    lambda_k,
    lambda_pair,
    psi_mean,
)
from .location import (
    KnownLocation,
    LocationEstimator,
    MeanEstimator,
    MEstimator,
    m_estimate,
    parse_estimator,
    sample_mean,
)
from .psi import (
    PSI_CATALOG,
    CustomPsi,
    HuberPsi,
    PsiFunction,
    SignPsi,
    SmoothedSignPsi,
    parse_psi,
)

__all__ = (
    "LambdaPair",
    "estimate_sigma_psi_sq",
    "lambda_k",
    "lambda_pair",
    "psi_mean",
    "KnownLocation",
    "LocationEstimator",
    "MeanEstimator",
    "MEstimator",
    "m_estimate",
    "parse_estimator",
    "sample_mean",
    "PSI_CATALOG",
    "CustomPsi",
    "HuberPsi",
    "PsiFunction",
    "SignPsi",
    "SmoothedSignPsi",
    "parse_psi",
)
