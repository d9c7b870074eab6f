"""LRDPyground

A simulation playground for empirical processes of long-range dependent
sequences when the location parameter of the model is estimated.

The observations are a location-scale transform ``Y_i = sigma * X_i + mu`` of a
linear process ``X_i = sum_k c_k eps_{i-k}`` whose coefficients decay like
``k^-beta`` with ``beta`` in ``(1/2, 1)``. For such sequences the covariances
are not summable and the classical ``sqrt(n)`` theory of empirical processes
breaks down: the empirical process must be normalized by the standard
deviation of the partial sums, and once the mean is estimated the leading
term cancels out entirely.

The platform is constituted by multiple components, each isolated within its own
package and each self documented in literate programming style.

The primary components are:

* :mod:`lrdpyground.process`, generation of the linear process and its closed form marginal.
* :mod:`lrdpyground.multilinear`, the multilinear forms ``Y_{n,r}`` and their exact variances.
* :mod:`lrdpyground.scalings`, every normalizing sequence used by the limit theorems.
* :mod:`lrdpyground.estimators`, sample mean and M-estimators of location.
* :mod:`lrdpyground.empirical`, empirical processes and reduction principle diagnostics.
* :mod:`lrdpyground.gof`, Kolmogorov-Smirnov and Cramer-von Mises statistics.
* :mod:`lrdpyground.harness`, the Monte Carlo engine that checks the limit theorems.
* :mod:`lrdpyground.reporting`, summaries of result tables and their CSV and JSON artifacts.

For the user guide and code documentation of each component, refer to the
component itself.
"""

from . import empirical, estimators, gof, harness, multilinear, process, reporting, scalings
from .exceptions import LRDError
from .version import __version__

__all__ = (
    "empirical",
    "estimators",
    "gof",
    "harness",
    "multilinear",
    "process",
    "reporting",
    "scalings",
    "LRDError",
    "__version__",
)
