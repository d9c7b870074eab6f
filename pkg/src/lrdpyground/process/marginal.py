"""Closed form marginal law of the process.

With standard Gaussian innovations every ``X_i`` is a finite linear
combination of independent Gaussians, so its distribution ``F`` is
exactly the centered normal law with variance ``var_x = sum_k c_k^2``.
The derivatives of its density are Hermite polynomials times the density:

    ``f^(r)(z) = (-1)^r He_r(z/s) phi(z/s) / s^(r+1)``, ``s = sqrt(var_x)``

The observations ``Y_i = sigma X_i + mu`` form a location-scale family
``H(x; theta) = F((x - theta) / |sigma|)`` and only the location
``theta`` is ever estimated. Derivatives with respect to ``theta``
are therefore derivatives of ``F`` up to a sign and a power of sigma.

>>> from lrdpyground.process import gen_coefficients
>>> model = marginal_model(gen_coefficients(0.7, 0), mu=0.0, sigma=1.0)
>>> model.var_x, round(model.sup_density(), 6)
(1.0, 0.398942)
>>> model.pdf_derivative(0.0, 1) == 0
True
"""

import math
from dataclasses import dataclass

import numpy as np
import scipy.integrate
import scipy.special
import scipy.stats

from ..exceptions import ParameterDomainError, QuadratureError
from .coefficients import CoefficientSet

__all__ = ("MarginalModel", "marginal_model")

ArrayLike = float | np.ndarray


@dataclass(frozen=True)
class MarginalModel:
    """The Gaussian marginal ``F`` of ``X_1`` and the family ``H(.; theta)``."""

    var_x: float
    mu: float = 0.0
    sigma: float = 1.0

    @property
    def std_x(self) -> float:
        """Standard deviation of ``X_1``."""
        return math.sqrt(self.var_x)

    @property
    def scale(self) -> float:
        """Scale of the observations, ``|sigma|``."""
        return abs(self.sigma)

    def cdf(self, z: ArrayLike) -> ArrayLike:
        """The distribution function ``F`` of ``X_1``."""
        return scipy.stats.norm.cdf(z, scale=self.std_x)

    def pdf(self, z: ArrayLike) -> ArrayLike:
        """The density ``f`` of ``X_1``."""
        return scipy.stats.norm.pdf(z, scale=self.std_x)

    def pdf_derivative(self, z: ArrayLike, order: int) -> ArrayLike:
        """The derivative ``f^(order)`` of the density, ``order`` in ``0 .. 3``.

        >>> model = MarginalModel(var_x=1.0)
        >>> round(float(model.pdf_derivative(1.0, 1)), 6) == round(-float(model.pdf(1.0)), 6)
        True
        """
        if order not in (0, 1, 2, 3):
            raise ParameterDomainError("order", order, "{0, 1, 2, 3}")
        s = self.std_x
        t = np.asarray(z, dtype=np.float64) / s
        hermite = scipy.special.eval_hermitenorm(order, t)
        value = (-1) ** order * hermite * scipy.stats.norm.pdf(t) / s ** (order + 1)
        return value if np.ndim(z) else float(value)

    def standardize(self, x: ArrayLike, theta: float | None = None) -> ArrayLike:
        """Map an observation to the scale of ``X_1``, ``(x - theta) / |sigma|``."""
        theta = self.mu if theta is None else theta
        return (np.asarray(x, dtype=np.float64) - theta) / self.scale

    def location_cdf(self, x: ArrayLike, theta: float | None = None) -> ArrayLike:
        """``H(x; theta) = F((x - theta) / |sigma|)``, ``theta`` defaults to ``mu``."""
        return self.cdf(self.standardize(x, theta))

    def location_pdf(self, x: ArrayLike, theta: float | None = None) -> ArrayLike:
        """Density of ``H(.; theta)``, ``f((x - theta) / |sigma|) / |sigma|``."""
        return self.pdf(self.standardize(x, theta)) / self.scale

    def theta_derivative(
        self, x: ArrayLike, order: int, theta: float | None = None
    ) -> ArrayLike:
        """Derivative of ``H(x; theta)`` of the given order with respect to ``theta``.

        Each derivative in ``theta`` brings a factor ``-1/|sigma|``::

            d^r/dtheta^r H(x; theta) = (-1)^r |sigma|^-r f^(r-1)((x - theta) / |sigma|)

        """
        if order not in (1, 2, 3, 4):
            raise ParameterDomainError("order", order, "{1, 2, 3, 4}")
        z = self.standardize(x, theta)
        return (-1) ** order * self.pdf_derivative(z, order - 1) / self.scale**order

    def ppf(self, prob: ArrayLike) -> ArrayLike:
        """Inverse of ``F``."""
        return scipy.stats.norm.ppf(prob, scale=self.std_x)

    def quantile(self, prob: ArrayLike, theta: float | None = None) -> ArrayLike:
        """Inverse of ``H(.; theta)``."""
        theta = self.mu if theta is None else theta
        return theta + self.scale * self.ppf(prob)

    def sup_density(self) -> float:
        """Maximum of ``f``, reached at the origin: ``(2 pi var_x)^-1/2``."""
        return 1.0 / math.sqrt(2.0 * math.pi * self.var_x)

    def sup_abs_derivative(self, order: int) -> float:
        """Maximum of ``|f^(order)|`` over the real line.

        Evaluated on a dense grid of 8 standard deviations each side,
        the derivatives of a Gaussian density peak well inside it.
        """
        z = np.linspace(-8.0, 8.0, 16001) * self.std_x
        return float(np.max(np.abs(self.pdf_derivative(z, order))))

    def density_mass(self) -> float:
        """Integral of ``f`` by adaptive quadrature, ``1`` up to ``1e-8``."""
        mass, error = scipy.integrate.quad(
            self.pdf, -np.inf, np.inf, epsabs=1e-12, epsrel=1e-12
        )
        if error > 1e-8:
            raise QuadratureError(f"density mass estimated with error {error}")
        return float(mass)


def marginal_model(coeffs: CoefficientSet, mu: float, sigma: float) -> MarginalModel:
    """Build the marginal law of ``Y_1 = sigma * X_1 + mu`` for the given coefficients.

    :param coeffs: The moving average coefficients of the process.
    :param mu: Location of the observations, ``theta_0``.
    :param sigma: Scale of the observations, any nonzero real.
    """
    if not np.all(np.isfinite(coeffs.c)):
        raise ParameterDomainError("coeffs", str(coeffs), "finite coefficients")
    if not math.isfinite(mu):
        raise ParameterDomainError("mu", mu, "finite real")
    if not math.isfinite(sigma) or sigma == 0:
        raise ParameterDomainError("sigma", sigma, "nonzero real")
    return MarginalModel(var_x=coeffs.variance(), mu=float(mu), sigma=float(sigma))
