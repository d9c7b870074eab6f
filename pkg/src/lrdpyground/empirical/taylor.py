"""Taylor decomposition of the estimated empirical process.

Replacing the true location by an estimate shifts the target distribution
function, and expanding ``H(x; theta_hat)`` around ``theta_0`` gives

    ``H(x; theta_0) - H(x; theta_hat) = (theta_0 - theta_hat) dH(x; theta_0)
    - (theta_0 - theta_hat)^2 d2H(x; theta_0) / 2 + R(x)``

with ``|R(x)| <= |theta_0 - theta_hat|^3 sup |d3H| / 6`` and
``d^rH = (-1)^r |sigma|^-r f^(r-1)``. Scaled by ``n / sigma_{n,1}`` the
estimated process is then ``gamma_hat_n = gamma_n + first + second + remainder``.

When the location is estimated by the sample mean,
``theta_hat - theta_0 = sigma X_bar``, and the first order term becomes
``sigma_{n,1}^-1 f((x - mu) / sigma) Y_{n,1}``: it cancels the leading part
of ``gamma_n``, which is why the estimated process is of a smaller order.
"""

from dataclasses import dataclass, field

import numpy as np

from ..exceptions import ParameterDomainError
from ..process import MarginalModel, PathBundle
from ..scalings import ScalingSet
from .grid import EvaluationGrid
from .processes import default_grid, step_deviation

__all__ = ("TaylorDecomposition", "taylor_decomposition")


@dataclass(frozen=True, eq=False)
class TaylorDecomposition:
    """Named terms of the expansion of ``gamma_hat_n`` on a grid of observations."""

    grid: EvaluationGrid
    theta0: float
    theta_hat: float
    gamma_n: np.ndarray = field(repr=False)
    gamma_hat_n: np.ndarray = field(repr=False)
    first_order: np.ndarray = field(repr=False)
    second_order: np.ndarray = field(repr=False)
    remainder_bound: float
    density: np.ndarray = field(repr=False)
    sigma_n1: float
    sign_sigma: float = 1.0

    @property
    def reconstruction(self) -> np.ndarray:
        """``gamma_n`` plus the Taylor terms through the second order."""
        return self.gamma_n + self.first_order + self.second_order

    @property
    def reconstruction_error(self) -> float:
        """Supremum over the grid of ``|gamma_hat_n - reconstruction|``."""
        return float(np.max(np.abs(self.gamma_hat_n - self.reconstruction)))

    def mean_cancellation_error(self, y1: float) -> float:
        """Distance of the first order term from ``sigma_{n,1}^-1 f((x - mu)/sigma) Y_{n,1}``.

        It vanishes, up to rounding, when ``theta_hat`` is the sample mean.

        :param y1: The sum ``Y_{n,1}`` of the path.
        """
        expected = self.sign_sigma * self.density * y1 / self.sigma_n1
        return float(np.max(np.abs(self.first_order - expected)))


def taylor_decomposition(
    path: PathBundle,
    marginal: MarginalModel,
    theta_hat: float,
    scalings: ScalingSet,
    grid: EvaluationGrid | None = None,
) -> TaylorDecomposition:
    """Decompose ``gamma_hat_n`` into ``gamma_n`` and the Taylor terms of the shift.

    :param path: The realized path.
    :param marginal: The model of the path.
    :param theta_hat: The estimated location.
    :param scalings: Scalings of the model at the size of the path.
    :param grid: Evaluation points on the scale of the observations, defaults
                 to the jumps of the sample joined with 512 model quantiles.
    """
    if theta_hat is None or not np.isfinite(theta_hat):
        raise ParameterDomainError("theta_hat", theta_hat, "finite real")
    if scalings.n != path.n:
        raise ParameterDomainError("scalings.n", scalings.n, f"the path size {path.n}")
    if grid is None:
        grid = default_grid(path.y, marginal, on="y")
    points = grid.points
    n = path.n
    theta0 = marginal.mu
    delta = theta0 - float(theta_hat)
    scale = n / scalings.sigma_n1

    gamma_n, _ = step_deviation(path.y, points, marginal.location_cdf(points))
    gamma_hat_n, _ = step_deviation(
        path.y, points, marginal.location_cdf(points, float(theta_hat))
    )
    first = scale * delta * marginal.theta_derivative(points, 1)
    second = -0.5 * scale * delta**2 * marginal.theta_derivative(points, 2)
    third_derivative_bound = marginal.sup_abs_derivative(2) / marginal.scale**3
    remainder_bound = scale * abs(delta) ** 3 * third_derivative_bound / 6.0

    return TaylorDecomposition(
        grid=grid,
        theta0=theta0,
        theta_hat=float(theta_hat),
        gamma_n=gamma_n / scalings.sigma_n1,
        gamma_hat_n=gamma_hat_n / scalings.sigma_n1,
        first_order=np.asarray(first),
        second_order=np.asarray(second),
        remainder_bound=remainder_bound,
        density=np.asarray(marginal.pdf(marginal.standardize(points))),
        sigma_n1=scalings.sigma_n1,
        sign_sigma=float(np.sign(marginal.sigma)),
    )
