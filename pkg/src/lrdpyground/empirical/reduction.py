"""Reduction principle diagnostic.

The empirical process of a long memory linear process is asymptotically
driven by the multilinear sums: expanding the indicator around the
distribution function gives

    ``sum_i (1{X_i <= x} - F(x)) ~ sum_{r=1}^{p} (-1)^r F^(r)(x) Y_{n,r}``

so that the residual

    ``S_{n,p}(x) = sum_i (1{X_i <= x} - F(x)) + sum_{r=1}^{p} (-1)^(r-1) F^(r)(x) Y_{n,r}``

is uniformly of a smaller order than ``sigma_{n,p}``. For ``p = 2`` this is
``S(x) = sum_i (1{X_i <= x} - F(x)) + f(x) Y_{n,1} - f'(x) Y_{n,2}``.

The residual is evaluated at the jumps of the sample, where its step part
reaches its extremes, and on a grid of quantiles of ``F`` for the smooth
part, then normalized by ``sigma_{n,p}``. A decreasing normalized supremum
as ``n`` grows is the numerical counterpart of the theorem.
"""

from ..exceptions import ConsistencyError, ParameterDomainError
from ..multilinear import MultilinearSums
from ..process import MarginalModel, PathBundle
from ..scalings import ScalingSet
from .grid import DEFAULT_GRID_M, EvaluationGrid
from .processes import ProcessTrace, TraceLabel, default_grid, step_deviation

__all__ = ("reduction_residual",)


def reduction_residual(
    path: PathBundle,
    marginal: MarginalModel,
    sums: MultilinearSums,
    scalings: ScalingSet,
    p: int = 2,
    m: int = DEFAULT_GRID_M,
    grid: EvaluationGrid | None = None,
) -> ProcessTrace:
    """Evaluate ``sigma_{n,p}^-1 S_{n,p}`` on the jumps of ``X`` and ``m`` quantiles of ``F``.

    The supremum of the returned trace, :meth:`ProcessTrace.sup`,
    is the normalized diagnostic ``sigma_{n,p}^-1 sup |S_{n,p}|``.

    :param path: The realized path.
    :param marginal: The model of the path.
    :param sums: The multilinear sums of the path.
    :param scalings: Scalings of the model at the size of the path.
    :param p: The order of the reduction, 1 or 2.
    :param m: The number of quantile points added to the sample jumps.
    :param grid: Evaluation points on the scale of ``X``, replaces the default grid.
    """
    if p not in (1, 2):
        raise ParameterDomainError("p", p, "{1, 2}")
    if sums.y0 != path.n or scalings.n != path.n:
        raise ConsistencyError(
            f"sums for n={sums.y0} and scalings for n={scalings.n} "
            f"do not match a path of size {path.n}"
        )
    if grid is None:
        grid = default_grid(path.x, marginal, on="x", m=m)
    points = grid.points

    step, step_left = step_deviation(path.x, points, marginal.cdf(points))
    # F^(r) = f^(r-1), the sign alternates starting from +f Y_{n,1}.
    correction = marginal.pdf(points) * sums.y1
    if p == 2:
        correction = correction - marginal.pdf_derivative(points, 1) * sums.y2

    sigma = scalings.sigma_n1 if p == 1 else scalings.sigma_n2
    scaling = 1.0 / sigma
    return ProcessTrace(
        grid=grid,
        values=scaling * (step + correction),
        label=TraceLabel.S_NP_RESIDUAL,
        scaling_used=scaling,
        left_limits=scaling * (step_left + correction),
    )
