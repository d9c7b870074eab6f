"""The empirical processes of a realized path.

Three normalized deviations of an empirical distribution function are
studied, all scaled by ``n / sigma_{n,1}``:

* ``beta_n(x)``, the deviation of the ECDF ``F_n`` of ``X_1 .. X_n`` from ``F``.
* ``gamma_n(x)``, the deviation of the ECDF ``H_n`` of the observations
  from their true law ``H(x; theta_0)``.
* ``gamma_hat_n(x)``, the deviation of ``H_n`` from ``H(x; theta_hat)``,
  the model evaluated at an estimated location.

For a positive scale the first two only differ by a change of variables,
``gamma_n(x) = beta_n((x - mu) / sigma)``.

Each process is recorded as a :class:`ProcessTrace`, its values on an
:class:`~lrdpyground.empirical.grid.EvaluationGrid` together with the
left limits at the same points, so that the supremum of the step
process is computed exactly when the grid contains the jumps.
"""

import enum
import typing
from dataclasses import dataclass, field

import numpy as np
import pyarrow as pa

from ..exceptions import ParameterDomainError
from ..process import MarginalModel, PathBundle
from ..scalings import ScalingSet
from .ecdf import ecdf, ecdf_left
from .grid import DEFAULT_GRID_M, EvaluationGrid

__all__ = (
    "TraceLabel",
    "ProcessTrace",
    "process_trace",
    "default_grid",
    "step_deviation",
)


class TraceLabel(str, enum.Enum):
    """Which process a trace holds."""

    BETA_N = "beta_n"
    GAMMA_N = "gamma_n"
    GAMMA_HAT_N = "gamma_hat_n"
    S_NP_RESIDUAL = "s_np_residual"


@dataclass(frozen=True, eq=False)
class ProcessTrace:
    """Values of a normalized process on a grid.

    ``values`` already include the normalization, ``scaling_used``
    is the factor applied to the unnormalized sums of indicators.
    ``left_limits``, when present, holds the limit from the left
    of the process at each grid point.
    """

    grid: EvaluationGrid
    values: np.ndarray = field(repr=False)
    label: TraceLabel
    scaling_used: float
    left_limits: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        if len(self.values) != len(self.grid):
            raise ParameterDomainError(
                "len(values)", len(self.values), f"the grid size {len(self.grid)}"
            )
        if not np.all(np.isfinite(self.values)):
            raise ParameterDomainError("values", "non finite", "finite reals")
        self.values.setflags(write=False)
        if self.left_limits is not None:
            self.left_limits.setflags(write=False)

    def sup(self) -> float:
        """Supremum of the absolute value of the process over the grid."""
        top = float(np.max(np.abs(self.values)))
        if self.left_limits is not None:
            top = max(top, float(np.max(np.abs(self.left_limits))))
        return top

    def to_table(self) -> pa.Table:
        """The trace as a table with columns ``x, value, label``.

        >>> grid = EvaluationGrid.sample_jumps([0.0, 1.0])
        >>> trace = ProcessTrace(grid, np.array([0.5, -0.5]), TraceLabel.BETA_N, 1.0)
        >>> trace.to_table().to_pydict()
        {'x': [0.0, 1.0], 'value': [0.5, -0.5], 'label': ['beta_n', 'beta_n']}
        """
        return pa.table(
            {
                "x": pa.array(self.grid.points, type=pa.float64()),
                "value": pa.array(self.values, type=pa.float64()),
                "label": pa.array([self.label.value] * len(self.grid), type=pa.string()),
            }
        )


def default_grid(
    sample: np.ndarray,
    marginal: MarginalModel,
    on: typing.Literal["x", "y"] = "y",
    m: int = DEFAULT_GRID_M,
) -> EvaluationGrid:
    """Jumps of the sample together with ``m`` quantiles of the model."""
    return EvaluationGrid.union(
        EvaluationGrid.sample_jumps(sample),
        EvaluationGrid.quantile_grid(marginal, m, on=on),
    )


def step_deviation(
    sample: np.ndarray, points: np.ndarray, target: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Unnormalized ``sum_i (1{sample_i <= x} - target(x))`` and its left limits."""
    n = len(sample)
    right = n * np.asarray(ecdf(sample, points)) - n * target
    left = n * np.asarray(ecdf_left(sample, points)) - n * target
    return right, left


def process_trace(
    path: PathBundle,
    marginal: MarginalModel,
    scalings: ScalingSet,
    which: TraceLabel | str,
    theta_hat: float | None = None,
    grid: EvaluationGrid | None = None,
) -> ProcessTrace:
    """Evaluate one of the empirical processes of ``path``.

    :param path: The realized path.
    :param marginal: The model of the path.
    :param scalings: Scalings of the model at the size of the path.
    :param which: ``beta_n``, ``gamma_n`` or ``gamma_hat_n``.
    :param theta_hat: The estimated location, required by ``gamma_hat_n`` only.
    :param grid: Evaluation points, on the scale of ``X`` for ``beta_n`` and of
                 the observations otherwise. Defaults to the sample jumps
                 joined with 512 model quantiles.
    """
    which = TraceLabel(which)
    if which is TraceLabel.S_NP_RESIDUAL:
        raise ParameterDomainError(
            "which", which.value, "{beta_n, gamma_n, gamma_hat_n}, use reduction_residual"
        )
    if which is TraceLabel.GAMMA_HAT_N:
        if theta_hat is None or not np.isfinite(theta_hat):
            raise ParameterDomainError("theta_hat", theta_hat, "finite real for gamma_hat_n")
    elif theta_hat is not None:
        raise ParameterDomainError("theta_hat", theta_hat, f"None for {which.value}")
    if scalings.n != path.n:
        raise ParameterDomainError("scalings.n", scalings.n, f"the path size {path.n}")

    if which is TraceLabel.BETA_N:
        sample = path.x
        grid = grid if grid is not None else default_grid(sample, marginal, on="x")
        target = marginal.cdf(grid.points)
    else:
        sample = path.y
        grid = grid if grid is not None else default_grid(sample, marginal, on="y")
        target = marginal.location_cdf(grid.points, theta_hat)

    scaling = 1.0 / scalings.sigma_n1
    right, left = step_deviation(sample, grid.points, np.asarray(target))
    return ProcessTrace(
        grid=grid,
        values=scaling * right,
        label=which,
        scaling_used=scaling,
        left_limits=scaling * left,
    )
