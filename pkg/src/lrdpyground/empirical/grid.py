"""Points where the empirical processes are evaluated.

A supremum over the whole real line needs a computable surrogate.
Step functions minus smooth ones reach their extremes next to the jumps,
so the jumps of the sample are always part of the evaluation. The smooth
correction terms of the expansions are instead sampled on a grid of
quantiles of the model, ``H^-1(g / (m+1); theta_0)`` for ``g = 1 .. m``,
which concentrates points where the probability mass is.

>>> from lrdpyground.process import MarginalModel
>>> grid = EvaluationGrid.quantile_grid(MarginalModel(var_x=1.0), 3)
>>> grid.points.round(4).tolist(), grid.origin.value, grid.m
([-0.6745, 0.0, 0.6745], 'quantile_grid', 3)
>>> EvaluationGrid.union(grid, EvaluationGrid.sample_jumps([2.0, -3.0])).points.round(4).tolist()
[-3.0, -0.6745, 0.0, 0.6745, 2.0]
"""

import enum
import typing
from dataclasses import dataclass, field

import numpy as np

from ..exceptions import ParameterDomainError
from ..process import MarginalModel

__all__ = ("EvaluationGrid", "GridOrigin", "DEFAULT_GRID_M")

DEFAULT_GRID_M = 512


class GridOrigin(str, enum.Enum):
    """How the points of a grid were chosen."""

    SAMPLE_JUMPS = "sample_jumps"
    QUANTILE_GRID = "quantile_grid"
    UNION = "union"


@dataclass(frozen=True, eq=False)
class EvaluationGrid:
    """A strictly increasing set of evaluation points."""

    points: np.ndarray = field(repr=False)
    origin: GridOrigin
    m: int | None = None

    def __post_init__(self) -> None:
        points = np.array(self.points, dtype=np.float64)
        if points.ndim != 1 or points.size == 0:
            raise ParameterDomainError("points", int(points.size), "nonempty 1-d array")
        if not np.all(np.isfinite(points)) or np.any(np.diff(points) <= 0):
            raise ParameterDomainError(
                "points", "unsorted or non finite", "strictly increasing finite reals"
            )
        points.setflags(write=False)
        object.__setattr__(self, "points", points)

    def __len__(self) -> int:
        return len(self.points)

    @classmethod
    def sample_jumps(cls, sample: np.ndarray | list[float]) -> "EvaluationGrid":
        """The distinct values of the sample, where its ECDF jumps."""
        points = np.unique(np.asarray(sample, dtype=np.float64))
        return cls(points=points, origin=GridOrigin.SAMPLE_JUMPS)

    @classmethod
    def quantile_grid(
        cls,
        marginal: MarginalModel,
        m: int = DEFAULT_GRID_M,
        on: typing.Literal["x", "y"] = "y",
        theta: float | None = None,
    ) -> "EvaluationGrid":
        """The ``m`` quantiles of levels ``g / (m+1)`` of the model.

        :param marginal: The model whose quantiles are taken.
        :param m: The number of points.
        :param on: ``"y"`` for quantiles of the observations ``H(.; theta)``,
                   ``"x"`` for quantiles of ``F``, the law of ``X_1``.
        :param theta: Location the quantiles of the observations are anchored at,
                      the true one by default.
        """
        if not isinstance(m, int) or m < 1:
            raise ParameterDomainError("m", m, "integer >= 1")
        levels = np.arange(1, m + 1, dtype=np.float64) / (m + 1)
        if on == "x":
            points = marginal.ppf(levels)
        elif on == "y":
            points = marginal.quantile(levels, theta)
        else:
            raise ParameterDomainError("on", on, "{x, y}")
        return cls(points=np.asarray(points), origin=GridOrigin.QUANTILE_GRID, m=m)

    @classmethod
    def union(cls, *grids: "EvaluationGrid") -> "EvaluationGrid":
        """All the points of the given grids, duplicates removed."""
        if not grids:
            raise ParameterDomainError("grids", 0, "at least one grid")
        if len(grids) == 1:
            return grids[0]
        points = np.unique(np.concatenate([grid.points for grid in grids]))
        return cls(points=points, origin=GridOrigin.UNION)
