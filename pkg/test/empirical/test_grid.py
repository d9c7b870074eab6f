import numpy as np
import pytest

from lrdpyground.empirical import EvaluationGrid, GridOrigin
from lrdpyground.exceptions import ParameterDomainError
from lrdpyground.process import MarginalModel


def test_quantile_grid_levels():
    model = MarginalModel(var_x=4.0, mu=1.0, sigma=-3.0)
    grid = EvaluationGrid.quantile_grid(model, 9, on="y")
    levels = np.arange(1, 10) / 10
    np.testing.assert_allclose(model.location_cdf(grid.points), levels, atol=1e-12)
    on_x = EvaluationGrid.quantile_grid(model, 9, on="x")
    np.testing.assert_allclose(model.cdf(on_x.points), levels, atol=1e-12)
    assert (grid.origin, grid.m) == (GridOrigin.QUANTILE_GRID, 9)


def test_quantile_grid_at_another_location():
    model = MarginalModel(var_x=1.0)
    shifted = EvaluationGrid.quantile_grid(model, 5, theta=2.0)
    base = EvaluationGrid.quantile_grid(model, 5)
    np.testing.assert_allclose(shifted.points, base.points + 2.0)


@pytest.mark.parametrize("m", [0, -1, 2.5])
def test_quantile_grid_size(m):
    with pytest.raises(ParameterDomainError):
        EvaluationGrid.quantile_grid(MarginalModel(var_x=1.0), m)


def test_quantile_grid_scale():
    with pytest.raises(ParameterDomainError):
        EvaluationGrid.quantile_grid(MarginalModel(var_x=1.0), 4, on="z")


def test_sample_jumps_removes_duplicates():
    grid = EvaluationGrid.sample_jumps([2.0, 1.0, 2.0])
    assert grid.points.tolist() == [1.0, 2.0]
    assert grid.origin is GridOrigin.SAMPLE_JUMPS
    assert grid.m is None


def test_union():
    first = EvaluationGrid.sample_jumps([0.0, 1.0])
    second = EvaluationGrid.sample_jumps([1.0, 3.0])
    union = EvaluationGrid.union(first, second)
    assert union.points.tolist() == [0.0, 1.0, 3.0]
    assert union.origin is GridOrigin.UNION
    assert EvaluationGrid.union(first) is first
    with pytest.raises(ParameterDomainError):
        EvaluationGrid.union()


@pytest.mark.parametrize("points", [[], [1.0, 0.0], [0.0, 0.0], [0.0, np.nan]])
def test_invalid_points(points):
    with pytest.raises(ParameterDomainError):
        EvaluationGrid(points=np.array(points), origin=GridOrigin.SAMPLE_JUMPS)


def test_points_are_read_only():
    grid = EvaluationGrid.sample_jumps([0.0, 1.0])
    with pytest.raises(ValueError):
        grid.points[0] = 5.0
