"""Empirical distribution functions and empirical processes.

The empirical package measures how far the empirical distribution
function of a path is from its target:

* :mod:`~lrdpyground.empirical.ecdf` evaluates ECDFs and computes their exact
  sup distance from a continuous distribution function.
* :mod:`~lrdpyground.empirical.grid` chooses where processes are evaluated.
* :mod:`~lrdpyground.empirical.processes` evaluates the normalized empirical
  processes with known and estimated location.
* :mod:`~lrdpyground.empirical.reduction` evaluates the residual of the
  multilinear expansion of the empirical process.
* :mod:`~lrdpyground.empirical.taylor` splits the estimated process into the
  known location process and the Taylor terms of the location shift.

>>> from lrdpyground.process import ProcessConfig, gen_coefficients, generate_path, marginal_model
>>> from lrdpyground.scalings import build_scaling_set
>>> from lrdpyground.empirical import process_trace
>>> config = ProcessConfig(beta=0.7, trunc_k=128, seed=4)
>>> path = generate_path(config, 64)
>>> model = marginal_model(gen_coefficients(0.7, 128), mu=0.0, sigma=1.0)
>>> trace = process_trace(path, model, build_scaling_set(config, 64), "gamma_n")
>>> trace.label.value, len(trace.grid) == 64 + 512
('gamma_n', True)
"""

from .ecdf import ecdf, ecdf_left, sorted_sample, sup_norm_exact
from .grid import DEFAULT_GRID_M, EvaluationGrid, GridOrigin
from .processes import (
    ProcessTrace,
    TraceLabel,
    default_grid,
    process_trace,
    step_deviation,
)
from .reduction import reduction_residual
from .taylor import TaylorDecomposition, taylor_decomposition

__all__ = (
    "ecdf",
    "ecdf_left",
    "sorted_sample",
    "sup_norm_exact",
    "DEFAULT_GRID_M",
    "EvaluationGrid",
    "GridOrigin",
    "ProcessTrace",
    "TraceLabel",
    "default_grid",
    "process_trace",
    "step_deviation",
    "reduction_residual",
    "TaylorDecomposition",
    "taylor_decomposition",
)
