"""Long-range dependent linear processes.

The process package generates the stationary linear process

    ``X_i = sum_{k>=0} c_k eps_{i-k}``

driven by i.i.d. standard Gaussian innovations ``eps_t``, with
coefficients regularly varying with index ``-beta`` for a memory
parameter ``beta`` in ``(1/2, 1)``. In that range the coefficients are
square summable, so ``X_i`` is well defined, but the covariances
between observations decay so slowly that they are not summable:
this is what makes the memory *long*.

The infinite moving average is truncated at a lag ``K`` and the
observations are moved to a location-scale family
``Y_i = sigma * X_i + mu``.

Everything that defines a model lives in a :class:`ProcessConfig`,
and a model plus a sample size fully defines a realized path:

>>> from lrdpyground.process import ProcessConfig, generate_path, gen_coefficients
>>> config = ProcessConfig(beta=0.7, trunc_k=256, mu=3.0, sigma=2.0, seed=7)
>>> path = generate_path(config, 8)
>>> path.n
8
>>> bool(abs(path.y - (2.0 * path.x + 3.0)).max() == 0.0)
True

The marginal law of each observation is known in closed form,
which is what allows comparing empirical distribution functions
against their targets:

>>> from lrdpyground.process import marginal_model
>>> model = marginal_model(gen_coefficients(0.7, 256), mu=3.0, sigma=2.0)
>>> round(float(model.location_cdf(3.0)), 6)
0.5
"""

from .coefficients import CoefficientSet, gen_coefficients
from .config import DEFAULT_TRUNCATION, Innovation, ProcessConfig, validate_beta
from .marginal import MarginalModel, marginal_model
from .paths import PathBundle, generate_path, path_from_innovations
from .seeding import replication_seed, replication_seeds

__all__ = (
    "CoefficientSet",
    "gen_coefficients",
    "DEFAULT_TRUNCATION",
    "Innovation",
    "ProcessConfig",
    "validate_beta",
    "MarginalModel",
    "marginal_model",
    "PathBundle",
    "generate_path",
    "path_from_innovations",
    "replication_seed",
    "replication_seeds",
)
