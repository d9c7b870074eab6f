"""Experiment configurations.

An experiment is described by a JSON document like::

    {
        "name": "mean_negligibility",
        "process": {"beta": 0.65, "trunc_k": 65536, "mu": 0.0, "sigma": 1.0},
        "n_grid": [1024, 4096, 16384],
        "reps": 200,
        "master_seed": 12345,
        "estimators": ["mean"],
        "statistics": ["ks_known", "ks", "profile"],
        "grid_m": 64,
        "checks": [
            {"name": "negligibility", "estimator": "mean", "thresholds": {"ratio": 0.5}}
        ]
    }

Every field is validated when the document is loaded, a failure raises a
:class:`~lrdpyground.exceptions.ConfigError` carrying the JSON pointer of
the offending field.

>>> config = ExperimentConfig.from_dict({
...     "process": {"beta": 0.7, "trunc_k": 64},
...     "n_grid": [64],
...     "reps": 50,
...     "statistics": ["ks_known"],
... })
>>> config.n_grid, config.reps, config.process.seed
((64,), 50, 0)
>>> ExperimentConfig.from_dict({"process": {"beta": 0.7}, "n_grid": [64], "reps": 10,
...                             "statistics": ["ks_known"]})
Traceback (most recent call last):
...
lrdpyground.exceptions.ConfigError: /reps: must be an integer >= 50, got 10
"""

import hashlib
import importlib.resources
import json
import os
import pathlib
from dataclasses import dataclass, field
from typing import Any

from ..estimators import parse_estimator
from ..exceptions import ConfigError, LRDError
from ..process import DEFAULT_TRUNCATION, ProcessConfig
from ..process.config import MAX_SEED

__all__ = (
    "ExperimentConfig",
    "CheckSpec",
    "config_hash",
    "document_hash",
    "load_experiment_config",
    "bundled_configs",
    "default_output_dir",
    "STATISTICS",
    "CHECK_NAMES",
    "DEFAULT_THRESHOLDS",
    "MIN_REPS",
    "OUTPUT_DIR_ENV",
)

MIN_REPS = 50
DEFAULT_PROFILE_M = 64
OUTPUT_DIR_ENV = "LRDPYGROUND_OUTPUT_DIR"

STATISTICS = ("ks_known", "ks", "cvm", "reduction", "profile", "pointwise")
"""Statistics an experiment can compute on every path.

* ``ks_known``: Kolmogorov-Smirnov distance from the true model.
* ``ks``: Kolmogorov-Smirnov distance at the estimated location, per estimator.
* ``cvm``: Cramer-von Mises distance at the estimated location, per estimator.
* ``reduction``: normalized supremum of the second order reduction residual.
* ``profile``: ``a_n^-1 gamma_hat_n`` on a grid of quantiles, per estimator.
* ``pointwise``: ``sqrt(n) (H_n - H(.; theta_hat))`` at five fixed quantiles.
"""

DEFAULT_THRESHOLDS: dict[str, dict[str, float]] = {
    "negligibility": {"ratio": 0.5},
    "profile_proportionality": {"min_r2": 0.9, "min_correlation": 0.9},
    "m_estimator_branch": {"max_t": 3.0},
    "gaussian_regime": {"max_skew": 0.35, "max_excess_kurtosis": 0.7, "max_ks_distance": 0.1},
    "reduction_rate": {"max_slope": -0.05},
    "known_ks_limit": {"max_ks_distance": 0.1},
    "cvm_consistency": {"min_correlation": 0.9},
    "m_equivalence": {},
    "sigma_psi_positive": {"min_z": 5.0, "min_inflation_z": 3.0},
    "z1_normality": {"max_mean": 0.15, "max_variance_error": 0.15, "max_autocorrelation": 0.1},
}
CHECK_NAMES = tuple(DEFAULT_THRESHOLDS)

# What each check reads from the replications.
_REQUIRED_STATISTIC = {
    "negligibility": "ks",
    "profile_proportionality": "profile",
    "m_estimator_branch": "profile",
    "gaussian_regime": "pointwise",
    "reduction_rate": "reduction",
    "known_ks_limit": "ks_known",
    "cvm_consistency": "cvm",
}
_NEEDS_ESTIMATOR = {
    "negligibility",
    "profile_proportionality",
    "m_estimator_branch",
    "gaussian_regime",
    "cvm_consistency",
    "m_equivalence",
    "sigma_psi_positive",
}
_NEEDS_M_ESTIMATOR = {"m_estimator_branch", "m_equivalence", "sigma_psi_positive"}
_MIN_GRID_SIZES = {"negligibility": 3, "reduction_rate": 3, "m_equivalence": 2, "gaussian_regime": 2}
_BELOW_3_4 = {"profile_proportionality", "m_estimator_branch", "cvm_consistency"}
_ABOVE_3_4 = {"gaussian_regime", "sigma_psi_positive"}
_SIGMA2_METHODS = ("auto", "exact", "autocovariance", "monte_carlo")


@dataclass(frozen=True)
class CheckSpec:
    """A named check with its thresholds.

    ``estimator`` names the estimator whose statistics are checked,
    ``n`` the sample size the check looks at (the largest of the grid
    when omitted) and ``rank`` the second order rank claimed for an
    M-estimator.
    """

    name: str
    thresholds: dict[str, float] = field(default_factory=dict)
    estimator: str | None = None
    n: int | None = None
    rank: str | None = None

    def to_dict(self) -> dict[str, Any]:
        """JSON friendly representation of the check."""
        return {
            "name": self.name,
            "thresholds": dict(sorted(self.thresholds.items())),
            "estimator": self.estimator,
            "n": self.n,
            "rank": self.rank,
        }


@dataclass(frozen=True)
class ExperimentConfig:
    """A validated experiment, see :meth:`from_dict` for the JSON schema.

    ``process.seed`` is the master seed of the experiment.
    """

    process: ProcessConfig
    n_grid: tuple[int, ...]
    reps: int
    statistics: tuple[str, ...]
    estimators: tuple[str, ...] = ()
    grid_m: int = DEFAULT_PROFILE_M
    checks: tuple[CheckSpec, ...] = ()
    sigma2_method: str = "auto"
    name: str = "experiment"

    @property
    def master_seed(self) -> int:
        """Seed every replication seed is derived from."""
        return self.process.seed

    def to_dict(self) -> dict[str, Any]:
        """Canonical JSON representation, :meth:`from_dict` reads it back."""
        process = self.process.to_dict()
        process.pop("seed")
        return {
            "name": self.name,
            "process": process,
            "n_grid": list(self.n_grid),
            "reps": self.reps,
            "master_seed": self.master_seed,
            "estimators": list(self.estimators),
            "statistics": list(self.statistics),
            "grid_m": self.grid_m,
            "sigma2_method": self.sigma2_method,
            "checks": [check.to_dict() for check in self.checks],
        }

    @classmethod
    def from_dict(cls, data: Any) -> "ExperimentConfig":
        """Validate a decoded JSON document and build the configuration."""
        if not isinstance(data, dict):
            raise ConfigError("", "the document must be an object")
        _reject_unknown(
            data,
            "",
            {
                "name",
                "process",
                "n_grid",
                "reps",
                "master_seed",
                "estimators",
                "statistics",
                "grid_m",
                "sigma2_method",
                "checks",
            },
        )

        name = data.get("name", "experiment")
        if not isinstance(name, str) or not name:
            raise ConfigError("/name", "must be a nonempty string")

        master_seed = data.get("master_seed", 0)
        if not _is_int(master_seed) or not 0 <= master_seed <= MAX_SEED:
            raise ConfigError("/master_seed", f"must be a 64-bit unsigned integer, got {master_seed!r}")
        process = _parse_process(data.get("process"), master_seed)

        n_grid = data.get("n_grid")
        if not isinstance(n_grid, list) or not n_grid:
            raise ConfigError("/n_grid", "must be a nonempty list of sample sizes")
        for index, n in enumerate(n_grid):
            if not _is_int(n) or n < 2:
                raise ConfigError(f"/n_grid/{index}", f"must be an integer >= 2, got {n!r}")
            if index and n <= n_grid[index - 1]:
                raise ConfigError(f"/n_grid/{index}", "sizes must be sorted in ascending order")

        reps = data.get("reps")
        if not _is_int(reps) or reps < MIN_REPS:
            raise ConfigError("/reps", f"must be an integer >= {MIN_REPS}, got {reps!r}")

        raw_estimators = data.get("estimators", [])
        if not isinstance(raw_estimators, list):
            raise ConfigError("/estimators", "must be a list of estimator names")
        estimators: list[str] = []
        for index, spec in enumerate(raw_estimators):
            pointer = f"/estimators/{index}"
            canonical = _estimator_name(spec, pointer)
            if canonical == "none":
                raise ConfigError(pointer, "the known location is covered by the ks_known statistic")
            if canonical in estimators:
                raise ConfigError(pointer, f"duplicate estimator {canonical!r}")
            estimators.append(canonical)

        statistics = data.get("statistics", [])
        if not isinstance(statistics, list) or not statistics:
            raise ConfigError("/statistics", "at least one statistic must be enabled")
        for index, stat in enumerate(statistics):
            if stat not in STATISTICS:
                raise ConfigError(
                    f"/statistics/{index}",
                    f"unknown statistic {stat!r}, available are: {', '.join(STATISTICS)}",
                )
        per_estimator = {"ks", "cvm", "profile", "pointwise"} & set(statistics)
        if per_estimator and not estimators:
            raise ConfigError(
                "/estimators", f"statistics {sorted(per_estimator)} need at least one estimator"
            )

        grid_m = data.get("grid_m", DEFAULT_PROFILE_M)
        if not _is_int(grid_m) or grid_m < 8:
            raise ConfigError("/grid_m", f"must be an integer >= 8, got {grid_m!r}")

        sigma2_method = data.get("sigma2_method", "auto")
        if sigma2_method not in _SIGMA2_METHODS:
            raise ConfigError("/sigma2_method", f"must be one of {', '.join(_SIGMA2_METHODS)}")

        raw_checks = data.get("checks", [])
        if not isinstance(raw_checks, list):
            raise ConfigError("/checks", "must be a list of checks")
        checks = tuple(
            _parse_check(raw, f"/checks/{index}", process.beta, n_grid, estimators, statistics)
            for index, raw in enumerate(raw_checks)
        )

        return cls(
            process=process,
            n_grid=tuple(n_grid),
            reps=reps,
            statistics=tuple(statistics),
            estimators=tuple(estimators),
            grid_m=grid_m,
            checks=checks,
            sigma2_method=sigma2_method,
            name=name,
        )


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _reject_unknown(data: dict[str, Any], pointer: str, allowed: set[str]) -> None:
    for key in data:
        if key not in allowed:
            raise ConfigError(f"{pointer}/{key}", "unknown field")


def _estimator_name(spec: Any, pointer: str) -> str:
    """Canonical name of an estimator, so that ``m:huber`` and ``m:huber:1.345`` agree."""
    if not isinstance(spec, str):
        raise ConfigError(pointer, f"must be a string, got {spec!r}")
    try:
        return parse_estimator(spec).name
    except LRDError as err:
        raise ConfigError(pointer, str(err)) from None


def _parse_process(data: Any, master_seed: int) -> ProcessConfig:
    if not isinstance(data, dict):
        raise ConfigError("/process", "must be an object")
    _reject_unknown(data, "/process", {"beta", "trunc_k", "innovation", "mu", "sigma"})
    for key in ("beta", "mu", "sigma"):
        if key in data and not _is_number(data[key]):
            raise ConfigError(f"/process/{key}", f"must be a number, got {data[key]!r}")
    if "beta" not in data:
        raise ConfigError("/process/beta", "is required")
    if data["beta"] == 0.75:
        raise ConfigError("/process/beta", "0.75 is the boundary between the two regimes")
    trunc_k = data.get("trunc_k", DEFAULT_TRUNCATION)
    if not _is_int(trunc_k):
        raise ConfigError("/process/trunc_k", f"must be an integer, got {trunc_k!r}")
    try:
        return ProcessConfig(
            beta=data["beta"],
            trunc_k=trunc_k,
            innovation=data.get("innovation", "standard_gaussian"),
            mu=data.get("mu", 0.0),
            sigma=data.get("sigma", 1.0),
            seed=master_seed,
        )
    except LRDError as err:
        key = getattr(err, "name", "")
        raise ConfigError(f"/process/{key}" if key else "/process", str(err)) from None


def _parse_check(
    data: Any,
    pointer: str,
    beta: float,
    n_grid: list[int],
    estimators: list[str],
    statistics: list[str],
) -> CheckSpec:
    if not isinstance(data, dict):
        raise ConfigError(pointer, "must be an object")
    _reject_unknown(data, pointer, {"name", "thresholds", "estimator", "n", "rank"})

    name = data.get("name")
    if name not in CHECK_NAMES:
        raise ConfigError(
            f"{pointer}/name", f"unknown check {name!r}, available are: {', '.join(CHECK_NAMES)}"
        )

    thresholds = dict(DEFAULT_THRESHOLDS[name])
    given = data.get("thresholds", {})
    if not isinstance(given, dict):
        raise ConfigError(f"{pointer}/thresholds", "must be an object")
    for key, value in given.items():
        if key not in thresholds:
            raise ConfigError(f"{pointer}/thresholds/{key}", f"is not a threshold of {name}")
        if not _is_number(value):
            raise ConfigError(f"{pointer}/thresholds/{key}", f"must be a number, got {value!r}")
        thresholds[key] = float(value)

    required = _REQUIRED_STATISTIC.get(name)
    if required is not None and required not in statistics:
        raise ConfigError(f"{pointer}/name", f"{name} needs the {required!r} statistic")
    if len(n_grid) < _MIN_GRID_SIZES.get(name, 1):
        raise ConfigError("/n_grid", f"{name} needs at least {_MIN_GRID_SIZES[name]} sample sizes")
    if name in _BELOW_3_4 and beta > 0.75:
        raise ConfigError(f"{pointer}/name", f"{name} applies to beta < 3/4, got beta={beta}")
    if name in _ABOVE_3_4 and beta < 0.75:
        raise ConfigError(f"{pointer}/name", f"{name} applies to beta > 3/4, got beta={beta}")

    estimator = data.get("estimator")
    if estimator is not None:
        estimator = _estimator_name(estimator, f"{pointer}/estimator")
    if name in _NEEDS_ESTIMATOR:
        if estimator not in estimators:
            raise ConfigError(
                f"{pointer}/estimator", f"{name} needs one of the configured estimators {estimators}"
            )
        if name in _NEEDS_M_ESTIMATOR and not estimator.startswith("m:"):
            raise ConfigError(f"{pointer}/estimator", f"{name} needs an M-estimator")
    elif estimator is not None:
        raise ConfigError(f"{pointer}/estimator", f"{name} does not take an estimator")

    n = data.get("n")
    if n is not None and n not in n_grid:
        raise ConfigError(f"{pointer}/n", f"{n!r} is not part of the n_grid")

    rank = data.get("rank")
    if name == "m_estimator_branch":
        if rank not in ("rank_2", "rank_gt_2"):
            raise ConfigError(f"{pointer}/rank", "must be rank_2 or rank_gt_2")
    elif rank is not None:
        raise ConfigError(f"{pointer}/rank", f"{name} does not take a rank")

    return CheckSpec(name=name, thresholds=thresholds, estimator=estimator, n=n, rank=rank)


def document_hash(document: dict[str, Any]) -> str:
    """SHA-256 of the canonical, key sorted, JSON form of a document.

    >>> document_hash({"b": 1, "a": 2}) == document_hash({"a": 2, "b": 1})
    True
    """
    canonical = json.dumps(document, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def config_hash(config: ExperimentConfig) -> str:
    """Hash of the configuration, see :func:`document_hash`."""
    return document_hash(config.to_dict())


def bundled_configs() -> list[str]:
    """File names of the configurations shipped with the package."""
    folder = importlib.resources.files("lrdpyground.harness") / "configs"
    return sorted(entry.name for entry in folder.iterdir() if entry.name.endswith(".json"))


def load_experiment_config(location: str | os.PathLike[str]) -> ExperimentConfig:
    """Load a configuration from a path, or by name among the bundled ones.

    :raises FileNotFoundError: when neither a file nor a bundled
                               configuration with that name exist.
    """
    path = pathlib.Path(location)
    bundled_name = path.name if path.suffix == ".json" else f"{path.name}.json"
    if path.is_file():
        text = path.read_text(encoding="utf-8")
    elif bundled_name in bundled_configs():
        resource = importlib.resources.files("lrdpyground.harness") / "configs" / bundled_name
        text = resource.read_text(encoding="utf-8")
    else:
        raise FileNotFoundError(f"no experiment configuration at {location}")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError("", f"invalid JSON: {err}") from None
    return ExperimentConfig.from_dict(document)


def default_output_dir() -> pathlib.Path:
    """Output directory of the command line, ``$LRDPYGROUND_OUTPUT_DIR`` or the current one."""
    return pathlib.Path(os.environ.get(OUTPUT_DIR_ENV, "."))
