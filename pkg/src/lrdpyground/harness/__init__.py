"""Monte Carlo verification of the limit theorems.

The limit theorems of the estimated empirical processes are statements
about distributions, the harness turns them into checks that pass or
fail on simulated data. An experiment is described by an
:class:`ExperimentConfig`: a model, a grid of sample sizes, a number of
replications, the estimators and statistics to compute and the checks
to evaluate, each with its thresholds.

:func:`run_experiment` simulates every replication and evaluates the
checks, the returned :class:`ExperimentResult` holds the per-replication
values and a :class:`Verdict` per check. Every result is a pure function
of the configuration, whose SHA-256 hash is stored with it.

Reference configurations are shipped with the package and can be loaded
by name:

>>> from lrdpyground.harness import load_experiment_config
>>> config = load_experiment_config("mean_negligibility.json")
>>> config.n_grid, [check.name for check in config.checks]
((1024, 4096, 16384), ['negligibility', 'profile_proportionality'])
"""

from .checks import (
    RegressionFit,
    Verdict,
    check_cvm_consistency,
    check_gaussian_regime,
    check_known_ks_limit,
    check_m_equivalence,
    check_m_estimator_branch,
    check_negligibility,
    check_profile_proportionality,
    check_reduction_rate,
    check_sigma_psi_positive,
    check_z1_normality,
    evaluate_check,
    profile_regression,
)
from .config import (
    CHECK_NAMES,
    DEFAULT_THRESHOLDS,
    MIN_REPS,
    OUTPUT_DIR_ENV,
    STATISTICS,
    CheckSpec,
    ExperimentConfig,
    bundled_configs,
    config_hash,
    default_output_dir,
    document_hash,
    load_experiment_config,
)
from .experiment import ExperimentResult, run_experiment
from .proxies import LimitProxies, limit_proxies, v1_proxy
from .records import (
    POINTWISE_LEVELS,
    ReplicationRecord,
    column_name,
    pointwise_column,
    run_replication,
)

__all__ = (
    "RegressionFit",
    "Verdict",
    "check_cvm_consistency",
    "check_gaussian_regime",
    "check_known_ks_limit",
    "check_m_equivalence",
    "check_m_estimator_branch",
    "check_negligibility",
    "check_profile_proportionality",
    "check_reduction_rate",
    "check_sigma_psi_positive",
    "check_z1_normality",
    "evaluate_check",
    "profile_regression",
    "CHECK_NAMES",
    "DEFAULT_THRESHOLDS",
    "MIN_REPS",
    "OUTPUT_DIR_ENV",
    "STATISTICS",
    "CheckSpec",
    "ExperimentConfig",
    "bundled_configs",
    "config_hash",
    "default_output_dir",
    "document_hash",
    "load_experiment_config",
    "ExperimentResult",
    "run_experiment",
    "LimitProxies",
    "limit_proxies",
    "v1_proxy",
    "POINTWISE_LEVELS",
    "ReplicationRecord",
    "column_name",
    "pointwise_column",
    "run_replication",
)
