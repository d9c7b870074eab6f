"""Command line interface for simulations and Monte Carlo experiments.

This module provides the ``pyground-lrd`` command, whose subcommands
expose the components of the package:

* ``simulate``: write one path of the process as CSV.
* ``scalings``: print the normalizing sequences of a model as JSON.
* ``gof``: repeat a goodness of fit statistic over independent paths.
* ``reduction-check``: check the decay of the reduction residual over a grid of sizes.
* ``experiment``: run an experiment configuration and write its reports.
* ``report``: print the median of each statistic by sample size of a results CSV.

Tables are written as CSV and summaries as JSON, every JSON document
carries the hash of the parameters that produced it and the version
of the package. Results are printed to the console in a tabular format
using the :mod:`lrdpyground.utils.tabulate` module.

The exit code is ``0`` on success, ``1`` when a check failed, ``2`` for
invalid arguments or configurations and ``3`` for input/output errors.
"""

import argparse
import logging
import pathlib
import sys
from collections.abc import Sequence
from typing import Any

import pyarrow as pa

from lrdpyground.empirical import DEFAULT_GRID_M
from lrdpyground.estimators import KnownLocation, parse_estimator
from lrdpyground.exceptions import ConfigError, LRDError, ParameterDomainError
from lrdpyground.gof import Normalization, cvm_estimated, ks_estimated, ks_known
from lrdpyground.harness import (
    ExperimentConfig,
    ExperimentResult,
    default_output_dir,
    document_hash,
    load_experiment_config,
    run_experiment,
)
from lrdpyground.process import (
    DEFAULT_TRUNCATION,
    ProcessConfig,
    gen_coefficients,
    generate_path,
    marginal_model,
    replication_seed,
)
from lrdpyground.reporting import (
    dumps,
    median_by_n,
    quantile_summary,
    read_csv,
    stamp,
    statistic_columns,
    write_csv,
    write_json,
)
from lrdpyground.scalings import build_scaling_set
from lrdpyground.utils import tabulate

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

GOF_SCHEMA = pa.schema(
    [
        ("index", pa.int64()),
        ("stat", pa.string()),
        ("raw", pa.float64()),
        ("normalized", pa.float64()),
        ("normalization", pa.string()),
        ("normalized_sigma_n1", pa.float64()),
        ("estimator", pa.string()),
        ("theta_hat", pa.float64()),
        ("n", pa.int64()),
        ("beta", pa.float64()),
        ("seed", pa.uint64()),
    ]
)
"""Columns of the per-replication CSV of the ``gof`` command."""


def _add_process_arguments(parser: argparse.ArgumentParser, with_location: bool = True) -> None:
    parser.add_argument("--beta", type=float, required=True, help="Memory parameter in (1/2, 1).")
    parser.add_argument(
        "--trunc",
        type=int,
        default=DEFAULT_TRUNCATION,
        help=f"Truncation lag of the moving average (default {DEFAULT_TRUNCATION}).",
    )
    if with_location:
        parser.add_argument("--mu", type=float, default=0.0, help="Location of the observations.")
        parser.add_argument("--sigma", type=float, default=1.0, help="Scale of the observations.")


def build_parser() -> argparse.ArgumentParser:
    """Build the parser of the ``pyground-lrd`` command."""
    parser = argparse.ArgumentParser(
        prog="pyground-lrd",
        description="Simulate long-range dependent processes and check the limit "
        "theorems of their estimated empirical processes.",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="Log progress.")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="Log errors only.")
    commands = parser.add_subparsers(dest="command", required=True)

    simulate = commands.add_parser("simulate", help="Write one simulated path as CSV.")
    _add_process_arguments(simulate)
    simulate.add_argument("--n", type=int, required=True, help="Number of observations.")
    simulate.add_argument("--seed", type=int, default=0, help="Seed of the innovations.")
    simulate.add_argument("--out", type=pathlib.Path, help="Output CSV file.")
    simulate.set_defaults(handler=cmd_simulate)

    scalings = commands.add_parser("scalings", help="Print the scalings of a model as JSON.")
    _add_process_arguments(scalings, with_location=False)
    scalings.add_argument("--n", type=int, default=1024, help="Sample size (default 1024).")
    scalings.add_argument(
        "--sigma2-method",
        choices=("auto", "exact", "autocovariance", "monte_carlo"),
        default="auto",
        help="How the variance of the second order sum is computed.",
    )
    scalings.set_defaults(handler=cmd_scalings)

    gof = commands.add_parser("gof", help="Repeat a goodness of fit statistic over paths.")
    gof.add_argument("--stat", choices=("ks", "cvm"), default="ks", help="The statistic.")
    gof.add_argument(
        "--estimator",
        default="none",
        help="Location estimator: none, mean or m:<psi> with psi one of "
        "sign, huber:<c>, ssign:<h> (default none).",
    )
    _add_process_arguments(gof)
    gof.add_argument("--n", type=int, required=True, help="Number of observations of each path.")
    gof.add_argument("--reps", type=int, default=100, help="Number of paths (default 100).")
    gof.add_argument("--seed", type=int, default=0, help="Master seed of the replications.")
    gof.add_argument(
        "--normalization",
        choices=[normalization.value for normalization in Normalization],
        help="Override the normalization chosen by the regime.",
    )
    gof.add_argument("--out", type=pathlib.Path, help="Output directory.")
    gof.set_defaults(handler=cmd_gof)

    reduction = commands.add_parser(
        "reduction-check", help="Check that the reduction residual decays with n."
    )
    _add_process_arguments(reduction)
    reduction.add_argument(
        "--n-grid",
        type=int,
        nargs="+",
        default=[1024, 4096, 16384],
        help="Sample sizes, ascending (default 1024 4096 16384).",
    )
    reduction.add_argument("--reps", type=int, default=100, help="Paths per size (default 100).")
    reduction.add_argument("--seed", type=int, default=0, help="Master seed of the replications.")
    reduction.add_argument(
        "--grid-m",
        type=int,
        default=DEFAULT_GRID_M,
        help=f"Quantile points (default {DEFAULT_GRID_M}).",
    )
    reduction.add_argument(
        "--max-slope", type=float, default=-0.05, help="Largest accepted log-log slope."
    )
    reduction.add_argument("--jobs", type=int, default=1, help="Worker processes.")
    reduction.add_argument("--out", type=pathlib.Path, help="Output directory.")
    reduction.set_defaults(handler=cmd_reduction_check)

    experiment = commands.add_parser("experiment", help="Run an experiment configuration.")
    experiment.add_argument(
        "config", help="Path of a JSON configuration or name of a bundled one."
    )
    experiment.add_argument("--out", type=pathlib.Path, help="Output directory.")
    experiment.add_argument("--jobs", type=int, default=1, help="Worker processes.")
    experiment.set_defaults(handler=cmd_experiment)

    report = commands.add_parser("report", help="Print the medians by n of a results CSV.")
    report.add_argument("results", type=pathlib.Path, help="Results CSV of an experiment.")
    report.add_argument(
        "--columns", nargs="+", help="Statistics to summarize, every float column by default."
    )
    report.add_argument("--max-rows", type=int, default=40, help="Rows to print (default 40).")
    report.set_defaults(handler=cmd_report)
    return parser


def _output_dir(args: argparse.Namespace) -> pathlib.Path:
    return args.out if args.out is not None else default_output_dir()


def _process_config(args: argparse.Namespace, seed: int = 0) -> ProcessConfig:
    return ProcessConfig(
        beta=args.beta,
        trunc_k=args.trunc,
        mu=getattr(args, "mu", 0.0),
        sigma=getattr(args, "sigma", 1.0),
        seed=seed,
    )


def cmd_simulate(args: argparse.Namespace) -> int:
    """Write the path ``i, x, y`` of the model."""
    config = _process_config(args, seed=args.seed)
    path = generate_path(config, args.n)
    out = args.out if args.out is not None else default_output_dir() / "path.csv"
    write_csv(path.to_table(), out)
    print(out)
    return EXIT_OK


def cmd_scalings(args: argparse.Namespace) -> int:
    """Print the scalings of the model at the requested size."""
    config = _process_config(args)
    scalings = build_scaling_set(config, args.n, sigma2_method=args.sigma2_method)
    parameters = {
        "beta": args.beta,
        "trunc_k": args.trunc,
        "n": args.n,
        "sigma2_method": args.sigma2_method,
    }
    print(dumps(stamp(scalings.to_dict(), document_hash(parameters))))
    return EXIT_OK


def cmd_gof(args: argparse.Namespace) -> int:
    """Compute the statistic on ``reps`` paths, write them and their quantiles."""
    config = _process_config(args, seed=args.seed)
    if args.reps < 1:
        raise ParameterDomainError("reps", args.reps, "integer >= 1")
    estimator = parse_estimator(args.estimator, theta0=config.mu)
    coeffs = gen_coefficients(config.beta, config.trunc_k)
    marginal = marginal_model(coeffs, config.mu, config.sigma)
    scalings = build_scaling_set(config, args.n)
    known = isinstance(estimator, KnownLocation)
    normalization = args.normalization
    if known and args.stat == "cvm" and normalization is None:
        normalization = Normalization.SIGMA_N1_N

    records: list[dict[str, Any]] = []
    for index in range(args.reps):
        seed = replication_seed(config.seed, args.n, index)
        path = generate_path(config.with_seed(seed), args.n, coeffs=coeffs)
        if args.stat == "ks" and known:
            result = ks_known(path, marginal, scalings)
        elif args.stat == "ks":
            result = ks_estimated(path, marginal, estimator, scalings, normalization)
        else:
            result = cvm_estimated(path, marginal, estimator, scalings, normalization)
        records.append({"index": index, **result.to_record(args.n, config.beta, seed)})

    parameters = {
        "stat": args.stat,
        "estimator": estimator.name,
        "process": config.to_dict(),
        "n": args.n,
        "reps": args.reps,
        "normalization": args.normalization,
    }
    digest = document_hash(parameters)
    out = _output_dir(args)
    prefix = f"gof_{args.stat}_{estimator.name.replace(':', '-')}"
    write_csv(pa.Table.from_pylist(records, schema=GOF_SCHEMA), out / f"{prefix}.csv")
    normalized = [record["normalized"] for record in records]
    summary = {
        "parameters": parameters,
        "normalization": records[0]["normalization"],
        "normalization_value": result.normalization_value,
        "quantiles": quantile_summary(normalized),
    }
    write_json(stamp(summary, digest), out / f"{prefix}_summary.json")
    print(dumps(stamp(summary, digest)))
    return EXIT_OK


def _write_experiment(result: ExperimentResult, out: pathlib.Path) -> None:
    prefix = result.config.name
    write_csv(result.to_table(), out / f"{prefix}_results.csv")
    write_csv(result.medians_table(), out / f"{prefix}_medians.csv")
    profiles = result.profiles_table()
    if profiles.num_rows:
        write_csv(profiles, out / f"{prefix}_profiles.csv")
    write_json(result.verdicts_document(), out / f"{prefix}_verdicts.json")


def _print_verdicts(result: ExperimentResult) -> None:
    rows = [
        {
            "check": verdict.name,
            "estimator": verdict.estimator,
            "n": verdict.n,
            "passed": verdict.passed,
            "detail": verdict.detail,
        }
        for verdict in result.verdicts
    ]
    if rows:
        print(tabulate.tabulate(pa.Table.from_pylist(rows)))
    print(f"{result.config.name}: {'passed' if result.passed else 'FAILED'}")


def cmd_reduction_check(args: argparse.Namespace) -> int:
    """Run the reduction residual experiment over the requested grid."""
    config = ExperimentConfig.from_dict(
        {
            "name": "reduction_check",
            "process": {
                "beta": args.beta,
                "trunc_k": args.trunc,
                "mu": args.mu,
                "sigma": args.sigma,
            },
            "n_grid": args.n_grid,
            "reps": args.reps,
            "master_seed": args.seed,
            "statistics": ["reduction"],
            "grid_m": args.grid_m,
            "checks": [{"name": "reduction_rate", "thresholds": {"max_slope": args.max_slope}}],
        }
    )
    result = run_experiment(config, jobs=args.jobs)
    _write_experiment(result, _output_dir(args))
    print(tabulate.tabulate(median_by_n(result.to_table(), columns=["reduction_sup"])))
    _print_verdicts(result)
    return EXIT_OK if result.passed else EXIT_CHECK_FAILED


def cmd_experiment(args: argparse.Namespace) -> int:
    """Run a configuration and write its results, medians, profiles and verdicts."""
    config = load_experiment_config(args.config)
    result = run_experiment(config, jobs=args.jobs)
    _write_experiment(result, _output_dir(args))
    _print_verdicts(result)
    return EXIT_OK if result.passed else EXIT_CHECK_FAILED


def cmd_report(args: argparse.Namespace) -> int:
    """Print the median of each statistic by sample size."""
    table = read_csv(args.results)
    if "n" not in table.column_names:
        raise ConfigError("/n", f"{args.results} has no n column")
    columns = args.columns
    if columns is None:
        columns = statistic_columns(table)
        if not columns:
            raise ConfigError("/", f"{args.results} has no statistic columns")
    for column in columns:
        if column not in table.column_names:
            raise ConfigError(f"/{column}", f"{args.results} has no such column")
        datatype = table.schema.field(column).type
        if not (pa.types.is_floating(datatype) or pa.types.is_integer(datatype)):
            raise ConfigError(f"/{column}", f"{args.results} column is {datatype}, not numeric")
    print(tabulate.tabulate(median_by_n(table, columns=columns), max_rows=args.max_rows))
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    """Parse the command line arguments and run the requested command."""
    args = build_parser().parse_args(argv)
    level = logging.INFO if args.verbose else logging.ERROR if args.quiet else logging.WARNING
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    try:
        return args.handler(args)
    except LRDError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
