"""Command line for levelk-market.

    levelk-market run <config-file> [flags]   reproduce a numerical study
    levelk-market analyze [flags]              report on one market instance

Flags override config-file values; Settings supply anything still missing.
"""

import argparse
import logging
import sys
from typing import Any, Dict, List, Optional

import pandas as pd

from levelk_market.config import Settings, configure_logging, get_settings
from levelk_market.config.loader import load_experiment_config
from levelk_market.core.experiments import analyze, run_experiment
from levelk_market.exceptions import MarketSimError
from levelk_market.infrastructure.tables import write_table
from levelk_market.models import LevelSpec, MarketParams, OutputFormat

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    market = parser.add_argument_group("market")
    market.add_argument("--a", type=float, help="demand slope")
    market.add_argument("--b", type=float, help="demand intercept")
    market.add_argument("--c", type=float, help="marginal cost")
    market.add_argument("--m", type=float, help="utility constant")
    market.add_argument("--f", type=float, help="flow capacity")

    levels = parser.add_argument_group("levels")
    levels.add_argument("--k", type=int, help="level of the self-interested firm")
    levels.add_argument("--delta", help="relative planner level (integer or 'inf')")
    levels.add_argument("--tau", type=float, help="Poisson mean of the level distribution")
    levels.add_argument("--kmax", type=int, help="truncation level of the distribution")

    output = parser.add_argument_group("output")
    output.add_argument("--out", help="output path (stdout when omitted)")
    output.add_argument("--format", choices=[f.value for f in OutputFormat], help="table format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="levelk-market",
        description="Level-k Cournot electricity market simulator",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="run an experiment from a KEY=VALUE config file")
    run.add_argument("config", help="path to the experiment config file")
    _add_common_flags(run)
    run.set_defaults(handler=_run)

    single = commands.add_parser("analyze", help="report on a single market instance")
    _add_common_flags(single)
    single.set_defaults(handler=_analyze)
    return parser


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """Map command-line flags onto ExperimentConfig fields."""
    overrides: Dict[str, Any] = {
        "a": args.a,
        "b": args.b,
        "c": args.c,
        "m": args.m,
        "tau": args.tau,
        "k_max": args.kmax,
        "output": args.out,
        "format": args.format,
    }
    if args.f is not None:
        overrides["f_values"] = [args.f]
    if args.k is not None:
        overrides["k_values"] = [args.k]
        overrides["realized_levels"] = [args.k]
    if args.delta is not None:
        overrides["deltas"] = [args.delta]
    return overrides


def _run(args: argparse.Namespace, settings: Settings) -> int:
    config = load_experiment_config(args.config, _overrides(args), settings)
    run_experiment(config, settings)
    return EXIT_OK


def _pick(value: Optional[Any], default: Any) -> Any:
    return default if value is None else value


def _analyze(args: argparse.Namespace, settings: Settings) -> int:
    params = MarketParams(
        a=_pick(args.a, settings.default_a),
        b=_pick(args.b, settings.default_b),
        c=_pick(args.c, settings.default_c),
        m=_pick(args.m, settings.default_m),
        f=_pick(args.f, settings.default_f),
    )
    spec = LevelSpec(k=_pick(args.k, 1), delta=_pick(args.delta, 1))
    report = analyze(params, spec, tau=args.tau, k_max=args.kmax, settings=settings)
    write_table(
        pd.DataFrame([report.model_dump()]),
        output=args.out,
        fmt=OutputFormat(_pick(args.format, OutputFormat.JSON.value)),
        significant_digits=settings.csv_significant_digits,
    )
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the console script.

    Returns:
        int: 0 on success, 2 when inputs are rejected or output fails
    """
    settings = get_settings()
    configure_logging(settings)
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args, settings)
    except (MarketSimError, ValueError) as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
