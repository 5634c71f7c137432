import argparse
import logging
import sys
from logging import getLogger
from pathlib import Path
from typing import List

import pydpso

from .exception import (
    ConfigError,
    InvalidParametersError,
    UnknownAlgorithmError,
    UnknownProblemError,
)
from .harness import (
    SUITES,
    build_suite,
    collect_report,
    load_config,
    render_report,
    run_experiment,
)
from .problems import generate_grid_instance, write_instance

logger = getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUNTIME = 2

USAGE_ERRORS = (ConfigError, UnknownProblemError, UnknownAlgorithmError)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _csv_list(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="pydpso",
        description="Discrete PSO with onlooker search and multi-parent crossover, plus baselines",
    )
    parser.add_argument("--version", action="version", version=pydpso.__version__)
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log per-generation progress")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log warnings and errors only")

    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    gen = commands.add_parser("gen-data", help="write a grid allocation instance")
    gen.add_argument("--rows", type=int, required=True)
    gen.add_argument("--cols", type=int, required=True)
    gen.add_argument("--spacing", type=float, default=1.0)
    gen.add_argument(
        "--quadrant-centers",
        dest="quadrant_centers",
        action="store_true",
        default=True,
        help="one center at the centroid of each quadrant (default)",
    )
    gen.add_argument(
        "--single-center",
        dest="quadrant_centers",
        action="store_false",
        help="one center at the centroid of the grid",
    )
    gen.add_argument("-o", "--output", help="instance file, defaults to grid_<rows>x<cols>.txt")

    run = commands.add_parser("run", help="execute one experiment config")
    run.add_argument("config", help="INI experiment config")
    run.add_argument("--output", help="override [experiment] output")
    run.add_argument("--runs", type=int, help="override [experiment] runs")
    run.add_argument("--workers", type=int, help="override [experiment] workers")
    run.add_argument("--base-seed", dest="base_seed", type=int, help="override [experiment] base_seed")

    bench = commands.add_parser("bench", help="execute a named suite with all four algorithms")
    bench.add_argument("suite", choices=sorted(SUITES))
    bench.add_argument("--output", default="results")
    bench.add_argument("--runs", type=int)
    bench.add_argument("--iterations", type=int)
    bench.add_argument("--workers", type=int, default=1)
    bench.add_argument("--base-seed", dest="base_seed", type=int, default=0)
    bench.add_argument("--functions", type=_csv_list, help="comma-separated benchmark ids")
    bench.add_argument("--algorithms", type=_csv_list, help="comma-separated algorithm ids")

    report = commands.add_parser("report", help="compare finished experiments")
    report.add_argument("directories", nargs="+")
    report.add_argument("--checkpoint", type=int)
    fmt = report.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    report.add_argument("-o", "--output", help="write the report to a file instead of stdout")

    return parser


def _emit(text: str, output: str = None) -> None:
    if output:
        Path(output).write_text(text)
        logger.info("Wrote {}".format(output))
    else:
        sys.stdout.write(text)


def cmd_gen_data(args) -> int:
    try:
        instance = generate_grid_instance(args.rows, args.cols, args.spacing, args.quadrant_centers)
    except InvalidParametersError as e:
        logger.error(str(e))
        return EXIT_USAGE

    path = write_instance(instance, args.output or "grid_{}x{}.txt".format(args.rows, args.cols))
    logger.info(
        "Wrote {} demands and {} centers to {}".format(
            instance.n_demands, instance.n_centers, path
        )
    )
    return EXIT_OK


def cmd_run(args) -> int:
    config = load_config(args.config)
    overrides = {
        key: getattr(args, key)
        for key in ("output", "runs", "workers", "base_seed")
        if getattr(args, key) is not None
    }
    if overrides:
        config = config.with_overrides(**overrides)

    result = run_experiment(config)
    for checkpoint, summary in result.summaries.items():
        logger.info("Checkpoint {}: best {} avg {}".format(checkpoint, summary.best, summary.avg_best))
    return EXIT_OK


def cmd_bench(args) -> int:
    options = {}
    if args.algorithms:
        options["algorithms"] = [a.upper() for a in args.algorithms]

    try:
        configs = build_suite(
            args.suite,
            output=args.output,
            runs=args.runs,
            iterations=args.iterations,
            workers=args.workers,
            functions=args.functions,
            base_seed=args.base_seed,
            **options
        )
    except KeyError as e:
        logger.error(e.args[0])
        return EXIT_USAGE
    logger.info("Suite {}: {} experiments".format(args.suite, len(configs)))

    for config in configs:
        run_experiment(config)

    _emit(render_report(collect_report([args.output])))
    return EXIT_OK


def cmd_report(args) -> int:
    report = collect_report(args.directories, args.checkpoint)
    _emit(render_report(report, args.fmt or "text"), args.output)
    return EXIT_OK


COMMANDS = {
    "gen-data": cmd_gen_data,
    "run": cmd_run,
    "bench": cmd_bench,
    "report": cmd_report,
}


def main(argv: List[str] = None) -> int:
    """Entry point of the ``pydpso`` command

    Returns:
        ``0`` on success, ``1`` on usage or config errors, ``2`` on runtime errors
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        sys.stderr.write("pydpso: error: {}\n".format(e))
        return EXIT_USAGE
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(
        level=level,
        format="[%(levelname)s][%(asctime)s][%(name)s] %(message)s",
    )

    try:
        return COMMANDS[args.command](args)
    except USAGE_ERRORS as e:
        logger.error(str(e))
        return EXIT_USAGE
    except Exception:
        logger.exception("{} failed".format(args.command))
        return EXIT_RUNTIME
