import csv
from concurrent.futures import ThreadPoolExecutor
from logging import getLogger
from pathlib import Path
from typing import Dict, List

import numpy as np
from ujson import dumps

import pydpso

from ..algorithms import get_algorithm
from ..exception import ConfigError, InvalidParametersError
from ..metrics import summarize, summary_to_csv, summary_to_text
from ..types import ProblemInstance, RunResult, SummaryTable
from .config import ExperimentConfig, dump_config, log_overrides

logger = getLogger(__name__)

TRACE_HEADER = ["generation", "best_of_generation", "best_so_far", "population_mean", "elapsed_s"]
CURVES_HEADER = ["generation", "mean_best_so_far", "mean_best_of_generation"]
MANIFEST = "run.json"


class ExperimentResult:
    """What :func:`run_experiment` produced

    Args:
        config (:class:`~pydpso.harness.ExperimentConfig`):
            The executed config

        problem (:class:`~pydpso.types.ProblemInstance`):
            The problem built from the config

        runs (``List`` of :class:`~pydpso.types.RunResult`):
            One result per seed, in seed order

        summaries (``Dict[int, SummaryTable]``):
            Summary per checkpoint

        files (``List[Path]``):
            Every file written, in write order
    """

    def __init__(
        self,
        config: ExperimentConfig,
        problem: ProblemInstance,
        runs: List[RunResult],
        summaries: Dict[int, SummaryTable],
        files: List[Path],
    ) -> None:
        self.config = config
        self.problem = problem
        self.runs = runs
        self.summaries = summaries
        self.files = files

    @property
    def directory(self) -> Path:
        return Path(self.config.output)

    def __repr__(self) -> str:
        return "ExperimentResult(algorithm={}, problem={}, runs={}, files={})".format(
            self.config.algorithm, self.problem.name, len(self.runs), len(self.files)
        )


def trace_rows(run: RunResult) -> List[list]:
    return [
        [
            record.generation,
            repr(record.best_of_generation),
            repr(record.best_so_far),
            repr(record.population_mean),
            "{:.6f}".format(record.elapsed_since_start),
        ]
        for record in run.records
    ]


def write_csv(path: Path, header: List[str], rows: List[list]) -> Path:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return path


def curve_rows(runs: List[RunResult]) -> List[list]:
    """Per-generation means of best-so-far and BOG across runs"""

    if not runs or not runs[0].records:
        return []

    best_so_far = np.mean([run.best_so_far_curve() for run in runs], axis=0)
    bog = np.mean([run.bog_curve() for run in runs], axis=0)
    return [
        [generation, repr(float(b)), repr(float(g))]
        for generation, (b, g) in enumerate(zip(best_so_far, bog), 1)
    ]


def format_genome(problem: ProblemInstance, run: RunResult) -> str:
    if problem.metadata.get("kind") == "benchmark":
        return run.best_genome.to_bitstring()
    return run.best_genome.to_labels()


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Execute a seeded campaign and write its artifacts

    Run ``q`` is seeded with ``base_seed + q``; runs execute on ``config.workers`` threads
    and each owns its stream, so results do not depend on the worker count. The output
    directory receives:

    - ``trace_<q>.csv`` per run
    - ``best_<q>.txt`` with each run's best genome
    - ``summary_<c>.csv`` and ``summary_<c>.txt`` per checkpoint ``c``
    - ``curves.csv`` with per-generation means across runs
    - ``run.json``, the manifest

    Args:
        config (:class:`~pydpso.harness.ExperimentConfig`):
            The campaign

    Returns:
        :class:`ExperimentResult`

    Raises:
        :class:`~pydpso.exception.UnknownProblemError`, :class:`~pydpso.exception.UnknownAlgorithmError`:
            Before anything is written
        :class:`~pydpso.exception.ConfigError`: If the problem cannot be built from its parameters
        :class:`OSError`: If the output directory is not writable
    """

    algorithm = get_algorithm(config.algorithm)
    try:
        problem = config.problem.build()
    except InvalidParametersError as e:
        raise ConfigError(str(e), "problem") from None
    log_overrides(config.params)

    logger.info(
        "Running {} on {}: {} runs of {} generations from seed {}".format(
            algorithm.name, problem.name, config.runs, config.iterations, config.base_seed
        )
    )

    def execute(seed: int) -> RunResult:
        result = algorithm(problem, config.params, seed)
        logger.info(
            "{} seed {} finished: best {} after {} generations in {:.2f}s".format(
                algorithm.name, seed, result.best_fitness, result.generations, result.total_time
            )
        )
        return result

    with ThreadPoolExecutor(config.workers, "pydpso_worker") as workers:
        runs = list(workers.map(execute, config.seeds()))

    directory = Path(config.output)
    directory.mkdir(parents=True, exist_ok=True)
    files = []

    for q, run in enumerate(runs):
        files.append(write_csv(directory / "trace_{}.csv".format(q), TRACE_HEADER, trace_rows(run)))
        best_path = directory / "best_{}.txt".format(q)
        best_path.write_text(format_genome(problem, run) + "\n")
        files.append(best_path)

    summaries = {}
    for checkpoint in config.checkpoints:
        summary = summarize([run.truncate(checkpoint) for run in runs], problem)
        summaries[checkpoint] = summary

        csv_path = directory / "summary_{}.csv".format(checkpoint)
        csv_path.write_text(summary_to_csv(summary))
        text_path = directory / "summary_{}.txt".format(checkpoint)
        text_path.write_text(
            summary_to_text(
                summary,
                "{} on {} at iteration {}".format(algorithm.name, problem.name, checkpoint),
            )
        )
        files.extend([csv_path, text_path])

    files.append(write_csv(directory / "curves.csv", CURVES_HEADER, curve_rows(runs)))

    manifest = directory / MANIFEST
    manifest.write_text(
        dumps(
            {
                "version": pydpso.__version__,
                "algorithm": algorithm.name,
                "problem": problem.name,
                "problem_kind": config.problem.kind,
                "known_best": problem.known_best,
                "bounds": problem.bounds,
                "params": config.params.to_labels(),
                "checkpoints": list(config.checkpoints),
                "seeds": list(config.seeds()),
                "config": dump_config(config),
                "runs": [run.to_dict() for run in runs],
                "summaries": {str(c): s.to_dict() for c, s in summaries.items()},
            },
            indent=4,
        )
    )
    files.append(manifest)

    for path in files:
        logger.debug("Wrote {}".format(path))
    logger.info("Wrote {} files to {}".format(len(files), directory))

    return ExperimentResult(config, problem, runs, summaries, files)
