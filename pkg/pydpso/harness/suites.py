from pathlib import Path
from typing import Callable, Dict, List, Sequence

from ..exception import UnknownAlgorithmError, UnknownProblemError
from ..problems import BENCHMARKS
from ..types import BaParams, DpsoParams, GaParams, OmpcdpsoParams
from .config import ExperimentConfig, ProblemConfig

ALGORITHM_ORDER = ("GA", "BA", "DPSO", "OMPCDPSO")


def default_blocks(iterations: int) -> Dict[str, object]:
    """Parameter blocks of the allocation and 2D benchmark campaigns"""
    return {
        "GA": GaParams(iterations=iterations),
        "BA": BaParams(iterations=iterations),
        "DPSO": DpsoParams(iterations=iterations),
        "OMPCDPSO": OmpcdpsoParams(iterations=iterations),
    }


def thirty_dimensional(iterations: int) -> Dict[str, object]:
    """Parameter blocks of the 30D campaign: swarm of 30, pool of 8"""
    return {
        "GA": GaParams(population=30, iterations=iterations, elite_count=3),
        "BA": BaParams(population=30, iterations=iterations, employed=15, scouts=15),
        "DPSO": DpsoParams(population=30, iterations=iterations),
        "OMPCDPSO": OmpcdpsoParams(
            population=30,
            iterations=iterations,
            g_best_count=8,
            onlookers_per_gbest=10,
            n_mpc=10,
        ),
    }


class Suite:
    """A named set of problems run with every algorithm

    Args:
        name (``str``):
            Suite id used by ``pydpso bench``

        problems (``Callable``):
            ``functions -> List[ProblemConfig]``; ``functions`` optionally restricts benchmark ids

        params (``Callable``):
            ``iterations -> {algorithm: params}``

        runs (``int``), iterations (``int``):
            Campaign size

        checkpoints (``Sequence[int]``):
            Summary checkpoints at full size
    """

    def __init__(
        self,
        name: str,
        problems: Callable,
        params: Callable,
        runs: int,
        iterations: int,
        checkpoints: Sequence[int],
    ) -> None:
        self.name = name
        self.problems = problems
        self.params = params
        self.runs = runs
        self.iterations = iterations
        self.checkpoints = tuple(checkpoints)

    def __repr__(self) -> str:
        return "Suite(name={!r}, runs={}, iterations={})".format(
            self.name, self.runs, self.iterations
        )


def _grid(size: int) -> Callable:
    def problems(functions=None) -> List[ProblemConfig]:
        return [
            ProblemConfig(
                "allocation",
                {"rows": size, "cols": size, "spacing": 1.0, "quadrant_centers": True},
            )
        ]

    return problems


def _benchmarks(scalable: bool, dimension: int = None) -> Callable:
    def problems(functions=None) -> List[ProblemConfig]:
        ids = [id for id, spec in BENCHMARKS.items() if spec.scalable == scalable]
        if functions:
            wanted = [f.upper() for f in functions]
            for f in wanted:
                if f not in ids:
                    raise UnknownProblemError(f)
            ids = [id for id in ids if id in wanted]

        configs = []
        for id in ids:
            params = {"function": id, "bits_per_dim": 20}
            if dimension is not None:
                params["dimension"] = dimension
            configs.append(ProblemConfig("benchmark", params))
        return configs

    return problems


SUITES: Dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite("alloc-small", _grid(20), default_blocks, 20, 400, (100, 200, 300, 400)),
        Suite("alloc-large", _grid(60), default_blocks, 20, 3000, (500, 1000, 2000, 3000)),
        Suite("funcs-2d", _benchmarks(False), default_blocks, 30, 500, (500,)),
        Suite("funcs-30d", _benchmarks(True, 30), thirty_dimensional, 30, 500, (500,)),
    )
}


def problem_label(problem: ProblemConfig) -> str:
    params = problem.params
    if problem.kind == "benchmark":
        return "{}-{}D".format(params["function"], params.get("dimension", 2))
    return "alloc-{}x{}".format(params["rows"], params["cols"])


def build_suite(
    name: str,
    output: str = "results",
    runs: int = None,
    iterations: int = None,
    workers: int = 1,
    functions: Sequence[str] = None,
    base_seed: int = 0,
    algorithms: Sequence[str] = ALGORITHM_ORDER,
) -> List[ExperimentConfig]:
    """Configs of a suite, one per problem and algorithm

    Each config writes to ``<output>/<problem>/<algorithm>``. ``runs`` and ``iterations``
    shrink the campaign for desk-scale runs; checkpoints beyond ``iterations`` are dropped.

    Raises:
        :class:`KeyError`: If the suite is unknown
        :class:`~pydpso.exception.UnknownProblemError`: If ``functions`` names an unknown id
        :class:`~pydpso.exception.UnknownAlgorithmError`: If ``algorithms`` names an unknown id
    """

    try:
        suite = SUITES[name]
    except KeyError:
        raise KeyError(
            "unknown suite {!r}, expected one of {}".format(name, ", ".join(SUITES))
        ) from None

    iterations = suite.iterations if iterations is None else iterations
    checkpoints = tuple(c for c in suite.checkpoints if c <= iterations)
    if not checkpoints and iterations >= 1:
        checkpoints = (iterations,)
    blocks = suite.params(iterations)
    for algorithm in algorithms:
        if algorithm.upper() not in blocks:
            raise UnknownAlgorithmError(algorithm)

    configs = []
    for problem in suite.problems(functions):
        for algorithm in algorithms:
            configs.append(
                ExperimentConfig(
                    algorithm,
                    problem,
                    blocks[algorithm.upper()],
                    runs=suite.runs if runs is None else runs,
                    base_seed=base_seed,
                    checkpoints=checkpoints,
                    output=str(Path(output) / problem_label(problem) / algorithm.upper()),
                    workers=workers,
                )
            )
    return configs
