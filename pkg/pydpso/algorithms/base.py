import time
from logging import DEBUG, getLogger
from typing import List, NamedTuple, Sequence

import numpy as np

from ..core import random_genome
from ..types import Evaluator, GenerationRecord, Genome, ProblemInstance, RngStream, RunResult

logger = getLogger(__name__)

LOG_EVERY = 50


class Scored(NamedTuple):
    """A genome together with its fitness"""

    genome: Genome
    fitness: float


def pbest_update(current: Scored, previous_pbest: Scored) -> Scored:
    """Personal best rule: the current position wins only if strictly better"""
    if current.fitness < previous_pbest.fitness:
        return current
    return previous_pbest


def best_of(candidates: Sequence[Scored]) -> Scored:
    """Lowest fitness, lowest index on ties"""
    return min(candidates, key=lambda c: c.fitness)


def ranked(candidates: Sequence[Scored]) -> List[int]:
    """Indices sorted by fitness, lower index first on ties"""
    return sorted(range(len(candidates)), key=lambda i: (candidates[i].fitness, i))


def random_population(
    problem: ProblemInstance, size: int, rng: RngStream, evaluate: Evaluator
) -> List[Scored]:
    population = []
    for _ in range(size):
        genome = random_genome(problem, rng)
        population.append(Scored(genome, evaluate(genome)))
    return population


class RunTracker:
    """Greedy best-so-far tracking and trace recording for one run

    Args:
        problem (:class:`~pydpso.types.ProblemInstance`):
            The problem being optimized

        seed (``int``):
            Seed of the run

        algorithm (``str``, *optional*):
            Name used in log lines
    """

    def __init__(self, problem: ProblemInstance, seed: int, algorithm: str = "") -> None:
        self.problem = problem
        self.rng = RngStream(seed)
        self.evaluate = Evaluator(problem, self.rng)
        self.algorithm = algorithm
        self.best: Scored = None
        self.records: List[GenerationRecord] = []
        self.itr_best = None
        self.t_best = None
        self._start = time.perf_counter()

    def elapsed(self) -> float:
        return time.perf_counter() - self._start

    def consider(self, candidate: Scored) -> Scored:
        """Accept ``candidate`` as the tracked best if strictly better; return the tracked best"""
        if self.best is None or candidate.fitness < self.best.fitness:
            self.best = candidate
        return self.best

    def record(self, generation: int, best_of_generation: float, fitnesses: Sequence[float]) -> None:
        elapsed = self.elapsed()
        best_so_far = self.best.fitness
        self.records.append(
            GenerationRecord(
                generation,
                float(best_of_generation),
                float(best_so_far),
                float(np.mean(fitnesses)),
                elapsed,
            )
        )

        if self.itr_best is None and self.problem.reached(best_so_far):
            self.itr_best = generation
            self.t_best = elapsed

        if generation % LOG_EVERY == 0 and logger.isEnabledFor(DEBUG):
            logger.debug(
                "{} on {} seed {}: generation {} best {}".format(
                    self.algorithm, self.problem.name, self.rng.seed, generation, best_so_far
                )
            )

    def finish(self) -> RunResult:
        return RunResult(
            self.records,
            self.best.genome,
            self.best.fitness,
            self.elapsed(),
            itr_best=self.itr_best,
            t_best=self.t_best,
            evaluations=self.evaluate.count,
            seed=self.rng.seed,
        )
