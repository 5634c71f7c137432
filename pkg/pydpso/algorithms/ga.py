from typing import List, Sequence

import numpy as np

from ..operators import mutable_positions, mutate_one, single_point_crossover
from ..types import GaParams, Genome, ProblemInstance, RngStream, RunResult
from .base import RunTracker, Scored, best_of, random_population, ranked
from .registry import register


def rank_weights(size: int) -> np.ndarray:
    """Roulette probabilities by rank: the best of ``size`` weighs ``size``, the worst ``1``"""
    weights = np.arange(size, 0, -1, dtype=np.float64)
    return weights / weights.sum()


def breed(
    a: Genome, b: Genome, params: GaParams, arity: Sequence[int], rng: RngStream
) -> List[Genome]:
    """Two children of ``a`` and ``b``: crossover with probability ``pc``, then per-child mutation

    Mutation is skipped when no position of ``arity`` is mutable.
    """

    if len(a) >= 2 and rng.random() < params.pc:
        children = list(single_point_crossover(a, b, rng))
    else:
        children = [a, b]

    if mutable_positions(arity).size == 0:
        return children
    return [mutate_one(child, arity, rng) if rng.random() < params.pm else child for child in children]


@register("GA", GaParams)
def run_ga(problem: ProblemInstance, params: GaParams, seed: int) -> RunResult:
    """Generational GA with rank-roulette selection and elitism

    The ``elite_count`` best individuals survive unchanged. The rest of the next generation
    is bred from roulette-selected pairs; only new children are evaluated.

    Args:
        problem (:class:`~pydpso.types.ProblemInstance`):
            The problem to minimize

        params (:class:`~pydpso.types.GaParams`):
            Population, generations, ``pc``, ``pm`` and ``elite_count``

        seed (``int``):
            Seed of the run's stream

    Returns:
        :class:`~pydpso.types.RunResult`
    """

    tracker = RunTracker(problem, seed, "GA")
    rng = tracker.rng
    population = random_population(problem, params.population, rng, tracker.evaluate)
    tracker.consider(best_of(population))

    probabilities = rank_weights(params.population)
    n_children = params.population - params.elite_count

    for generation in range(1, params.iterations + 1):
        order = ranked(population)
        offspring: List[Genome] = []
        while len(offspring) < n_children:
            i, j = rng.generator.choice(params.population, size=2, p=probabilities)
            a = population[order[i]].genome
            b = population[order[j]].genome
            offspring.extend(breed(a, b, params, problem.arity, rng))

        population = [population[i] for i in order[: params.elite_count]] + [
            Scored(child, tracker.evaluate(child)) for child in offspring[:n_children]
        ]

        fitnesses = [member.fitness for member in population]
        tracker.consider(best_of(population))
        tracker.record(generation, min(fitnesses), fitnesses)

    return tracker.finish()
