from ..core import random_genome
from ..operators import onlooker_distances, onlooker_neighbor
from ..types import BaParams, ProblemInstance, RunResult
from .base import RunTracker, Scored, best_of, random_population, ranked
from .registry import register


@register("BA", BaParams)
def run_ba(problem: ProblemInstance, params: BaParams, seed: int) -> RunResult:
    """Site-based Bees Algorithm

    Every generation the ``employed`` best members are searched by ``onlookers`` neighbours
    each (distances cycling ``1..neighborhood_max``) and move to the best strictly improving
    one. The ``scouts`` worst members are replaced by random genomes. Onlookers are not sent
    when no position is mutable.

    Args:
        problem (:class:`~pydpso.types.ProblemInstance`):
            The problem to minimize

        params (:class:`~pydpso.types.BaParams`):
            Population, generations and site counts

        seed (``int``):
            Seed of the run's stream

    Returns:
        :class:`~pydpso.types.RunResult`
    """

    tracker = RunTracker(problem, seed, "BA")
    rng = tracker.rng
    population = random_population(problem, params.population, rng, tracker.evaluate)
    tracker.consider(best_of(population))

    cap = problem.mutable_positions.size
    distances = (
        [min(k, cap) for k in onlooker_distances(params.onlookers, params.neighborhood_max)]
        if cap
        else []
    )
    first_scout = params.population - params.scouts

    for generation in range(1, params.iterations + 1):
        order = ranked(population)
        survivors = list(population)

        for index in order[: params.employed]:
            site = population[index]
            best = site
            for k in distances:
                neighbor = onlooker_neighbor(site.genome, k, problem.arity, rng)
                fitness = tracker.evaluate(neighbor)
                if fitness < best.fitness:
                    best = Scored(neighbor, fitness)
            survivors[index] = best

        for index in order[first_scout:]:
            scout = random_genome(problem, rng)
            survivors[index] = Scored(scout, tracker.evaluate(scout))

        population = survivors
        fitnesses = [member.fitness for member in population]
        tracker.consider(best_of(population))
        tracker.record(generation, min(fitnesses), fitnesses)

    return tracker.finish()
