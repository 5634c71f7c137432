from typing import Sequence, Tuple

import numpy as np

from ..operators import inertia, mutable_positions, mutate_one, single_point_crossover
from ..types import DpsoParams, Genome, ProblemInstance, RngStream, RunResult
from .base import RunTracker, Scored, best_of, pbest_update, random_population
from .registry import register


def cross_toward(a: Genome, b: Genome, rng: RngStream) -> Genome:
    """One uniformly chosen child of a single-point crossover of ``a`` and ``b``

    A length-1 genome has no interior cut; its two "children" are the parents themselves.
    """

    if len(a) < 2:
        children: Tuple[Genome, Genome] = (a, b)
    else:
        children = single_point_crossover(a, b, rng)
    return children[rng.integer(0, 1)]


def dpso_particle_update(
    x: Genome,
    pbest: Genome,
    gbest: Genome,
    w: float,
    c1: float,
    c2: float,
    rng: RngStream,
    arity: Sequence[int],
) -> Genome:
    """Move a particle with the three gated stages of the discrete PSO

    1. with probability ``w`` mutate one gene (skipped when no position is mutable),
    2. with probability ``c1`` cross with the personal best,
    3. with probability ``c2`` cross with the global best.

    Each crossover keeps one of its two children at random.
    """

    mutate = rng.random() < w and mutable_positions(arity).size > 0
    moved = mutate_one(x, arity, rng) if mutate else x
    moved = cross_toward(moved, pbest, rng) if rng.random() < c1 else moved
    return cross_toward(moved, gbest, rng) if rng.random() < c2 else moved


def move_swarm(
    positions: list,
    pbests: list,
    gbest: Genome,
    w: float,
    params: DpsoParams,
    tracker: RunTracker,
) -> list:
    """Update, evaluate and personal-best every particle in order; returns the new fitnesses"""

    arity = tracker.problem.arity
    fitnesses = []
    for i, particle in enumerate(positions):
        moved = dpso_particle_update(
            particle.genome,
            pbests[i].genome,
            gbest,
            w,
            params.c1,
            params.c2,
            tracker.rng,
            arity,
        )
        positions[i] = Scored(moved, tracker.evaluate(moved))
        pbests[i] = pbest_update(positions[i], pbests[i])
        fitnesses.append(positions[i].fitness)
    return fitnesses


@register("DPSO", DpsoParams)
def run_dpso(problem: ProblemInstance, params: DpsoParams, seed: int) -> RunResult:
    """Discrete PSO with mutation and crossover stages

    Args:
        problem (:class:`~pydpso.types.ProblemInstance`):
            The problem to minimize

        params (:class:`~pydpso.types.DpsoParams`):
            Swarm size, generations, inertia schedule and crossover probabilities

        seed (``int``):
            Seed of the run's stream

    Returns:
        :class:`~pydpso.types.RunResult`
    """

    tracker = RunTracker(problem, seed, "DPSO")
    positions = random_population(problem, params.population, tracker.rng, tracker.evaluate)
    pbests = list(positions)
    tracker.consider(best_of(pbests))

    for generation in range(1, params.iterations + 1):
        w = inertia(generation - 1, params.iterations, params.w_max, params.w_min)
        fitnesses = move_swarm(positions, pbests, tracker.best.genome, w, params, tracker)
        tracker.consider(best_of(pbests))
        tracker.record(generation, float(np.min(fitnesses)), fitnesses)

    return tracker.finish()
