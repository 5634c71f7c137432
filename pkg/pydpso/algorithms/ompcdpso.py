from typing import Callable, List, Sequence

import numpy as np

from ..operators import inertia, multi_parent_crossover, onlooker_distances, onlooker_neighbor
from ..types import OmpcdpsoParams, ProblemInstance, RngStream, RunResult
from .base import RunTracker, Scored, best_of, random_population, ranked
from .dpso import move_swarm
from .registry import register


def _evaluator(problem: ProblemInstance, rng: RngStream, evaluate: Callable = None) -> Callable:
    if evaluate is not None:
        return evaluate
    return lambda genome: problem.evaluate(genome, rng)


def select_global_bests(pbests: Sequence[Scored], g: int) -> List[Scored]:
    """The ``g`` lowest-fitness personal bests, lower particle index first on ties

    Raises:
        :class:`ValueError`: If ``g`` is outside ``[1, len(pbests)]``
    """

    if not 1 <= g <= len(pbests):
        raise ValueError("g must be between 1 and {}, got {}".format(len(pbests), g))
    return [pbests[i] for i in ranked(pbests)[:g]]


def onlooker_phase(
    gbests: Sequence[Scored],
    onl: int,
    nbhd_max: int,
    problem: ProblemInstance,
    rng: RngStream,
    evaluate: Callable = None,
) -> List[Scored]:
    """Send ``onl`` onlookers to every pool member

    Onlooker ``j`` of a member searches at Hamming distance ``(j mod nbhd_max) + 1``, capped
    at the number of mutable positions. A member is replaced by its best onlooker only when
    that onlooker is strictly better. Without a mutable position no onlooker is sent.

    Args:
        gbests (``Sequence`` of :class:`~pydpso.algorithms.base.Scored`):
            The global-bests pool

        onl (``int``):
            Onlookers per member

        nbhd_max (``int``):
            Largest search distance

        problem (:class:`~pydpso.types.ProblemInstance`):
            The problem supplying arity and fitness

        rng (:class:`~pydpso.types.RngStream`):
            The run's stream

        evaluate (``Callable``, *optional*):
            Counting evaluator of the run. Defaults to ``problem.evaluate``

    Returns:
        ``list``: The pool in the same order
    """

    if onl < 1:
        raise ValueError("onl must be at least 1")

    evaluate = _evaluator(problem, rng, evaluate)
    cap = problem.mutable_positions.size
    if cap == 0:
        return list(gbests)
    distances = [min(k, cap) for k in onlooker_distances(onl, nbhd_max)]

    improved = []
    for member in gbests:
        best = member
        for k in distances:
            neighbor = onlooker_neighbor(member.genome, k, problem.arity, rng)
            fitness = evaluate(neighbor)
            if fitness < best.fitness:
                best = Scored(neighbor, fitness)
        improved.append(best)
    return improved


def mpc_phase(
    gbests: Sequence[Scored],
    n_mpc: int,
    problem: ProblemInstance,
    rng: RngStream,
    evaluate: Callable = None,
) -> List[Scored]:
    """Multi-parent crossover over the whole pool, then an elitist merge

    ``n_mpc`` children are built from all ``E`` members, each with a fresh parent-to-segment
    permutation. Children and incumbents are merged and the ``E`` best are kept, sorted by
    fitness with incumbents ahead of children on ties.

    Raises:
        :class:`~pydpso.exception.InvalidParametersError`: If the genome is shorter than the pool
    """

    if n_mpc < 1:
        raise ValueError("n_mpc must be at least 1")

    evaluate = _evaluator(problem, rng, evaluate)
    parents = [member.genome for member in gbests]

    children = []
    for _ in range(n_mpc):
        child = multi_parent_crossover(parents, rng)
        children.append(Scored(child, evaluate(child)))

    merged = list(gbests) + children
    return [merged[i] for i in ranked(merged)[: len(gbests)]]


def improve_pool(
    pbests: List[Scored], params: OmpcdpsoParams, tracker: RunTracker
) -> List[Scored]:
    """Select, refine and merge the global-bests pool for one generation

    Personal bests are left untouched unless ``pool_feedback`` is set. With it the refined
    members are handed back to the particles that supplied the pool: the ``i``-th best
    refined member goes to the owner of the ``i``-th best pool member before crossover, and
    replaces that owner's personal best only when strictly better.
    """

    owners = ranked(pbests)[: params.g_best_count]
    pool = [pbests[i] for i in owners]

    if params.use_onlookers:
        pool = onlooker_phase(
            pool,
            params.onlookers_per_gbest,
            params.neighborhood_max,
            tracker.problem,
            tracker.rng,
            tracker.evaluate,
        )

    if params.use_mpc:
        order = ranked(pool)
        owners = [owners[i] for i in order]
        pool = mpc_phase(pool, params.n_mpc, tracker.problem, tracker.rng, tracker.evaluate)

    if params.pool_feedback:
        for owner, member in zip(owners, pool):
            if member.fitness < pbests[owner].fitness:
                pbests[owner] = member

    return pool


@register("OMPCDPSO", OmpcdpsoParams)
def run_ompcdpso(problem: ProblemInstance, params: OmpcdpsoParams, seed: int) -> RunResult:
    """Discrete PSO driven by a global-bests pool refined by onlookers and multi-parent crossover

    Each generation the pool is rebuilt from the personal bests and improved before the
    single tracked global best moves the particles.

    Args:
        problem (:class:`~pydpso.types.ProblemInstance`):
            The problem to minimize

        params (:class:`~pydpso.types.OmpcdpsoParams`):
            Swarm and pool parameters

        seed (``int``):
            Seed of the run's stream

    Returns:
        :class:`~pydpso.types.RunResult`
    """

    tracker = RunTracker(problem, seed, "OMPCDPSO")
    positions = random_population(problem, params.population, tracker.rng, tracker.evaluate)
    pbests = list(positions)
    tracker.consider(best_of(pbests))

    per_generation = params.evaluations_per_generation(problem.mutable_positions.size > 0)
    for generation in range(1, params.iterations + 1):
        before = tracker.evaluate.count

        pool = improve_pool(pbests, params, tracker)
        pool_best = tracker.consider(best_of(pool))

        w = inertia(generation - 1, params.iterations, params.w_max, params.w_min)
        fitnesses = move_swarm(positions, pbests, pool_best.genome, w, params, tracker)
        tracker.consider(best_of(pbests))

        if tracker.evaluate.count - before != per_generation:
            raise RuntimeError(
                "generation {} used {} evaluations, expected {}".format(
                    generation, tracker.evaluate.count - before, per_generation
                )
            )

        bog = min(float(np.min(fitnesses)), best_of(pool).fitness)
        tracker.record(generation, bog, fitnesses)

    return tracker.finish()
