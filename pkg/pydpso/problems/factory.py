from logging import getLogger
from typing import Tuple

from ..exception import InvalidParametersError, UnknownProblemError
from ..types import Genome, ProblemInstance, RngStream
from .allocation import (
    AllocationInstance,
    allocation_fitness,
    allocation_oracle,
    allocation_worst,
    generate_grid_instance,
    read_instance,
)
from .benchmarks import eval_benchmark, get_benchmark
from .codec import BinaryCodec, decode

logger = getLogger(__name__)

DEFAULT_BITS_PER_DIM = 20


def make_problem(kind: str, **params) -> ProblemInstance:
    """Build an evaluatable problem

    Example:
        .. code-block:: python

            from pydpso.problems import make_problem

            grid = make_problem("allocation", rows=20, cols=20, quadrant_centers=True)
            gp = make_problem("benchmark", function="GP", bits_per_dim=20)

    Args:
        kind (``str``):
            ``allocation`` or ``benchmark``

        **params:
            allocation: ``instance`` (:class:`AllocationInstance` or a path to an instance file) or
            ``rows``, ``cols``, ``spacing``, ``quadrant_centers``, ``centers``.
            benchmark: ``function``, ``bits_per_dim`` (default ``20``), ``dimension``, ``bounds``.
            Both accept ``name``

    Raises:
        :class:`~pydpso.exception.UnknownProblemError`, :class:`~pydpso.exception.InvalidParametersError`
    """

    if kind == "allocation":
        return _allocation_problem(**params)
    elif kind == "benchmark":
        return _benchmark_problem(**params)

    raise UnknownProblemError(kind)


def _allocation_problem(
    instance=None,
    rows: int = None,
    cols: int = None,
    spacing: float = 1.0,
    quadrant_centers: bool = True,
    centers=None,
    name: str = None,
) -> ProblemInstance:
    if instance is None:
        if rows is None or cols is None:
            raise InvalidParametersError("allocation needs an instance or rows and cols")
        instance = generate_grid_instance(rows, cols, spacing, quadrant_centers, centers)
        name = name or "alloc-{}x{}".format(rows, cols)
    elif not isinstance(instance, AllocationInstance):
        source = instance
        instance = read_instance(source)
        name = name or "alloc-{}".format(source)

    name = name or "alloc-M{}-N{}".format(instance.n_demands, instance.n_centers)
    oracle_genome, oracle = allocation_oracle(instance)
    worst = allocation_worst(instance)

    def fitness(genome: Genome, rng: RngStream = None) -> float:
        return allocation_fitness(instance, genome)

    logger.debug("{}: oracle {} worst {}".format(name, oracle, worst))

    return ProblemInstance(
        name,
        [instance.n_centers] * instance.n_demands,
        fitness,
        bounds=(oracle, worst) if oracle < worst else None,
        known_best=oracle,
        metadata={
            "kind": "allocation",
            "instance": instance,
            "oracle_genome": oracle_genome,
        },
    )


def _benchmark_problem(
    function: str = None,
    bits_per_dim: int = DEFAULT_BITS_PER_DIM,
    dimension: int = None,
    bounds: Tuple[float, float] = None,
    name: str = None,
) -> ProblemInstance:
    if function is None:
        raise InvalidParametersError("benchmark needs a function id")

    spec = get_benchmark(function, dimension)
    codec = BinaryCodec(bits_per_dim, spec.dimension, spec.lower, spec.upper)

    def fitness(genome: Genome, rng: RngStream = None) -> float:
        return eval_benchmark(spec, decode(codec, genome), rng)

    return ProblemInstance(
        name or "{}-{}D".format(spec.id, spec.dimension),
        [2] * codec.length,
        fitness,
        bounds=bounds,
        known_best=spec.known_best_value,
        stochastic=spec.stochastic,
        metadata={"kind": "benchmark", "spec": spec, "codec": codec},
    )
