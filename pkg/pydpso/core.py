import numpy as np

from .types import Genome, ProblemInstance, RngStream
from .types.genome import ensure_same_length


def random_genome(problem: ProblemInstance, rng: RngStream) -> Genome:
    """Draw every gene uniformly over its arity

    Args:
        problem (:class:`~pydpso.types.ProblemInstance`):
            The problem supplying dimension and arity

        rng (:class:`~pydpso.types.RngStream`):
            The run's stream

    Returns:
        :class:`~pydpso.types.Genome`
    """

    return Genome(rng.generator.integers(0, problem.arity))


def hamming(a: Genome, b: Genome) -> int:
    """Number of positions where ``a`` and ``b`` differ

    Raises:
        :class:`~pydpso.exception.IncompatibleGenomesError`: If the lengths differ
    """

    ensure_same_length(a, b)
    return int(np.count_nonzero(a.genes != b.genes))
