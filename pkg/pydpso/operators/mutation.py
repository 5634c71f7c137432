from typing import Sequence

import numpy as np

from ..exception import InvalidParametersError
from ..types import Genome, RngStream


def mutable_positions(arity: Sequence[int]) -> np.ndarray:
    """Positions whose alphabet offers an alternative value"""
    return np.flatnonzero(np.asarray(arity) >= 2)


def replace_genes(
    genome: Genome, positions: np.ndarray, arity: np.ndarray, rng: RngStream
) -> Genome:
    """Give every listed position a uniformly chosen different value"""
    genes = genome.genes.copy()
    sizes = arity[positions]
    # an offset in [1, size) lands on every other symbol with equal probability
    offsets = rng.generator.integers(1, sizes)
    genes[positions] = (genes[positions] + offsets) % sizes
    return Genome(genes)


def mutate_one(genome: Genome, arity: Sequence[int], rng: RngStream) -> Genome:
    """Change exactly one gene (the slight change of the inertia stage)

    The position is uniform over mutable positions and the new value is uniform over the
    other symbols of that position.

    Raises:
        :class:`~pydpso.exception.InvalidParametersError`: If every arity is 1
    """

    arity = np.asarray(arity)
    mutable = mutable_positions(arity)
    if mutable.size == 0:
        raise InvalidParametersError("no position can be mutated (all arities are 1)")

    position = mutable[rng.integer(0, mutable.size - 1)]
    return replace_genes(genome, np.array([position]), arity, rng)
