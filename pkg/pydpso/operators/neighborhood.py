from typing import Sequence

import numpy as np

from ..exception import InvalidParametersError
from ..types import Genome, RngStream
from .mutation import mutable_positions, replace_genes


def onlooker_neighbor(
    genome: Genome, k: int, arity: Sequence[int], rng: RngStream
) -> Genome:
    """A neighbour at Hamming distance exactly ``k``

    ``k`` distinct mutable positions are drawn without replacement and each gets a different value.

    Raises:
        :class:`~pydpso.exception.InvalidParametersError`: If ``k`` is below 1 or exceeds the mutable positions
    """

    arity = np.asarray(arity)
    mutable = mutable_positions(arity)
    if not 1 <= k <= mutable.size:
        raise InvalidParametersError(
            "onlooker distance {} outside [1, {}]".format(k, mutable.size)
        )

    positions = mutable[rng.sample(mutable.size, k)]
    return replace_genes(genome, positions, arity, rng)


def onlooker_distances(count: int, neighborhood_max: int) -> list:
    """Distances of ``count`` onlookers, cycling ``1..neighborhood_max``"""
    return [(j % neighborhood_max) + 1 for j in range(count)]
