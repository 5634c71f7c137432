from typing import List, Sequence, Tuple

import numpy as np

from ..exception import InvalidParametersError
from ..types import Genome, RngStream
from ..types.genome import ensure_same_length


def single_point_crossover(
    a: Genome, b: Genome, rng: RngStream, cut: int = None
) -> Tuple[Genome, Genome]:
    """One-cut crossover

    Args:
        a (:class:`~pydpso.types.Genome`), b (:class:`~pydpso.types.Genome`):
            Parents of equal length ``M >= 2``

        rng (:class:`~pydpso.types.RngStream`):
            Draws the cut when ``cut`` is not given

        cut (``int``, *optional*):
            Fixed cut point in ``[1, M-1]``

    Returns:
        ``(a[:cut] + b[cut:], b[:cut] + a[cut:])``

    Raises:
        :class:`~pydpso.exception.IncompatibleGenomesError`, :class:`~pydpso.exception.InvalidParametersError`
    """

    ensure_same_length(a, b)
    m = len(a)
    if m < 2:
        raise InvalidParametersError("crossover needs genomes of length at least 2")

    if cut is None:
        cut = rng.integer(1, m - 1)
    elif not 1 <= cut <= m - 1:
        raise InvalidParametersError("cut {} outside [1, {}]".format(cut, m - 1))

    return (
        Genome(np.concatenate([a.genes[:cut], b.genes[cut:]])),
        Genome(np.concatenate([b.genes[:cut], a.genes[cut:]])),
    )


def segment_bounds(m: int, e: int) -> List[Tuple[int, int]]:
    """Split ``range(m)`` into ``e`` contiguous near-equal segments, longer ones first"""

    if e < 1:
        raise InvalidParametersError("at least one segment is required")
    if m < e:
        raise InvalidParametersError(
            "cannot give each of {} parents a segment of a length-{} genome".format(e, m)
        )

    base, extra = divmod(m, e)
    bounds = []
    start = 0
    for s in range(e):
        end = start + base + (1 if s < extra else 0)
        bounds.append((start, end))
        start = end
    return bounds


def multi_parent_crossover(
    parents: Sequence[Genome], rng: RngStream, order: Sequence[int] = None
) -> Genome:
    """Assemble a child from one contiguous segment of every parent

    Segment ``s`` is copied from ``parents[order[s]]``; ``order`` is a uniform random
    permutation unless given, so each parent supplies exactly one segment.

    Raises:
        :class:`~pydpso.exception.InvalidParametersError`: If there are fewer genes than parents
    """

    if not parents:
        raise InvalidParametersError("at least one parent is required")
    for other in parents[1:]:
        ensure_same_length(parents[0], other)

    bounds = segment_bounds(len(parents[0]), len(parents))
    if order is None:
        order = rng.permutation(len(parents))
    elif sorted(order) != list(range(len(parents))):
        raise InvalidParametersError("order must be a permutation of the parents")

    return Genome(
        np.concatenate(
            [parents[p].genes[start:end] for p, (start, end) in zip(order, bounds)]
        )
    )
