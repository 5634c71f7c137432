from typing import Sequence

import numpy as np

from ..exception import InvalidParametersError


def _curves(runs: Sequence[Sequence[float]]) -> np.ndarray:
    if len(runs) < 1:
        raise InvalidParametersError("at least one run is required")

    lengths = {len(run) for run in runs}
    if len(lengths) != 1:
        raise InvalidParametersError(
            "runs have different generation counts: {}".format(sorted(lengths))
        )
    elif 0 in lengths:
        raise InvalidParametersError("runs must have at least one generation")

    return np.asarray(runs, dtype=np.float64)


def avg_bog(runs: Sequence[Sequence[float]]) -> float:
    """Mean best-of-generation over ``Q`` runs of ``G`` generations

    Args:
        runs (``Sequence[Sequence[float]]``):
            One BOG curve per run, all of the same length

    Raises:
        :class:`~pydpso.exception.InvalidParametersError`: On empty or ragged input
    """

    curves = _curves(runs)
    return float(curves.sum() / curves.size)


def _check_bounds(min_t: float, max_t: float) -> None:
    if not min_t < max_t:
        raise InvalidParametersError(
            "accuracy needs min_t < max_t, got {} and {}".format(min_t, max_t)
        )


def accuracy(f: float, min_t: float, max_t: float) -> float:
    """Accuracy of fitness ``f`` between the best ``min_t`` and worst ``max_t`` known values

    ``f`` is clamped into ``[min_t, max_t]``; ``1`` means optimal and ``0`` means worst.
    """

    _check_bounds(min_t, max_t)
    f = min(max(f, min_t), max_t)
    return (max_t - f) / (max_t - min_t)


def accuracy_literal(f: float, min_t: float, max_t: float) -> float:
    """Relative error ``(f - min_t) / (max_t - min_t)``; ``0`` means optimal"""

    _check_bounds(min_t, max_t)
    f = min(max(f, min_t), max_t)
    return (f - min_t) / (max_t - min_t)


def area(bog: Sequence[float], normalized: bool = False) -> float:
    """Area under one BOG curve

    Args:
        bog (``Sequence[float]``):
            Best-of-generation values of one run

        normalized (``bool``, *optional*):
            Divide by the number of generations. Defaults to ``False`` (the raw sum)

    Raises:
        :class:`~pydpso.exception.InvalidParametersError`: If ``bog`` is empty
    """

    values = np.asarray(bog, dtype=np.float64)
    if values.size == 0:
        raise InvalidParametersError("area of an empty curve")

    total = float(values.sum())
    return total / values.size if normalized else total


def avg_area(runs: Sequence[Sequence[float]], normalized: bool = False) -> float:
    """Mean :func:`area` over ``Q`` runs of equal length"""

    curves = _curves(runs)
    return float(np.mean([area(curve, normalized) for curve in curves]))
