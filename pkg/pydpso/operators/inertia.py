from ..exception import InvalidParametersError


def inertia(t: int, iter_max: int, w_max: float, w_min: float) -> float:
    """Linearly annealed inertia weight ``w_max - t * (w_max - w_min) / iter_max``

    Raises:
        :class:`~pydpso.exception.InvalidParametersError`: If ``iter_max`` is not positive
    """

    if iter_max < 1:
        raise InvalidParametersError("iter_max must be at least 1")
    return w_max - t * (w_max - w_min) / iter_max
