from logging import getLogger
from typing import Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from ..exception import InvalidParametersError, UnknownProblemError
from ..types import RngStream

logger = getLogger(__name__)

Formula = Callable[[np.ndarray, Optional[RngStream]], float]


class BenchmarkSpec:
    """An analytic test function over a box

    Args:
        id (``str``):
            Short identifier, e.g. ``GP`` or ``RASTRIGIN``

        name (``str``):
            Human readable name

        dimension (``int``):
            Number of continuous variables

        lower (``Sequence[float]``), upper (``Sequence[float]``):
            Per-dimension bounds

        formula (``Callable``):
            ``(x, rng) -> float``

        known_best_value (``float``, *optional*):
            Listed minimum. ``None`` when it is not reliable

        known_best_points (``Sequence``, *optional*):
            Points attaining the minimum

        scalable (``bool``, *optional*):
            Whether the function is defined for any dimension. Defaults to ``False``

        stochastic (``bool``, *optional*):
            Whether the formula draws from the rng. Defaults to ``False``
    """

    def __init__(
        self,
        id: str,
        name: str,
        dimension: int,
        lower: Sequence[float],
        upper: Sequence[float],
        formula: Formula,
        known_best_value: float = None,
        known_best_points: Sequence[Sequence[float]] = (),
        scalable: bool = False,
        stochastic: bool = False,
    ) -> None:
        lower = np.broadcast_to(np.asarray(lower, dtype=np.float64), (dimension,)).copy()
        upper = np.broadcast_to(np.asarray(upper, dtype=np.float64), (dimension,)).copy()
        if np.any(lower >= upper):
            raise InvalidParametersError("{}: lower bounds must be below upper bounds".format(id))

        lower.setflags(write=False)
        upper.setflags(write=False)
        self.id = id
        self.name = name
        self.dimension = dimension
        self.lower = lower
        self.upper = upper
        self.formula = formula
        self.known_best_value = known_best_value
        self.known_best_points = [tuple(p) for p in known_best_points]
        self.scalable = scalable
        self.stochastic = stochastic

    def __repr__(self) -> str:
        return "BenchmarkSpec(id={!r}, dimension={})".format(self.id, self.dimension)

    def with_dimension(self, dimension: int) -> "BenchmarkSpec":
        """Same function over ``dimension`` variables

        Raises:
            :class:`~pydpso.exception.InvalidParametersError`: If the function has a fixed dimension
        """

        if dimension == self.dimension:
            return self
        if not self.scalable:
            raise InvalidParametersError("{} is only defined in {}D".format(self.id, self.dimension))
        if dimension < 2:
            raise InvalidParametersError("dimension must be at least 2")

        point = self.known_best_points[0][0] if self.known_best_points else None
        return BenchmarkSpec(
            self.id,
            self.name,
            dimension,
            self.lower[0],
            self.upper[0],
            self.formula,
            self.known_best_value,
            [] if point is None else [(point,) * dimension],
            self.scalable,
            self.stochastic,
        )


BENCHMARKS: Dict[str, BenchmarkSpec] = {}


def benchmark(
    id: str,
    name: str,
    bounds: Tuple,
    known_best_value: Optional[float],
    points: Sequence[Sequence[float]] = (),
    dimension: int = 2,
    scalable: bool = False,
    stochastic: bool = False,
) -> Callable:
    """Register a formula in :data:`BENCHMARKS`

    ``bounds`` is either ``(lower, upper)`` shared by every variable or a pair of per-variable sequences.
    """

    def decorator(func: Formula) -> Formula:
        lower, upper = bounds
        expanded = [p * dimension if len(p) == 1 else p for p in points]
        BENCHMARKS[id] = BenchmarkSpec(
            id,
            name,
            dimension,
            lower,
            upper,
            func,
            known_best_value,
            expanded,
            scalable,
            stochastic,
        )
        return func

    return decorator


def get_benchmark(id: str, dimension: int = None) -> BenchmarkSpec:
    """Look up a registered function, optionally rescaled to ``dimension`` variables

    Raises:
        :class:`~pydpso.exception.UnknownProblemError`
    """

    try:
        spec = BENCHMARKS[id.upper()]
    except KeyError:
        raise UnknownProblemError(id) from None

    if dimension is not None:
        spec = spec.with_dimension(dimension)
    return spec


def eval_benchmark(spec, x: Sequence[float], rng: RngStream = None) -> float:
    """Evaluate a test function

    Args:
        spec (:class:`BenchmarkSpec` | ``str``):
            The function, or its id

        x (``Sequence[float]``):
            A point of length ``spec.dimension``

        rng (:class:`~pydpso.types.RngStream`, *optional*):
            Required by stochastic functions (``QUARTICNOISE``)

    Raises:
        :class:`~pydpso.exception.UnknownProblemError`, :class:`~pydpso.exception.InvalidParametersError`
    """

    if isinstance(spec, str):
        spec = get_benchmark(spec, len(x))

    x = np.asarray(x, dtype=np.float64)
    if x.shape != (spec.dimension,):
        raise InvalidParametersError(
            "{} expects {} variables, got {}".format(spec.id, spec.dimension, x.size)
        )
    if spec.stochastic and rng is None:
        raise InvalidParametersError("{} needs an RngStream for its noise".format(spec.id))
    if np.any(x < spec.lower) or np.any(x > spec.upper):
        logger.warning("{} evaluated outside its bounds at {}".format(spec.id, x.tolist()))

    return float(spec.formula(x, rng))


def _penalty(x: np.ndarray, a: float, k: float, m: float) -> float:
    return float(
        np.sum(
            np.where(x > a, k * (x - a) ** m, 0.0)
            + np.where(x < -a, k * (-x - a) ** m, 0.0)
        )
    )


def _dekkers_aarts_minimizer() -> float:
    # f(0, x2) = y - y**2 + 1e-5 * y**4 with y = x2**2; the minimum sits at the large real root of f'(y)
    roots = np.roots([4e-5, 0.0, -2.0, 1.0])
    y = max(r.real for r in roots if abs(r.imag) < 1e-12)
    return float(np.sqrt(y))


_DA_X2 = _dekkers_aarts_minimizer()


# 2D set


@benchmark(
    "AP",
    "Aluffi-Pentini",
    (-10, 10),
    -0.352386073800034,
    [(-1.046680576580755, 0.0)],
)
def aluffi_pentini(x, rng=None):
    return 0.25 * x[0] ** 4 - 0.5 * x[0] ** 2 + 0.1 * x[0] + 0.5 * x[1] ** 2


@benchmark(
    "BL",
    "Becker and Lago",
    (-10, 10),
    0.0,
    [(5.0, 5.0), (-5.0, 5.0), (5.0, -5.0), (-5.0, -5.0)],
)
def becker_lago(x, rng=None):
    return (abs(x[0]) - 5.0) ** 2 + (abs(x[1]) - 5.0) ** 2


@benchmark("BF1", "Bohachevsky 1", (-50, 50), 0.0, [(0.0, 0.0)])
def bohachevsky_1(x, rng=None):
    return (
        x[0] ** 2
        + 2.0 * x[1] ** 2
        - 0.3 * np.cos(3.0 * np.pi * x[0])
        - 0.4 * np.cos(4.0 * np.pi * x[1])
        + 0.7
    )


@benchmark("BF2", "Bohachevsky 2", (-50, 50), 0.0, [(0.0, 0.0)])
def bohachevsky_2(x, rng=None):
    return (
        x[0] ** 2
        + 2.0 * x[1] ** 2
        - 0.3 * np.cos(3.0 * np.pi * x[0]) * np.cos(4.0 * np.pi * x[1])
        + 0.3
    )


@benchmark(
    "BP",
    "Branin",
    ((-5.0, 0.0), (10.0, 15.0)),
    0.397887,
    [(-np.pi, 12.275), (np.pi, 2.275), (9.42478, 2.475)],
)
def branin(x, rng=None):
    return (
        (x[1] - 5.1 / (4.0 * np.pi**2) * x[0] ** 2 + 5.0 / np.pi * x[0] - 6.0) ** 2
        + 10.0 * (1.0 - 1.0 / (8.0 * np.pi)) * np.cos(x[0])
        + 10.0
    )


@benchmark("CB3", "Three hump camel back", (-5, 5), 0.0, [(0.0, 0.0)])
def camel_back_3(x, rng=None):
    return 2.0 * x[0] ** 2 - 1.05 * x[0] ** 4 + x[0] ** 6 / 6.0 + x[0] * x[1] + x[1] ** 2


@benchmark(
    "CB6",
    "Six hump camel back",
    (-5, 5),
    -1.031628453489877,
    [
        (0.08984201368301331, -0.7126564032704135),
        (-0.08984201368301331, 0.7126564032704135),
    ],
)
def camel_back_6(x, rng=None):
    return (
        4.0 * x[0] ** 2
        - 2.1 * x[0] ** 4
        + x[0] ** 6 / 3.0
        + x[0] * x[1]
        - 4.0 * x[1] ** 2
        + 4.0 * x[1] ** 4
    )


@benchmark("CM", "Cosine mixture", (-1, 1), -0.2, [(0.0, 0.0)])
def cosine_mixture(x, rng=None):
    return -0.1 * np.sum(np.cos(5.0 * np.pi * x)) + np.sum(x**2)


@benchmark(
    "DA",
    "Dekkers and Aarts",
    (-20, 20),
    -24776.5183,
    [(0.0, _DA_X2), (0.0, -_DA_X2)],
)
def dekkers_aarts(x, rng=None):
    r2 = x[0] ** 2 + x[1] ** 2
    return 1e5 * x[0] ** 2 + x[1] ** 2 - r2**2 + 1e-5 * r2**4


@benchmark("EP", "Easom", (-10, 10), -1.0, [(np.pi, np.pi)])
def easom(x, rng=None):
    return -np.cos(x[0]) * np.cos(x[1]) * np.exp(-((x[0] - np.pi) ** 2) - (x[1] - np.pi) ** 2)


@benchmark("GP", "Goldstein and Price", (-2, 2), 3.0, [(0.0, -1.0)])
def goldstein_price(x, rng=None):
    x1, x2 = x
    a = 1.0 + (x1 + x2 + 1.0) ** 2 * (
        19.0 - 14.0 * x1 + 3.0 * x1**2 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2**2
    )
    b = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (
        18.0 - 32.0 * x1 + 12.0 * x1**2 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2**2
    )
    return a * b


@benchmark(
    "MR",
    "Modified Rosenbrock",
    (-5, 5),
    0.0,
    [(0.341307503353524, 0.116490811845416), (1.0, 1.0)],
)
def modified_rosenbrock(x, rng=None):
    return 100.0 * (x[1] - x[0] ** 2) ** 2 + (6.4 * (x[1] - 0.5) ** 2 - x[0] - 0.6) ** 2


@benchmark("SF1", "Schaffer 1", (-100, 100), 0.0, [(0.0, 0.0)])
def schaffer_1(x, rng=None):
    r2 = x[0] ** 2 + x[1] ** 2
    return 0.5 + (np.sin(np.sqrt(r2)) ** 2 - 0.5) / (1.0 + 0.001 * r2) ** 2


@benchmark("SF2", "Schaffer 2", (-100, 100), 0.0, [(0.0, 0.0)])
def schaffer_2(x, rng=None):
    r2 = x[0] ** 2 + x[1] ** 2
    return r2**0.25 * (np.sin(50.0 * r2**0.1) ** 2 + 1.0)


# 30D unimodal set


@benchmark("SPHERE", "Sphere", (-100, 100), 0.0, [(0.0,)], 30, True)
def sphere(x, rng=None):
    return np.sum(x**2)


@benchmark("SCHWEFEL222", "Schwefel 2.22", (-10, 10), 0.0, [(0.0,)], 30, True)
def schwefel_222(x, rng=None):
    return np.sum(np.abs(x)) + np.prod(np.abs(x))


@benchmark("SCHWEFEL12", "Schwefel 1.2", (-100, 100), 0.0, [(0.0,)], 30, True)
def schwefel_12(x, rng=None):
    return np.sum(np.cumsum(x) ** 2)


@benchmark("MAXABS", "Schwefel 2.21", (-100, 100), 0.0, [(0.0,)], 30, True)
def max_abs(x, rng=None):
    return np.max(np.abs(x))


@benchmark("ROSENBROCK", "Rosenbrock", (-30, 30), 0.0, [(1.0,)], 30, True)
def rosenbrock(x, rng=None):
    return np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2)


@benchmark("STEP", "Step", (-100, 100), 0.0, [(0.0,)], 30, True)
def step(x, rng=None):
    return np.sum(np.floor(x + 0.5) ** 2)


@benchmark(
    "QUARTICNOISE", "Quartic with noise", (-1.28, 1.28), 0.0, [(0.0,)], 30, True, True
)
def quartic_noise(x, rng):
    return np.sum(np.arange(1, x.size + 1) * x**4) + rng.random()


# 30D multimodal set


@benchmark("SCHWEFEL", "Schwefel 2.26", (-500, 500), None, (), 30, True)
def schwefel(x, rng=None):
    return np.sum(-x * np.sin(np.sqrt(np.abs(x))))


@benchmark("RASTRIGIN", "Rastrigin", (-5.12, 5.12), 0.0, [(0.0,)], 30, True)
def rastrigin(x, rng=None):
    return np.sum(x**2 - 10.0 * np.cos(2.0 * np.pi * x) + 10.0)


@benchmark("ACKLEY", "Ackley", (-32, 32), 0.0, [(0.0,)], 30, True)
def ackley(x, rng=None):
    n = x.size
    return (
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(x**2) / n))
        - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / n)
        + 20.0
        + np.e
    )


@benchmark("GRIEWANK", "Griewank", (-600, 600), 0.0, [(0.0,)], 30, True)
def griewank(x, rng=None):
    i = np.arange(1, x.size + 1)
    return np.sum(x**2) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0


@benchmark("PENALIZED1", "Generalized penalized 1", (-50, 50), 0.0, [(-1.0,)], 30, True)
def penalized_1(x, rng=None):
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    core = (
        10.0 * np.sin(np.pi * y[0]) ** 2
        + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[1:]) ** 2))
        + (y[-1] - 1.0) ** 2
    )
    return np.pi / n * core + _penalty(x, 10.0, 100.0, 4.0)


@benchmark("PENALIZED2", "Generalized penalized 2", (-50, 50), 0.0, [(1.0,)], 30, True)
def penalized_2(x, rng=None):
    core = (
        np.sin(3.0 * np.pi * x[0]) ** 2
        + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x[1:]) ** 2))
        + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * x[-1]) ** 2)
    )
    return 0.1 * core + _penalty(x, 5.0, 100.0, 4.0)
