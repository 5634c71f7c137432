from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from ...exception import InvalidParametersError
from ..genome import Genome
from ..rng import RngStream

FitnessFunction = Callable[[Genome, Optional[RngStream]], float]


class ProblemInstance:
    """An evaluatable minimization problem over integer genomes

    Args:
        name (``str``):
            Identifier used in logs and result files

        arity (``Sequence[int]``):
            Alphabet size of every position; its length is the dimension ``M``

        fitness (``Callable``):
            Pure function ``(genome, rng) -> float``. ``rng`` is only used by stochastic problems

        bounds (``tuple``, *optional*):
            ``(min_t, max_t)`` used to compute accuracy. Defaults to ``None``

        known_best (``float``, *optional*):
            The known optimal fitness. Defaults to ``None``

        stochastic (``bool``, *optional*):
            Pass ``True`` if ``fitness`` draws from the rng. Defaults to ``False``

        metadata (``dict``, *optional*):
            Free-form description of how the problem was built
    """

    def __init__(
        self,
        name: str,
        arity: Sequence[int],
        fitness: FitnessFunction,
        bounds: Tuple[float, float] = None,
        known_best: float = None,
        stochastic: bool = False,
        metadata: dict = None,
    ) -> None:
        arity = np.array(arity, dtype=np.int64).reshape(-1)

        if not isinstance(name, str):
            raise TypeError("name must be str")
        elif not callable(fitness):
            raise TypeError("fitness must be callable")
        elif arity.size < 1:
            raise InvalidParametersError("dimension must be at least 1")
        elif arity.min() < 1:
            raise InvalidParametersError("every arity must be at least 1")
        elif bounds is not None and not bounds[0] < bounds[1]:
            raise InvalidParametersError(
                "bounds must satisfy min_t < max_t, got {}".format(tuple(bounds))
            )

        arity.setflags(write=False)
        self.name = name
        self.arity = arity
        self.dimension = int(arity.size)
        self.bounds = None if bounds is None else (float(bounds[0]), float(bounds[1]))
        self.known_best = None if known_best is None else float(known_best)
        self.stochastic = stochastic
        self.metadata = dict(metadata or {})
        self._fitness = fitness

        mutable = np.flatnonzero(arity >= 2)
        mutable.setflags(write=False)
        self.mutable_positions = mutable

    def __repr__(self) -> str:
        return "ProblemInstance(name={!r}, dimension={}, known_best={})".format(
            self.name, self.dimension, self.known_best
        )

    def evaluate(self, genome: Genome, rng: RngStream = None) -> float:
        """Fitness of ``genome`` (lower is better)"""
        return float(self._fitness(genome, rng))

    def reached(self, fitness: float) -> bool:
        """Whether ``fitness`` counts as attaining :attr:`known_best`

        The tolerance is ``1e-9 * max(1, |known_best|)``
        """
        if self.known_best is None:
            return False
        return abs(fitness - self.known_best) <= 1e-9 * max(1.0, abs(self.known_best))


class Evaluator:
    """Counts fitness evaluations of one run

    Args:
        problem (:class:`ProblemInstance`):
            The problem being optimized

        rng (:class:`~pydpso.types.RngStream`):
            The run's stream, handed to stochastic problems
    """

    def __init__(self, problem: ProblemInstance, rng: RngStream) -> None:
        self.problem = problem
        self.rng = rng
        self.count = 0

    def __call__(self, genome: Genome) -> float:
        self.count += 1
        return self.problem.evaluate(genome, self.rng)
