from typing import Callable, Dict

from ..exception import UnknownAlgorithmError


class Algorithm:
    """A registered optimizer

    Args:
        name (``str``):
            Algorithm id used in configs and result files

        func (``Callable``):
            ``(problem, params, seed) -> RunResult``

        params_class (``type``):
            Parameter block accepted by ``func``
    """

    def __init__(self, name: str, func: Callable, params_class: type) -> None:
        self.name = name
        self.func = func
        self.params_class = params_class

    def __call__(self, problem, params, seed: int):
        if not isinstance(params, self.params_class):
            raise TypeError(
                "{} expects {}, got {}".format(
                    self.name, self.params_class.__name__, type(params).__name__
                )
            )
        return self.func(problem, params, seed)

    def __str__(self) -> str:
        return "Algorithm(name={}, func={}, params_class={})".format(
            self.name, self.func.__name__, self.params_class.__name__
        )

    def __repr__(self) -> str:
        return str(self)


ALGORITHMS: Dict[str, Algorithm] = {}


def register(name: str, params_class: type) -> Callable:
    """A decorator adding a run function to :data:`ALGORITHMS`"""

    def decorator(func: Callable) -> Callable:
        if not callable(func):
            raise TypeError("func must be callable")
        ALGORITHMS[name] = Algorithm(name, func, params_class)
        func._algorithm = ALGORITHMS[name]
        return func

    return decorator


def get_algorithm(name: str) -> Algorithm:
    """Look up an algorithm by id (case-insensitive)

    Raises:
        :class:`~pydpso.exception.UnknownAlgorithmError`
    """

    try:
        return ALGORITHMS[name.upper()]
    except (KeyError, AttributeError):
        raise UnknownAlgorithmError(name) from None
