from dataclasses import asdict, dataclass, fields

from ...exception import InvalidParametersError


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidParametersError(message)


def _probability(name: str, value: float) -> None:
    _require(0.0 <= value <= 1.0, "{} must be in [0, 1], got {}".format(name, value))


class _Params:
    """Shared helpers of the parameter blocks"""

    # Attribute name -> label used in config files and result tables
    LABELS: dict = {}

    def to_dict(self) -> dict:
        return asdict(self)

    def to_labels(self) -> dict:
        """Parameters keyed by their config labels (``pop``, ``Wmax`` ...)"""
        return {self.LABELS[f.name]: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_labels(cls, values: dict):
        """Build the block from config labels, ignoring labels it does not own"""
        by_label = {label: name for name, label in cls.LABELS.items()}
        kwargs = {by_label[k]: v for k, v in values.items() if k in by_label}
        return cls(**kwargs)

    @classmethod
    def label_types(cls) -> dict:
        return {cls.LABELS[f.name]: f.type for f in fields(cls)}


@dataclass(frozen=True)
class DpsoParams(_Params):
    """Discrete PSO parameters (PAN update)

    Args:
        population (``int``):
            Number of particles. Defaults to ``100``

        iterations (``int``):
            Number of generations. Defaults to ``400``

        w_max (``float``), w_min (``float``):
            Inertia schedule endpoints. Default to ``0.9`` and ``0.4``

        c1 (``float``), c2 (``float``):
            Crossover probabilities toward the personal and global best. Default to ``0.5``
    """

    population: int = 100
    iterations: int = 400
    w_max: float = 0.9
    w_min: float = 0.4
    c1: float = 0.5
    c2: float = 0.5

    LABELS = {
        "population": "pop",
        "iterations": "iterations",
        "w_max": "Wmax",
        "w_min": "Wmin",
        "c1": "C1",
        "c2": "C2",
    }

    def __post_init__(self) -> None:
        _require(self.population >= 2, "population must be at least 2")
        _require(self.iterations >= 0, "iterations must be non-negative")
        _require(
            0.0 <= self.w_min <= self.w_max <= 1.0,
            "inertia must satisfy 0 <= Wmin <= Wmax <= 1",
        )
        _probability("C1", self.c1)
        _probability("C2", self.c2)


@dataclass(frozen=True)
class OmpcdpsoParams(DpsoParams):
    """OMPCDPSO parameters: DPSO plus the global-best pool

    Args:
        g_best_count (``int``):
            Size of the global-bests pool (Gbest). Defaults to ``20``

        onlookers_per_gbest (``int``):
            Onlookers sent to every pool member (Onl). Defaults to ``6``

        n_mpc (``int``):
            Children produced by multi-parent crossover per generation (NMPC). Defaults to ``20``

        neighborhood_max (``int``):
            Largest onlooker distance; distances cycle ``1..neighborhood_max``. Defaults to ``3``

        use_onlookers (``bool``), use_mpc (``bool``):
            Ablation switches for the two pool phases. Default to ``True``

        pool_feedback (``bool``):
            Write improved pool members back into the personal bests of the particles that
            supplied them, replacing a personal best only when strictly better. Defaults to ``False``
    """

    g_best_count: int = 20
    onlookers_per_gbest: int = 6
    n_mpc: int = 20
    neighborhood_max: int = 3
    use_onlookers: bool = True
    use_mpc: bool = True
    pool_feedback: bool = False

    LABELS = dict(
        DpsoParams.LABELS,
        g_best_count="Gbest",
        onlookers_per_gbest="Onl",
        n_mpc="NMPC",
        neighborhood_max="Nbhd",
        use_onlookers="UseOnlookers",
        use_mpc="UseMPC",
        pool_feedback="PoolFeedback",
    )

    def __post_init__(self) -> None:
        super().__post_init__()
        _require(
            1 <= self.g_best_count <= self.population,
            "Gbest must be between 1 and pop",
        )
        _require(self.onlookers_per_gbest >= 1, "Onl must be at least 1")
        _require(self.n_mpc >= 1, "NMPC must be at least 1")
        _require(self.neighborhood_max >= 1, "Nbhd must be at least 1")

    def evaluations_per_generation(self, searchable: bool = True) -> int:
        """Fitness evaluations of one generation

        Args:
            searchable (``bool``, *optional*):
                Whether the problem has a mutable position. Onlookers are not sent otherwise
        """

        onlookers = self.use_onlookers and searchable
        return (
            self.population
            + self.g_best_count * self.onlookers_per_gbest * int(onlookers)
            + self.n_mpc * int(self.use_mpc)
        )


@dataclass(frozen=True)
class GaParams(_Params):
    """Generational GA parameters

    Args:
        population (``int``), iterations (``int``):
            Population size and generations. Default to ``100`` and ``400``

        pc (``float``):
            Crossover probability per pair. Defaults to ``0.8``

        pm (``float``):
            Mutation probability per child. Defaults to ``0.25``

        elite_count (``int``):
            Best individuals copied unchanged. Defaults to ``10``
    """

    population: int = 100
    iterations: int = 400
    pc: float = 0.8
    pm: float = 0.25
    elite_count: int = 10

    LABELS = {
        "population": "pop",
        "iterations": "iterations",
        "pc": "Pc",
        "pm": "Pm",
        "elite_count": "Elit",
    }

    def __post_init__(self) -> None:
        _require(self.population >= 2, "population must be at least 2")
        _require(self.iterations >= 0, "iterations must be non-negative")
        _probability("Pc", self.pc)
        _probability("Pm", self.pm)
        _require(
            0 <= self.elite_count <= self.population,
            "Elit must be between 0 and pop",
        )


@dataclass(frozen=True)
class BaParams(_Params):
    """Bees Algorithm parameters

    Args:
        population (``int``), iterations (``int``):
            Population size and generations. Default to ``100`` and ``400``

        employed (``int``):
            Number of best sites searched by onlookers (Emp). Defaults to ``50``

        onlookers (``int``):
            Onlookers per site (Onl). Defaults to ``6``

        scouts (``int``):
            Worst members replaced at random every generation (Sco). Defaults to ``50``

        neighborhood_max (``int``):
            Largest onlooker distance. Defaults to ``3``
    """

    population: int = 100
    iterations: int = 400
    employed: int = 50
    onlookers: int = 6
    scouts: int = 50
    neighborhood_max: int = 3

    LABELS = {
        "population": "pop",
        "iterations": "iterations",
        "employed": "Emp",
        "onlookers": "Onl",
        "scouts": "Sco",
        "neighborhood_max": "Nbhd",
    }

    def __post_init__(self) -> None:
        _require(self.population >= 2, "population must be at least 2")
        _require(self.iterations >= 0, "iterations must be non-negative")
        _require(self.employed >= 0 and self.scouts >= 0, "Emp and Sco must be non-negative")
        _require(
            self.employed + self.scouts <= self.population,
            "Emp + Sco must not exceed pop",
        )
        _require(self.onlookers >= 0, "Onl must be non-negative")
        _require(self.neighborhood_max >= 1, "Nbhd must be at least 1")
