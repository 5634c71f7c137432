from dataclasses import asdict, dataclass
from typing import Optional


@dataclass(frozen=True)
class SummaryTable:
    """Aggregate of ``q_runs`` runs truncated at ``g_generations``

    Optional fields are ``None`` where the result table shows a dash.
    """

    best: float
    avg_best: float
    std_dev: float
    avg_bog: float
    best_acc: Optional[float]
    avg_acc: Optional[float]
    avg_area: float
    itr_best: Optional[int]
    t_best: Optional[float]
    avg_t_best: Optional[float]
    avg_t_run: float
    q_runs: int
    g_generations: int

    def __post_init__(self) -> None:
        if self.std_dev < 0:
            raise ValueError("std_dev must be non-negative")
        for name in ("best_acc", "avg_acc"):
            value = getattr(self, name)
            if value is not None and not 0.0 <= value <= 1.0:
                raise ValueError("{} must be in [0, 1], got {}".format(name, value))

    def to_dict(self) -> dict:
        return asdict(self)
