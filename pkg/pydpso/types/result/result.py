from typing import List, Optional, Sequence

from ujson import dumps

from ..genome import Genome


class GenerationRecord:
    """Trace entry of one generation

    Args:
        generation (``int``):
            1-based generation number

        best_of_generation (``float``):
            Lowest fitness evaluated in this generation (BOG)

        best_so_far (``float``):
            Lowest fitness seen since the run started

        population_mean (``float``):
            Mean fitness of the population after this generation

        elapsed_since_start (``float``):
            Wall-clock seconds since the run loop started
    """

    __slots__ = (
        "generation",
        "best_of_generation",
        "best_so_far",
        "population_mean",
        "elapsed_since_start",
    )

    def __init__(
        self,
        generation: int,
        best_of_generation: float,
        best_so_far: float,
        population_mean: float,
        elapsed_since_start: float,
    ) -> None:
        self.generation = generation
        self.best_of_generation = best_of_generation
        self.best_so_far = best_so_far
        self.population_mean = population_mean
        self.elapsed_since_start = elapsed_since_start

    def __repr__(self) -> str:
        return (
            "GenerationRecord(generation={}, best_of_generation={}, best_so_far={}, "
            "population_mean={}, elapsed_since_start={:.4f})".format(
                self.generation,
                self.best_of_generation,
                self.best_so_far,
                self.population_mean,
                self.elapsed_since_start,
            )
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, GenerationRecord):
            return NotImplemented
        return self.fitness_key() == other.fitness_key()

    def fitness_key(self) -> tuple:
        """Everything but the wall-clock field, for determinism checks"""
        return (
            self.generation,
            self.best_of_generation,
            self.best_so_far,
            self.population_mean,
        )

    def to_dict(self) -> dict:
        return {
            "generation": self.generation,
            "best_of_generation": self.best_of_generation,
            "best_so_far": self.best_so_far,
            "population_mean": self.population_mean,
            "elapsed_s": self.elapsed_since_start,
        }


class RunResult:
    """Outcome of one seeded run

    Args:
        records (``Sequence[GenerationRecord]``):
            One record per generation

        best_genome (:class:`~pydpso.types.Genome`):
            Best genome found. ``None`` only for a truncated view whose best is not the final one

        best_fitness (``float``):
            Fitness of ``best_genome``

        total_time (``float``):
            Wall-clock seconds of the whole run loop

        itr_best (``int``, *optional*):
            First generation whose best-so-far attained the problem's known best

        t_best (``float``, *optional*):
            Seconds elapsed at ``itr_best``

        evaluations (``int``, *optional*):
            Fitness evaluations spent. Defaults to ``0``

        seed (``int``, *optional*):
            Seed of the run's stream
    """

    def __init__(
        self,
        records: Sequence[GenerationRecord],
        best_genome: Optional[Genome],
        best_fitness: float,
        total_time: float,
        itr_best: int = None,
        t_best: float = None,
        evaluations: int = 0,
        seed: int = None,
    ) -> None:
        self.records: List[GenerationRecord] = list(records)
        self.best_genome = best_genome
        self.best_fitness = best_fitness
        self.total_time = total_time
        self.itr_best = itr_best
        self.t_best = t_best
        self.evaluations = evaluations
        self.seed = seed

    def __str__(self):
        return dumps(self.to_dict(), indent=4)

    def __len__(self) -> int:
        return len(self.records)

    @property
    def generations(self) -> int:
        return len(self.records)

    def bog_curve(self) -> List[float]:
        return [record.best_of_generation for record in self.records]

    def best_so_far_curve(self) -> List[float]:
        return [record.best_so_far for record in self.records]

    def truncate(self, generations: int) -> "RunResult":
        """View of the run as if it had stopped after ``generations`` generations

        Args:
            generations (``int``):
                Number of leading generations to keep

        Returns:
            :class:`RunResult`
        """

        if generations >= len(self.records):
            return self
        if generations < 1:
            raise ValueError("generations must be at least 1")

        records = self.records[:generations]
        best_fitness = records[-1].best_so_far
        attained = self.itr_best is not None and self.itr_best <= generations

        return RunResult(
            records,
            self.best_genome if best_fitness == self.best_fitness else None,
            best_fitness,
            records[-1].elapsed_since_start,
            itr_best=self.itr_best if attained else None,
            t_best=self.t_best if attained else None,
            evaluations=0,
            seed=self.seed,
        )

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "generations": len(self.records),
            "best_fitness": self.best_fitness,
            "best_genome": None if self.best_genome is None else str(self.best_genome),
            "itr_best": self.itr_best,
            "t_best": self.t_best,
            "total_time": self.total_time,
            "evaluations": self.evaluations,
        }
