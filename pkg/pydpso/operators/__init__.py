__all__ = [
    "inertia",
    "mutate_one",
    "mutable_positions",
    "single_point_crossover",
    "multi_parent_crossover",
    "segment_bounds",
    "onlooker_neighbor",
    "onlooker_distances",
]


from .inertia import inertia
from .mutation import mutate_one, mutable_positions
from .crossover import single_point_crossover, multi_parent_crossover, segment_bounds
from .neighborhood import onlooker_neighbor, onlooker_distances
