__all__ = [
    "Scored",
    "RunTracker",
    "pbest_update",
    "best_of",
    "ranked",
    "dpso_particle_update",
    "run_dpso",
    "select_global_bests",
    "onlooker_phase",
    "mpc_phase",
    "run_ompcdpso",
    "run_ga",
    "run_ba",
    "Algorithm",
    "ALGORITHMS",
    "register",
    "get_algorithm",
]


from .registry import Algorithm, ALGORITHMS, register, get_algorithm
from .base import Scored, RunTracker, pbest_update, best_of, ranked
from .dpso import dpso_particle_update, run_dpso
from .ompcdpso import select_global_bests, onlooker_phase, mpc_phase, run_ompcdpso
from .ga import run_ga
from .ba import run_ba
