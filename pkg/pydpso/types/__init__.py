__all__ = [
    "Genome",
    "ProblemInstance",
    "Evaluator",
    "RngStream",
    "GenerationRecord",
    "RunResult",
    "DpsoParams",
    "OmpcdpsoParams",
    "GaParams",
    "BaParams",
    "SummaryTable",
]


from .genome import Genome
from .rng import RngStream
from .problem import ProblemInstance, Evaluator
from .result import GenerationRecord, RunResult
from .params import DpsoParams, OmpcdpsoParams, GaParams, BaParams
from .summary import SummaryTable
