from . import types, core, problems, operators, algorithms, metrics, harness, utils, exception
from .algorithms import get_algorithm, ALGORITHMS
from .problems import make_problem

__version__ = "0.1.0"
__copyright__ = "Copyright (c) 2026 Pydpso contributors"
__license__ = "MIT License"

VERSION = __version__
