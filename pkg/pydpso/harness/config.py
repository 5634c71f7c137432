import configparser
from dataclasses import dataclass, field, replace
from logging import getLogger
from pathlib import Path
from typing import Optional, Tuple, Union

from deepdiff import DeepDiff

from ..algorithms import get_algorithm
from ..exception import ConfigError, PydpsoError, UnknownAlgorithmError
from ..problems import make_problem
from ..types import ProblemInstance

logger = getLogger(__name__)

EXPERIMENT = "experiment"
PROBLEM = "problem"
ALGORITHM = "algorithm"

# key -> type of the [problem] section, per problem kind
PROBLEM_FIELDS = {
    "allocation": {
        "rows": int,
        "cols": int,
        "spacing": float,
        "quadrant_centers": bool,
        "instance": str,
        "name": str,
    },
    "benchmark": {
        "function": str,
        "bits_per_dim": int,
        "dimension": int,
        "name": str,
    },
}


@dataclass(frozen=True)
class ProblemConfig:
    """Problem part of an experiment

    Args:
        kind (``str``):
            ``allocation`` or ``benchmark``

        params (``dict``):
            Keyword arguments of :func:`~pydpso.problems.make_problem`
    """

    kind: str
    params: dict = field(default_factory=dict)

    def build(self) -> ProblemInstance:
        return make_problem(self.kind, **self.params)


@dataclass(frozen=True)
class ExperimentConfig:
    """A seeded multi-run campaign of one algorithm on one problem

    Args:
        algorithm (``str``):
            ``GA``, ``BA``, ``DPSO`` or ``OMPCDPSO``

        problem (:class:`ProblemConfig`):
            The problem to optimize

        params:
            The algorithm's parameter block; its ``iterations`` is the campaign's generation count

        runs (``int``, *optional*):
            Number of runs ``Q``. Defaults to ``20``

        base_seed (``int``, *optional*):
            Run ``q`` is seeded with ``base_seed + q``. Defaults to ``0``

        checkpoints (``tuple``, *optional*):
            Generation counts at which summaries are written. Defaults to the final generation

        output (``str``, *optional*):
            Output directory. Defaults to ``results``

        workers (``int``, *optional*):
            Runs executed concurrently. Defaults to ``1``
    """

    algorithm: str
    problem: ProblemConfig
    params: object
    runs: int = 20
    base_seed: int = 0
    checkpoints: Tuple[int, ...] = ()
    output: str = "results"
    workers: int = 1

    def __post_init__(self) -> None:
        algorithm = get_algorithm(self.algorithm)
        object.__setattr__(self, "algorithm", algorithm.name)

        if not isinstance(self.params, algorithm.params_class):
            raise TypeError(
                "{} expects {}".format(algorithm.name, algorithm.params_class.__name__)
            )
        elif self.runs < 1:
            raise ConfigError("must be at least 1", EXPERIMENT, "runs")
        elif self.workers < 1:
            raise ConfigError("must be at least 1", EXPERIMENT, "workers")

        checkpoints = tuple(self.checkpoints)
        if not checkpoints and self.iterations >= 1:
            checkpoints = (self.iterations,)
        if list(checkpoints) != sorted(set(checkpoints)):
            raise ConfigError("must be strictly increasing", EXPERIMENT, "checkpoints")
        for checkpoint in checkpoints:
            if not 1 <= checkpoint <= self.iterations:
                raise ConfigError(
                    "{} outside [1, {}]".format(checkpoint, self.iterations),
                    EXPERIMENT,
                    "checkpoints",
                )
        object.__setattr__(self, "checkpoints", checkpoints)

    @property
    def iterations(self) -> int:
        return self.params.iterations

    def seeds(self) -> range:
        return range(self.base_seed, self.base_seed + self.runs)

    def with_overrides(self, **changes) -> "ExperimentConfig":
        """Copy with experiment fields replaced; ``iterations`` is routed into the parameter block"""

        iterations = changes.pop("iterations", None)
        if iterations is not None:
            changes["params"] = replace(changes.get("params", self.params), iterations=iterations)
            if "checkpoints" not in changes:
                changes["checkpoints"] = tuple(c for c in self.checkpoints if c <= iterations)
        return replace(self, **changes)


class _Source:
    """The raw text of a config, for locating fields by line"""

    def __init__(self, text: str, name: str) -> None:
        self.lines = text.splitlines()
        self.name = name

    def line_of(self, section: str, key: str = None) -> Optional[int]:
        current = None
        for number, raw in enumerate(self.lines, 1):
            line = raw.strip()
            if line.startswith("[") and line.endswith("]"):
                current = line[1:-1].strip()
                if key is None and current == section:
                    return number
            elif current == section and key is not None:
                name = line.split("=", 1)[0].split(":", 1)[0].strip()
                if name == key:
                    return number
        return None

    def error(self, message: str, section: str, key: str = None) -> ConfigError:
        return ConfigError(message, section, key, self.line_of(section, key), self.name)


def _convert(value: str, kind: type, source: _Source, section: str, key: str):
    value = value.strip()
    try:
        if kind is bool:
            states = configparser.ConfigParser.BOOLEAN_STATES
            if value.lower() not in states:
                raise ValueError(value)
            return states[value.lower()]
        return kind(value)
    except ValueError:
        raise source.error(
            "expected {}, got {!r}".format(kind.__name__, value), section, key
        ) from None


def _format(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    elif isinstance(value, float):
        return repr(value)
    return str(value)


def _require(parser, source: _Source, section: str, key: str) -> str:
    if not parser.has_section(section):
        raise source.error("missing section", section)
    elif not parser.has_option(section, key):
        raise source.error("missing required field", section, key)
    return parser.get(section, key)


def _reject_unknown(parser, source: _Source, section: str, allowed) -> None:
    for key in parser.options(section):
        if key not in allowed:
            raise source.error("unknown field", section, key)


def _parse_experiment(parser, source: _Source) -> dict:
    allowed = ("algorithm", "runs", "iterations", "base_seed", "checkpoints", "output", "workers")
    if not parser.has_section(EXPERIMENT):
        raise source.error("missing section", EXPERIMENT)
    _reject_unknown(parser, source, EXPERIMENT, allowed)

    section = parser[EXPERIMENT]
    values = {
        "algorithm": _require(parser, source, EXPERIMENT, "algorithm").strip(),
        "iterations": _convert(
            _require(parser, source, EXPERIMENT, "iterations"), int, source, EXPERIMENT, "iterations"
        ),
    }
    for key, kind in (("runs", int), ("base_seed", int), ("workers", int), ("output", str)):
        if key in section:
            values[key] = _convert(section[key], kind, source, EXPERIMENT, key)

    if "checkpoints" in section:
        parts = [p for p in section["checkpoints"].replace(",", " ").split() if p]
        values["checkpoints"] = tuple(
            _convert(p, int, source, EXPERIMENT, "checkpoints") for p in parts
        )
    return values


def _parse_problem(parser, source: _Source) -> ProblemConfig:
    kind = _require(parser, source, PROBLEM, "kind").strip()
    if kind not in PROBLEM_FIELDS:
        raise source.error(
            "unknown kind {!r}, expected one of {}".format(kind, ", ".join(PROBLEM_FIELDS)),
            PROBLEM,
            "kind",
        )

    types = PROBLEM_FIELDS[kind]
    _reject_unknown(parser, source, PROBLEM, ("kind",) + tuple(types))

    params = {
        key: _convert(value, types[key], source, PROBLEM, key)
        for key, value in parser[PROBLEM].items()
        if key != "kind"
    }

    if kind == "allocation" and "instance" not in params:
        for key in ("rows", "cols"):
            if key not in params:
                raise source.error("missing required field (or give instance)", PROBLEM, key)
    elif kind == "benchmark" and "function" not in params:
        raise source.error("missing required field", PROBLEM, "function")

    return ProblemConfig(kind, params)


def _parse_params(parser, source: _Source, params_class: type, iterations: int):
    types = params_class.label_types()
    values = {"iterations": iterations}

    if parser.has_section(ALGORITHM):
        for key, value in parser[ALGORITHM].items():
            if key not in types or key == "iterations":
                raise source.error(
                    "not a parameter of {}".format(params_class.__name__), ALGORITHM, key
                )
            values[key] = _convert(value, types[key], source, ALGORITHM, key)

    try:
        return params_class.from_labels(values)
    except PydpsoError as e:
        raise source.error(str(e), ALGORITHM) from None


def log_overrides(params) -> None:
    """Log every parameter that differs from the block's defaults, one line per key"""

    defaults = type(params)(iterations=params.iterations).to_labels()
    deep = DeepDiff(defaults, params.to_labels(), view="tree")

    for diff in deep.get("values_changed", []):
        key = ".".join(str(v) for v in diff.path(output_format="list"))
        logger.info("{} changed to {}".format(key, diff.t2))


def parse_config(text: str, source: str = "<config>") -> ExperimentConfig:
    """Parse an INI experiment config

    Example:
        .. code-block:: ini

            [experiment]
            algorithm = OMPCDPSO
            runs = 20
            iterations = 400
            checkpoints = 100, 200, 300, 400

            [problem]
            kind = allocation
            rows = 20
            cols = 20

            [algorithm]
            Gbest = 20

    Raises:
        :class:`~pydpso.exception.ConfigError`, :class:`~pydpso.exception.UnknownAlgorithmError`
    """

    parser = configparser.ConfigParser(interpolation=None)
    parser.optionxform = str
    src = _Source(text, source)

    try:
        parser.read_string(text, source=source)
    except configparser.Error as e:
        raise ConfigError(
            getattr(e, "message", str(e)).splitlines()[0],
            getattr(e, "section", None),
            getattr(e, "option", None),
            getattr(e, "lineno", None),
            source,
        ) from None

    for section in parser.sections():
        if section not in (EXPERIMENT, PROBLEM, ALGORITHM):
            raise src.error("unknown section", section)

    experiment = _parse_experiment(parser, src)
    problem = _parse_problem(parser, src)

    try:
        algorithm = get_algorithm(experiment["algorithm"])
    except UnknownAlgorithmError as e:
        raise src.error(str(e), EXPERIMENT, "algorithm") from None

    params = _parse_params(parser, src, algorithm.params_class, experiment.pop("iterations"))
    experiment["algorithm"] = algorithm.name

    try:
        return ExperimentConfig(problem=problem, params=params, **experiment)
    except ConfigError as e:
        raise src.error(e.message, e.section, e.field) from None
    except PydpsoError as e:
        raise src.error(str(e), EXPERIMENT) from None


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    """Read and parse a config file

    Raises:
        :class:`~pydpso.exception.ConfigError`: Also when the file cannot be read
    """

    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ConfigError("cannot read config: {}".format(e.strerror), source=str(path)) from None

    return parse_config(text, str(path))


def dump_config(config: ExperimentConfig) -> str:
    """Serialize ``config`` so that :func:`parse_config` yields an equal config"""

    lines = ["[{}]".format(EXPERIMENT)]
    lines.append("algorithm = {}".format(config.algorithm))
    lines.append("runs = {}".format(config.runs))
    lines.append("iterations = {}".format(config.iterations))
    lines.append("base_seed = {}".format(config.base_seed))
    lines.append("checkpoints = {}".format(", ".join(str(c) for c in config.checkpoints)))
    lines.append("output = {}".format(config.output))
    lines.append("workers = {}".format(config.workers))

    lines.append("")
    lines.append("[{}]".format(PROBLEM))
    lines.append("kind = {}".format(config.problem.kind))
    for key, value in config.problem.params.items():
        lines.append("{} = {}".format(key, _format(value)))

    lines.append("")
    lines.append("[{}]".format(ALGORITHM))
    for label, value in config.params.to_labels().items():
        if label != "iterations":
            lines.append("{} = {}".format(label, _format(value)))

    return "\n".join(lines) + "\n"
