__all__ = [
    "ExperimentConfig",
    "ProblemConfig",
    "load_config",
    "parse_config",
    "dump_config",
    "log_overrides",
    "ExperimentResult",
    "run_experiment",
    "Suite",
    "SUITES",
    "build_suite",
    "collect_report",
    "render_report",
]


from .config import ExperimentConfig, ProblemConfig, load_config, parse_config, dump_config, log_overrides
from .experiment import ExperimentResult, run_experiment
from .suites import Suite, SUITES, build_suite
from .report import collect_report, render_report
