import csv
import logging

import pytest
from ujson import loads

from pydpso.exception import ConfigError, UnknownAlgorithmError, UnknownProblemError
from pydpso.harness import (
    ExperimentConfig,
    ProblemConfig,
    build_suite,
    collect_report,
    dump_config,
    log_overrides,
    parse_config,
    render_report,
    run_experiment,
)
from pydpso.harness.suites import SUITES
from pydpso.types import DpsoParams, GaParams, OmpcdpsoParams

CONFIG = """\
[experiment]
algorithm = dpso
runs = 2
iterations = 6
checkpoints = 3, 6

[problem]
kind = allocation
rows = 4
cols = 4

[algorithm]
pop = 6
Wmax = 0.8
"""


def small_config(tmp_path, algorithm="DPSO", params=None, **changes):
    return ExperimentConfig(
        algorithm,
        ProblemConfig("allocation", {"rows": 4, "cols": 4}),
        params or DpsoParams(population=6, iterations=6),
        runs=2,
        checkpoints=(3, 6),
        output=str(tmp_path / "out"),
        **changes
    )


def read_trace(path):
    with open(path, newline="") as f:
        return [row[:-1] for row in csv.reader(f)]


def test_parse_config():
    config = parse_config(CONFIG)
    assert config.algorithm == "DPSO"
    assert config.runs == 2
    assert config.iterations == 6
    assert config.checkpoints == (3, 6)
    assert config.params == DpsoParams(population=6, iterations=6, w_max=0.8)
    assert config.problem == ProblemConfig("allocation", {"rows": 4, "cols": 4})
    assert list(config.seeds()) == [0, 1]


def test_dump_config_round_trips():
    config = parse_config(CONFIG)
    assert parse_config(dump_config(config)) == config

    ompcdpso = ExperimentConfig(
        "OMPCDPSO",
        ProblemConfig("benchmark", {"function": "GP", "bits_per_dim": 16}),
        OmpcdpsoParams(population=12, iterations=4, g_best_count=3, n_mpc=4, use_mpc=False),
        runs=3,
        base_seed=10,
    )
    assert parse_config(dump_config(ompcdpso)) == ompcdpso


def test_checkpoints_default_to_last_generation():
    config = parse_config(CONFIG.replace("checkpoints = 3, 6\n", ""))
    assert config.checkpoints == (6,)


@pytest.mark.parametrize(
    "old, new, section, field, line",
    [
        ("iterations = 6\n", "", "experiment", "iterations", None),
        ("runs = 2", "runs = many", "experiment", "runs", 3),
        ("Wmax = 0.8", "Wmax = 0.8\nFoo = 1", "algorithm", "Foo", 15),
        ("rows = 4", "rows = 4\nfunction = GP", "problem", "function", 10),
        ("checkpoints = 3, 6", "checkpoints = 6, 3", "experiment", "checkpoints", 5),
        ("kind = allocation", "kind = tsp", "problem", "kind", 8),
    ],
)
def test_config_errors_locate_the_field(old, new, section, field, line):
    with pytest.raises(ConfigError) as info:
        parse_config(CONFIG.replace(old, new), "exp.ini")

    error = info.value
    assert error.section == section
    assert error.field == field
    assert error.line == line
    assert str(error).startswith("exp.ini:")


def test_config_rejects_unknown_algorithm_and_sections():
    with pytest.raises(ConfigError) as info:
        parse_config(CONFIG.replace("algorithm = dpso", "algorithm = ACO"))
    assert info.value.field == "algorithm"
    assert info.value.line == 2

    with pytest.raises(ConfigError):
        parse_config(CONFIG + "\n[extra]\nx = 1\n")
    with pytest.raises(ConfigError):
        parse_config("[problem]\nkind = allocation\n")


def test_config_rejects_invalid_parameter_values():
    with pytest.raises(ConfigError) as info:
        parse_config(CONFIG.replace("pop = 6", "pop = 1"))
    assert info.value.section == "algorithm"


def test_log_overrides(caplog):
    caplog.set_level(logging.INFO, logger="pydpso.harness.config")
    log_overrides(DpsoParams(iterations=6, w_max=0.8, c1=0.3))
    messages = [r.getMessage() for r in caplog.records]
    assert "Wmax changed to 0.8" in messages
    assert "C1 changed to 0.3" in messages
    assert len(messages) == 2


def test_with_overrides_routes_iterations():
    config = parse_config(CONFIG)
    shorter = config.with_overrides(iterations=4, runs=5)
    assert shorter.iterations == shorter.params.iterations == 4
    assert shorter.checkpoints == (3,)
    assert shorter.runs == 5

    assert config.with_overrides(iterations=2).checkpoints == (2,)


def test_run_experiment_writes_artifacts(tmp_path):
    config = small_config(tmp_path)
    result = run_experiment(config)

    out = tmp_path / "out"
    names = sorted(p.name for p in out.iterdir())
    assert names == sorted(
        ["trace_0.csv", "trace_1.csv", "best_0.txt", "best_1.txt", "curves.csv", "run.json"]
        + ["summary_3.csv", "summary_3.txt", "summary_6.csv", "summary_6.txt"]
    )
    assert len(result.files) == 10
    assert [run.seed for run in result.runs] == [0, 1]

    trace = read_trace(out / "trace_0.csv")
    assert trace[0] == ["generation", "best_of_generation", "best_so_far", "population_mean"]
    assert len(trace) == 7

    labels = (out / "best_0.txt").read_text().strip().split(",")
    assert len(labels) == 16 and all(1 <= int(v) <= 4 for v in labels)

    manifest = loads((out / "run.json").read_text())
    assert manifest["algorithm"] == "DPSO"
    assert manifest["params"]["pop"] == 6
    assert manifest["seeds"] == [0, 1]
    assert parse_config(manifest["config"]) == config

    assert set(result.summaries) == {3, 6}
    assert result.summaries[6].q_runs == 2


def test_run_experiment_is_deterministic(tmp_path):
    first = run_experiment(small_config(tmp_path / "a"))
    second = run_experiment(small_config(tmp_path / "b", workers=2))

    for q in range(2):
        assert read_trace(tmp_path / "a" / "out" / "trace_{}.csv".format(q)) == read_trace(
            tmp_path / "b" / "out" / "trace_{}.csv".format(q)
        )
    assert [r.best_fitness for r in first.runs] == [r.best_fitness for r in second.runs]


def test_run_experiment_fails_before_writing(tmp_path):
    config = ExperimentConfig(
        "GA",
        ProblemConfig("benchmark", {"function": "NOPE"}),
        GaParams(population=4, iterations=2, elite_count=1),
        output=str(tmp_path / "out"),
    )
    with pytest.raises(UnknownProblemError):
        run_experiment(config)
    assert not (tmp_path / "out").exists()


def test_run_experiment_rejects_unbuildable_problem(tmp_path):
    config = ExperimentConfig(
        "DPSO",
        ProblemConfig("allocation", {"rows": 5, "cols": 4}),
        DpsoParams(population=6, iterations=6),
        output=str(tmp_path / "out"),
    )
    with pytest.raises(ConfigError) as e:
        run_experiment(config)
    assert e.value.section == "problem"
    assert not (tmp_path / "out").exists()


def test_build_suite():
    configs = build_suite("funcs-2d", output="res", runs=2, iterations=10)
    assert len(configs) == 14 * 4
    assert {c.algorithm for c in configs} == {"GA", "BA", "DPSO", "OMPCDPSO"}
    assert all(c.runs == 2 and c.iterations == 10 and c.checkpoints == (10,) for c in configs)
    assert configs[0].output.replace("\\", "/") == "res/AP-2D/GA"

    small = build_suite("alloc-small", iterations=250, algorithms=["ompcdpso"])
    assert len(small) == 1
    assert small[0].checkpoints == (100, 200)
    assert small[0].runs == SUITES["alloc-small"].runs

    wide = build_suite("funcs-30d", functions=["sphere"])
    assert len(wide) == 4
    assert wide[0].problem.params["dimension"] == 30
    assert {c.params.population for c in wide} == {30}

    with pytest.raises(KeyError):
        build_suite("nope")
    with pytest.raises(UnknownProblemError):
        build_suite("funcs-2d", functions=["SPHERE"])
    with pytest.raises(UnknownAlgorithmError):
        build_suite("funcs-2d", algorithms=["ACO"])


def test_report_reads_back_summaries(tmp_path):
    run_experiment(small_config(tmp_path / "res" / "DPSO"))
    run_experiment(
        small_config(
            tmp_path / "res" / "GA",
            algorithm="GA",
            params=GaParams(population=6, iterations=6, elite_count=1),
        )
    )

    report = collect_report([tmp_path / "res"])
    (problem,) = report
    assert set(report[problem]) == {"DPSO", "GA"}
    assert report[problem]["GA"]["checkpoint"] == 6
    assert set(report[problem]["GA"]) == {"Best", "Mean", "Std", "AvgTime", "checkpoint"}

    early = collect_report([tmp_path / "res"], checkpoint=3)
    assert early[problem]["DPSO"]["checkpoint"] == 3

    text = render_report(report)
    lines = text.splitlines()
    assert lines[0] == problem
    assert lines[1].split() == ["Algorithm", "Best", "Mean", "Std", "AvgTime"]
    assert [line.split()[0] for line in lines[3:]] == ["GA", "DPSO"]

    rows = list(csv.reader(render_report(report, "csv").splitlines()))
    assert rows[0] == ["problem", "algorithm", "Best", "Mean", "Std", "AvgTime"]
    assert len(rows) == 3

    assert loads(render_report(report, "json"))[problem]["GA"]["checkpoint"] == 6
    with pytest.raises(ValueError):
        render_report(report, "xml")


def test_report_without_experiments(tmp_path):
    with pytest.raises(FileNotFoundError):
        collect_report([tmp_path])
