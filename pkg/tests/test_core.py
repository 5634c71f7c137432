import numpy as np
import pytest

from pydpso.core import hamming, random_genome
from pydpso.exception import IncompatibleGenomesError, InvalidGenomeError, InvalidParametersError
from pydpso.types import (
    DpsoParams,
    GaParams,
    GenerationRecord,
    Genome,
    OmpcdpsoParams,
    ProblemInstance,
    RngStream,
    RunResult,
)


def constant_problem(arity):
    return ProblemInstance("constant", arity, lambda genome, rng=None: 0.0)


def test_genome_is_immutable():
    genome = Genome([0, 1, 2])
    with pytest.raises(ValueError):
        genome.genes[0] = 5
    assert list(genome) == [0, 1, 2]
    assert len(genome) == 3


def test_genome_rejects_negative_genes():
    with pytest.raises(InvalidGenomeError):
        Genome([0, -1])


def test_genome_check_against_arity():
    Genome([0, 3, 1]).check([4, 4, 2])
    with pytest.raises(InvalidGenomeError):
        Genome([0, 4, 1]).check([4, 4, 2])
    with pytest.raises(InvalidGenomeError):
        Genome([0, 1]).check([4, 4, 2])


def test_genome_labels_are_one_based():
    genome = Genome([0, 1, 0])
    assert genome.to_labels() == "1,2,1"
    assert Genome.from_labels("1,2,1") == genome
    assert Genome([1, 0, 1]).to_bitstring() == "101"
    assert Genome.from_bitstring("101") == Genome([1, 0, 1])

    with pytest.raises(InvalidGenomeError):
        Genome([2, 0]).to_bitstring()
    with pytest.raises(InvalidGenomeError):
        Genome.from_labels("0,1")


def test_genome_equality_and_hash():
    assert Genome([1, 2]) == Genome(np.array([1, 2]))
    assert len({Genome([1, 2]), Genome([1, 2]), Genome([2, 1])}) == 2


def test_hamming():
    assert hamming(Genome([0, 1, 2, 3]), Genome([0, 1, 2, 3])) == 0
    assert hamming(Genome([0, 1, 2, 3]), Genome([1, 1, 0, 3])) == 2
    with pytest.raises(IncompatibleGenomesError):
        hamming(Genome([0, 1]), Genome([0, 1, 2]))


def test_rng_stream_is_reproducible():
    a, b = RngStream(42), RngStream(42)
    assert [a.random() for _ in range(5)] == [b.random() for _ in range(5)]
    assert a.integer(3, 9) == b.integer(3, 9)
    assert a.permutation(10) == b.permutation(10)


def test_rng_stream_ranges():
    rng = RngStream(7)
    draws = {rng.integer(1, 3) for _ in range(200)}
    assert draws == {1, 2, 3}

    sample = rng.sample(10, 4)
    assert len(set(sample)) == 4
    assert all(0 <= i < 10 for i in sample)
    assert sorted(rng.permutation(6)) == list(range(6))
    assert sorted(rng.shuffle(["a", "b", "c"])) == ["a", "b", "c"]

    with pytest.raises(ValueError):
        rng.integer(3, 2)
    with pytest.raises(TypeError):
        RngStream("seed")


def test_rng_stream_long_sequences_match():
    def draws(stream):
        return [
            (
                stream.random(),
                stream.integer(0, 9),
                tuple(stream.sample(8, 3)),
                tuple(stream.shuffle(list(range(5)))),
                tuple(stream.permutation(5)),
            )
            for _ in range(1000)
        ]

    assert draws(RngStream(2024)) == draws(RngStream(2024))


def test_random_genome_respects_arity():
    problem = constant_problem([1, 2, 5, 3])
    rng = RngStream(0)
    for _ in range(100):
        genome = random_genome(problem, rng)
        genome.check(problem.arity)
        assert genome[0] == 0


def test_random_genome_symbols_are_uniform():
    problem = constant_problem([4])
    rng = RngStream(1)
    counts = np.bincount([random_genome(problem, rng)[0] for _ in range(20000)], minlength=4)
    assert all(0.23 <= c / 20000 <= 0.27 for c in counts)


def test_hamming_is_a_metric():
    rng = RngStream(3)
    problem = constant_problem([3] * 12)
    for _ in range(200):
        a, b, c = (random_genome(problem, rng) for _ in range(3))
        assert hamming(a, b) == hamming(b, a)
        assert hamming(a, c) <= hamming(a, b) + hamming(b, c)


def test_problem_instance_validation():
    with pytest.raises(InvalidParametersError):
        constant_problem([])
    with pytest.raises(InvalidParametersError):
        constant_problem([2, 0])
    with pytest.raises(InvalidParametersError):
        ProblemInstance("p", [2], lambda g, r=None: 0.0, bounds=(5.0, 5.0))

    problem = constant_problem([1, 3, 1, 2])
    assert problem.dimension == 4
    assert problem.mutable_positions.tolist() == [1, 3]


def test_problem_reached_tolerance():
    problem = ProblemInstance("p", [2], lambda g, r=None: 0.0, known_best=1000.0)
    assert problem.reached(1000.0 + 1e-7)
    assert not problem.reached(1000.0 + 1e-5)
    assert not constant_problem([2]).reached(0.0)


def test_generation_record_equality_ignores_time():
    a = GenerationRecord(1, 3.0, 2.0, 5.0, 0.1)
    b = GenerationRecord(1, 3.0, 2.0, 5.0, 9.9)
    assert a == b
    assert a.to_dict()["elapsed_s"] == 0.1


def test_run_result_truncate():
    records = [
        GenerationRecord(1, 9.0, 9.0, 12.0, 0.1),
        GenerationRecord(2, 7.0, 7.0, 10.0, 0.2),
        GenerationRecord(3, 8.0, 5.0, 9.0, 0.3),
    ]
    run = RunResult(records, Genome([0]), 5.0, 0.35, itr_best=3, t_best=0.3, evaluations=40, seed=1)

    cut = run.truncate(2)
    assert cut.generations == 2
    assert cut.best_fitness == 7.0
    assert cut.best_genome is None
    assert cut.itr_best is None and cut.t_best is None
    assert cut.total_time == 0.2
    assert run.truncate(3) is run
    assert run.bog_curve() == [9.0, 7.0, 8.0]
    assert run.best_so_far_curve() == [9.0, 7.0, 5.0]


def test_params_defaults_follow_the_parameter_table():
    params = OmpcdpsoParams()
    assert params.population == 100
    assert (params.w_max, params.w_min, params.c1, params.c2) == (0.9, 0.4, 0.5, 0.5)
    assert (params.g_best_count, params.onlookers_per_gbest, params.n_mpc) == (20, 6, 20)
    assert params.evaluations_per_generation() == 100 + 20 * 6 + 20

    ga = GaParams()
    assert (ga.pc, ga.pm, ga.elite_count) == (0.8, 0.25, 10)


def test_params_ablation_changes_evaluation_budget():
    assert OmpcdpsoParams(use_onlookers=False).evaluations_per_generation() == 120
    assert OmpcdpsoParams(use_mpc=False).evaluations_per_generation() == 220
    assert OmpcdpsoParams(use_mpc=False, use_onlookers=False).evaluations_per_generation() == 100


@pytest.mark.parametrize(
    "factory",
    [
        lambda: DpsoParams(population=1),
        lambda: DpsoParams(w_min=0.9, w_max=0.4),
        lambda: DpsoParams(c1=1.5),
        lambda: OmpcdpsoParams(population=10, g_best_count=11),
        lambda: OmpcdpsoParams(n_mpc=0),
        lambda: GaParams(population=10, elite_count=11),
    ],
)
def test_params_validation(factory):
    with pytest.raises(InvalidParametersError):
        factory()


def test_pool_feedback_is_off_by_default():
    assert OmpcdpsoParams().pool_feedback is False


def test_evaluation_budget_without_mutable_positions():
    params = OmpcdpsoParams()
    assert params.evaluations_per_generation(False) == 120
    assert params.evaluations_per_generation(False) == OmpcdpsoParams(use_onlookers=False).evaluations_per_generation()


def test_params_labels_round_trip():
    params = OmpcdpsoParams(population=30, g_best_count=8, onlookers_per_gbest=10, n_mpc=10)
    labels = params.to_labels()
    assert labels["pop"] == 30
    assert labels["Gbest"] == 8
    assert OmpcdpsoParams.from_labels(labels) == params
