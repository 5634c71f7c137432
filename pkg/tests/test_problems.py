import itertools
import math

import numpy as np
import pytest

from pydpso.exception import (
    InvalidGenomeError,
    InvalidParametersError,
    UnknownProblemError,
)
from pydpso.problems import (
    BENCHMARKS,
    AllocationInstance,
    BinaryCodec,
    allocation_fitness,
    allocation_oracle,
    allocation_worst,
    decode,
    encode,
    eval_benchmark,
    generate_grid_instance,
    get_benchmark,
    make_problem,
    read_instance,
    write_instance,
)
from pydpso.problems.benchmarks import _DA_X2
from pydpso.types import Genome, RngStream


def test_grid_instance_layout():
    instance = generate_grid_instance(20, 20, spacing=1.0, quadrant_centers=True)
    assert instance.n_demands == 400
    assert instance.n_centers == 4
    assert instance.dist.shape == (400, 4)
    assert tuple(instance.demands[21]) == (1.0, 1.0)
    assert sorted(map(tuple, instance.centers)) == [(4.5, 4.5), (4.5, 14.5), (14.5, 4.5), (14.5, 14.5)]


def test_large_grid_instance():
    instance = generate_grid_instance(60, 60, quadrant_centers=True)
    assert instance.n_demands == 3600
    assert instance.n_centers == 4


def test_grid_instance_rejects_odd_quadrants():
    with pytest.raises(InvalidParametersError):
        generate_grid_instance(5, 4, quadrant_centers=True)
    with pytest.raises(InvalidParametersError):
        generate_grid_instance(1, 4)


def test_single_center_grid():
    instance = generate_grid_instance(3, 3, spacing=2.0, quadrant_centers=False)
    assert instance.n_centers == 1
    assert tuple(instance.centers[0]) == (2.0, 2.0)


def test_allocation_fitness_sums_assigned_distances():
    instance = AllocationInstance(centers=[(0.0, 0.0), (10.0, 0.0)], demands=[(3.0, 4.0), (10.0, 1.0)])
    assert allocation_fitness(instance, Genome([0, 1])) == pytest.approx(6.0)
    assert allocation_fitness(instance, Genome([1, 0])) == pytest.approx(
        math.hypot(7.0, 4.0) + math.hypot(10.0, 1.0)
    )


def test_oracle_matches_exhaustive_enumeration():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        m = int(rng.integers(1, 7))
        n = int(rng.integers(1, 4))
        instance = AllocationInstance(rng.uniform(0, 10, (n, 2)), rng.uniform(0, 10, (m, 2)))

        genome, fitness = allocation_oracle(instance)
        exhaustive = min(
            allocation_fitness(instance, Genome(genes))
            for genes in itertools.product(range(n), repeat=m)
        )
        assert fitness == exhaustive
        assert allocation_fitness(instance, genome) == fitness


def test_worst_is_an_upper_bound():
    instance = generate_grid_instance(4, 4)
    rng = RngStream(3)
    worst = allocation_worst(instance)
    _, best = allocation_oracle(instance)
    for _ in range(50):
        genes = rng.generator.integers(0, 4, size=16)
        assert best <= allocation_fitness(instance, Genome(genes)) <= worst


def test_instance_file_round_trip(tmp_path):
    instance = generate_grid_instance(4, 6, spacing=0.1)
    path = write_instance(instance, tmp_path / "grid.txt")

    lines = path.read_text().splitlines()
    assert lines[0] == "24 4"
    assert len(lines) == 1 + 4 + 24

    loaded = read_instance(path)
    assert np.array_equal(loaded.centers, instance.centers)
    assert np.array_equal(loaded.demands, instance.demands)


def test_read_instance_rejects_truncated_file(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("3 1\n0 0\n1 1\n")
    with pytest.raises(InvalidParametersError):
        read_instance(path)


def test_allocation_problem_bounds_and_oracle():
    problem = make_problem("allocation", rows=4, cols=4)
    min_t, max_t = problem.bounds
    assert problem.known_best == min_t
    assert min_t < max_t
    assert problem.dimension == 16
    assert problem.arity.tolist() == [4] * 16
    oracle = problem.metadata["oracle_genome"]
    assert problem.evaluate(oracle) == problem.known_best


def test_allocation_problem_from_file(tmp_path):
    path = write_instance(generate_grid_instance(2, 2), tmp_path / "g.txt")
    problem = make_problem("allocation", instance=str(path))
    assert problem.dimension == 4


def test_unknown_problem_kind():
    with pytest.raises(UnknownProblemError):
        make_problem("tsp")
    with pytest.raises(UnknownProblemError):
        get_benchmark("NOPE")


def test_codec_endpoints():
    codec = BinaryCodec(4, 2, -5.0, 5.0)
    assert codec.length == 8
    x = decode(codec, Genome.from_bitstring("00001111"))
    assert x.tolist() == [-5.0, 5.0]


def test_codec_is_msb_first():
    codec = BinaryCodec(3, 1, 0.0, 7.0)
    assert decode(codec, Genome.from_bitstring("100")).tolist() == [4.0]
    assert decode(codec, Genome.from_bitstring("001")).tolist() == [1.0]


def test_codec_encode_hits_the_grid():
    codec = BinaryCodec(20, 2, -2.0, 2.0)
    genome = encode(codec, [0.0, -1.0])
    x = decode(codec, genome)
    step = 4.0 / codec.levels
    assert abs(x[0]) <= step / 2
    assert abs(x[1] + 1.0) <= step / 2


def test_codec_grid_points_survive_encoding():
    codec = BinaryCodec(12, 3, [-5.0, 0.0, -600.0], [5.0, 1.0, 600.0])
    rng = RngStream(4)
    for _ in range(500):
        i = rng.generator.integers(0, codec.levels + 1, size=3)
        x = codec.lower + i * (codec.upper - codec.lower) / codec.levels
        back = decode(codec, encode(codec, x))
        assert np.allclose(back, x, rtol=1e-12, atol=1e-12)


def test_codec_rejects_bad_genomes():
    codec = BinaryCodec(4, 2, 0.0, 1.0)
    with pytest.raises(InvalidGenomeError):
        decode(codec, Genome([0] * 7))
    with pytest.raises(InvalidGenomeError):
        decode(codec, Genome([0, 2, 0, 0, 0, 0, 0, 0]))
    with pytest.raises(InvalidParametersError):
        BinaryCodec(1, 2, 0.0, 1.0)


EXACT = {"BL", "BF1", "BF2", "CB3", "CM", "EP", "GP", "SF1", "SF2"}


@pytest.mark.parametrize(
    "spec",
    [s for s in BENCHMARKS.values() if s.known_best_value is not None and s.known_best_points],
    ids=lambda s: s.id,
)
def test_benchmark_optima(spec):
    rng = RngStream(0)
    tolerance = 1e-9 if spec.id in EXACT or spec.scalable else 1e-3
    for point in spec.known_best_points:
        if spec.stochastic:
            value = eval_benchmark(spec, point, rng)
            assert spec.known_best_value <= value < spec.known_best_value + 1.0
        else:
            assert eval_benchmark(spec, point) == pytest.approx(spec.known_best_value, abs=tolerance)


@pytest.mark.parametrize("id", ["SPHERE", "RASTRIGIN", "ACKLEY", "GRIEWANK"])
def test_benchmark_origin(id):
    spec = get_benchmark(id)
    assert spec.dimension == 30
    assert abs(eval_benchmark(spec, np.zeros(30))) <= 1e-12


def test_becker_lago_has_four_optima():
    for x in itertools.product((-5.0, 5.0), repeat=2):
        assert eval_benchmark("BL", x) == 0.0


def test_six_hump_camel_back_optima_are_symmetric():
    first, second = get_benchmark("CB6").known_best_points
    assert eval_benchmark("CB6", first) == eval_benchmark("CB6", second)
    assert eval_benchmark("CB6", first) == pytest.approx(-1.031628453489877, abs=1e-9)


def test_dekkers_aarts_optimum():
    assert _DA_X2 == pytest.approx(14.945, abs=1e-3)
    assert eval_benchmark("DA", [0.0, _DA_X2]) == pytest.approx(-24776.5183, abs=1e-3)
    assert eval_benchmark("DA", [0.0, 15.0]) == pytest.approx(-24771.09375)


def test_scalable_benchmarks_change_dimension():
    spec = get_benchmark("SPHERE", 5)
    assert spec.dimension == 5
    assert eval_benchmark(spec, np.ones(5)) == 5.0
    with pytest.raises(InvalidParametersError):
        get_benchmark("GP", 3)


def test_quartic_noise_needs_rng():
    with pytest.raises(InvalidParametersError):
        eval_benchmark("QUARTICNOISE", np.zeros(30))


def test_eval_benchmark_checks_dimension():
    with pytest.raises(InvalidParametersError):
        eval_benchmark(get_benchmark("GP"), [0.0, 1.0, 2.0])


def test_benchmark_problem():
    problem = make_problem("benchmark", function="GP", bits_per_dim=20)
    assert problem.dimension == 40
    assert problem.arity.tolist() == [2] * 40
    assert problem.known_best == 3.0
    assert problem.bounds is None

    codec = problem.metadata["codec"]
    assert problem.evaluate(encode(codec, [0.0, -1.0])) == pytest.approx(3.0, abs=1e-6)
