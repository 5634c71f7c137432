import numpy as np
import pytest

from pydpso.core import hamming
from pydpso.exception import IncompatibleGenomesError, InvalidParametersError
from pydpso.operators import (
    inertia,
    multi_parent_crossover,
    mutate_one,
    onlooker_distances,
    onlooker_neighbor,
    segment_bounds,
    single_point_crossover,
)
from pydpso.types import Genome, RngStream

CASES = 10_000


def random_genome(rng: RngStream, arity) -> Genome:
    return Genome(rng.generator.integers(0, arity))


def random_arity(rng: RngStream, m: int) -> np.ndarray:
    return rng.generator.integers(2, 6, size=m)


def test_inertia_endpoints_and_monotonicity():
    assert inertia(0, 400, 0.9, 0.4) == 0.9
    assert inertia(400, 400, 0.9, 0.4) == pytest.approx(0.4)
    assert inertia(200, 400, 0.9, 0.4) == pytest.approx(0.65)

    values = [inertia(t, 400, 0.9, 0.4) for t in range(401)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_inertia_rejects_zero_iterations():
    with pytest.raises(InvalidParametersError):
        inertia(0, 0, 0.9, 0.4)


def test_mutate_one_changes_exactly_one_gene():
    rng = RngStream(1)
    for _ in range(CASES):
        m = rng.integer(1, 12)
        arity = random_arity(rng, m)
        genome = random_genome(rng, arity)
        mutant = mutate_one(genome, arity, rng)
        assert hamming(genome, mutant) == 1
        mutant.check(arity)


def test_mutate_one_skips_fixed_positions():
    rng = RngStream(2)
    arity = [1, 3, 1]
    genome = Genome([0, 1, 0])
    for _ in range(100):
        mutant = mutate_one(genome, arity, rng)
        assert mutant[0] == 0 and mutant[2] == 0
        assert mutant[1] != 1

    with pytest.raises(InvalidParametersError):
        mutate_one(Genome([0, 0]), [1, 1], rng)


def test_mutate_one_new_value_is_uniform():
    rng = RngStream(3)
    counts = {0: 0, 2: 0, 3: 0}
    for _ in range(6000):
        counts[int(mutate_one(Genome([1]), [4], rng)[0])] += 1
    assert all(1700 < c < 2300 for c in counts.values())


def test_mutate_one_position_is_uniform():
    rng = RngStream(8)
    genome = Genome([0] * 5)
    counts = np.zeros(5)
    for _ in range(CASES):
        counts += mutate_one(genome, [3] * 5, rng).genes != 0
    assert all(abs(c / CASES - 0.2) <= 0.02 for c in counts)


def test_single_point_crossover_gene_provenance():
    rng = RngStream(4)
    for _ in range(CASES):
        m = rng.integer(2, 15)
        arity = random_arity(rng, m)
        a, b = random_genome(rng, arity), random_genome(rng, arity)
        cut = rng.integer(1, m - 1)
        c1, c2 = single_point_crossover(a, b, rng, cut)

        assert c1.genes[:cut].tolist() == a.genes[:cut].tolist()
        assert c1.genes[cut:].tolist() == b.genes[cut:].tolist()
        assert c2.genes[:cut].tolist() == b.genes[:cut].tolist()
        assert c2.genes[cut:].tolist() == a.genes[cut:].tolist()


def test_single_point_crossover_example():
    c1, c2 = single_point_crossover(Genome([0, 0, 0, 0]), Genome([1, 1, 1, 1]), RngStream(0), cut=1)
    assert c1 == Genome([0, 1, 1, 1])
    assert c2 == Genome([1, 0, 0, 0])


def test_single_point_crossover_preconditions():
    rng = RngStream(0)
    with pytest.raises(IncompatibleGenomesError):
        single_point_crossover(Genome([0, 1]), Genome([0, 1, 1]), rng)
    with pytest.raises(InvalidParametersError):
        single_point_crossover(Genome([0]), Genome([1]), rng)
    with pytest.raises(InvalidParametersError):
        single_point_crossover(Genome([0, 1, 0]), Genome([1, 0, 1]), rng, cut=3)


def test_segment_bounds_partition():
    assert segment_bounds(10, 3) == [(0, 4), (4, 7), (7, 10)]
    assert segment_bounds(4, 4) == [(0, 1), (1, 2), (2, 3), (3, 4)]
    with pytest.raises(InvalidParametersError):
        segment_bounds(3, 4)


def test_multi_parent_crossover_provenance():
    rng = RngStream(5)
    for _ in range(CASES):
        e = rng.integer(1, 6)
        m = rng.integer(e, 20)
        parents = [Genome(np.full(m, p)) for p in range(e)]
        child = multi_parent_crossover(parents, rng)

        bounds = segment_bounds(m, e)
        assert bounds[0][0] == 0 and bounds[-1][1] == m
        owners = [int(child[start]) for start, _ in bounds]
        assert sorted(owners) == list(range(e))
        for (start, end), owner in zip(bounds, owners):
            assert child.genes[start:end].tolist() == [owner] * (end - start)


def test_multi_parent_crossover_segment_order_is_uniform():
    rng = RngStream(9)
    parents = [Genome(np.full(4, p)) for p in range(4)]
    draws = 24_000
    counts = {}
    for _ in range(draws):
        key = tuple(multi_parent_crossover(parents, rng).genes.tolist())
        counts[key] = counts.get(key, 0) + 1

    assert len(counts) == 24
    assert all(abs(c / draws - 1 / 24) <= 0.01 for c in counts.values())


def test_multi_parent_crossover_with_fixed_order():
    parents = [Genome([0] * 6), Genome([1] * 6), Genome([2] * 6)]
    child = multi_parent_crossover(parents, RngStream(0), order=[2, 0, 1])
    assert child == Genome([2, 2, 0, 0, 1, 1])


def test_multi_parent_crossover_single_parent_copies():
    parent = Genome([3, 1, 2])
    assert multi_parent_crossover([parent], RngStream(0)) == parent


def test_multi_parent_crossover_needs_enough_genes():
    with pytest.raises(InvalidParametersError):
        multi_parent_crossover([Genome([0, 1])] * 3, RngStream(0))


def test_onlooker_neighbor_exact_distance():
    rng = RngStream(6)
    for _ in range(CASES):
        m = rng.integer(1, 12)
        arity = random_arity(rng, m)
        genome = random_genome(rng, arity)
        k = rng.integer(1, m)
        neighbor = onlooker_neighbor(genome, k, arity, rng)
        assert hamming(genome, neighbor) == k
        neighbor.check(arity)


def test_onlooker_neighbor_range():
    with pytest.raises(InvalidParametersError):
        onlooker_neighbor(Genome([0, 0]), 0, [2, 2], RngStream(0))
    with pytest.raises(InvalidParametersError):
        onlooker_neighbor(Genome([0, 0, 0]), 3, [2, 1, 2], RngStream(0))


def test_onlooker_distances_cycle():
    assert onlooker_distances(6, 3) == [1, 2, 3, 1, 2, 3]
    assert onlooker_distances(4, 1) == [1, 1, 1, 1]
