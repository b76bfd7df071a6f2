from services.generators import (
    make_rng,
    random_indecomposable_hnf,
    random_interleaving,
    random_nonnegative_graph,
    random_round_trip,
    random_unimodular,
)
from services.decomposer import is_decomposable
from services.hermite import is_hnf
from services.selftest import run_selftest
from utils.matrix import is_unimodular


def test_golden_checks_all_pass():
    results = run_selftest()
    assert len(results) == 10
    assert all(r.ok for r in results), [r for r in results if not r.ok]


def test_seeded_round_trips_are_reproducible():
    first = run_selftest(seed=42, samples=5)
    second = run_selftest(seed=42, samples=5)
    assert first == second
    assert all(r.ok for r in first)


def test_generators():
    rng = make_rng(1)
    for _ in range(50):
        assert is_unimodular(random_unimodular(rng, 3))
        h = random_indecomposable_hnf(rng)
        assert is_hnf(h) and not is_decomposable(h)
        b = random_nonnegative_graph(rng, 5)
        assert b.is_symmetric() and all(x >= 0 for row in b for x in row)
    q = random_interleaving(rng, [2, 3])
    first_block = [v for v in q.mapping if v <= 2]
    second_block = [v for v in q.mapping if v > 2]
    assert first_block == [1, 2] and second_block == [3, 4, 5]


def test_round_trip_instance_shape():
    inst = random_round_trip(make_rng(2), max_blocks=3)
    assert 1 <= len(inst.blocks) <= 3
    assert inst.a.rows == sum(b.rows for b in inst.blocks)
    assert inst.a.cols == sum(b.cols for b in inst.blocks)
