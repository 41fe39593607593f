import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import naive_alive, naive_ranked_alive
from topk_lambda.barcode import Barcode
from topk_lambda.ostree import QueryError
from topk_lambda.sweep import alive_deaths, run_sweep
from topk_lambda.synth import random_small_barcode


def test_staggered_bars():
    snap = run_sweep(Barcode.from_pairs([(0, 3), (1, 4), (2, 5)]))
    assert snap.counts == (0, 1, 2)
    assert list(alive_deaths(snap, 1)) == [3.0]
    assert list(alive_deaths(snap, 2)) == [4.0, 3.0]
    assert alive_deaths(snap, 2).at_rank(1) == 4.0
    assert alive_deaths(snap, 2).at_rank(2) == 3.0


def test_death_processed_before_birth_at_same_time():
    snap = run_sweep(Barcode.from_pairs([(0, 1), (1, 2)]))
    assert snap.counts == (0, 0)


def test_equal_births_in_index_order():
    snap = run_sweep(Barcode.from_pairs([(0, 2), (0, 3)]))
    assert snap.counts == (0, 1)


def test_empty_alive_set_queries_fail():
    snap = run_sweep(Barcode.from_pairs([(0, 1)]))
    with pytest.raises(QueryError):
        alive_deaths(snap, 0).at_rank(1)
    with pytest.raises(IndexError):
        alive_deaths(snap, 0)[0]


def test_duplicate_deaths_keep_multiplicity():
    snap = run_sweep(Barcode.from_pairs([(0, 5), (1, 5), (2, 6)]))
    assert list(alive_deaths(snap, 2)) == [5.0, 5.0]
    assert {snap.bar_at_rank(2, 1), snap.bar_at_rank(2, 2)} == {0, 1}
    assert snap.bar_at_rank(2, 1) == 0


def test_empty_barcode():
    snap = run_sweep(Barcode())
    assert snap.M == 0 and snap.tree.size(snap.final_root) == 0


@pytest.mark.parametrize("seed", range(40))
def test_snapshots_match_naive_sweep(seed):
    rng = random.Random(seed)
    bc = random_small_barcode(rng, 200)
    snap = run_sweep(bc)
    assert snap.tree.size(snap.final_root) == 0
    assert len(snap.roots) == bc.M
    for r in range(bc.M):
        ranked = naive_ranked_alive(bc, r)
        assert snap.counts[r] == len(ranked) == snap.tree.size(snap.roots[r])
        assert list(alive_deaths(snap, r)) == [bc[s].death for s in ranked]
        assert [snap.bar_at_rank(r, j) for j in range(1, len(ranked) + 1)] == ranked


def test_snapshots_immutable_after_sweep():
    rng = random.Random(7)
    bc = random_small_barcode(rng, 60, min_m=60)
    snap = run_sweep(bc)
    before = [list(alive_deaths(snap, r)) for r in range(bc.M)]
    # extra versions on the same arena must not disturb existing ones
    root = snap.final_root
    for r in range(bc.M):
        root = snap.tree.update(root, snap.axis.coord(bc[r].death), +1)
    assert [list(alive_deaths(snap, r)) for r in range(bc.M)] == before


grid = st.lists(
    st.tuples(st.integers(0, 5), st.integers(1, 3)).map(lambda t: (float(t[0]), float(t[0] + t[1]))),
    max_size=25,
)


@settings(max_examples=80, deadline=None)
@given(grid)
def test_alive_sets_property(pairs):
    bc = Barcode.from_pairs(pairs)
    snap = run_sweep(bc)
    for r in range(bc.M):
        assert sorted(alive_deaths(snap, r)) == sorted(bc[s].death for s in naive_alive(bc, r))
