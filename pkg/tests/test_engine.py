import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import sorted_desc
from topk_lambda.barcode import Barcode
from topk_lambda.decomposition import anchor_of, brute_force_lambda
from topk_lambda.engine import (
    Emission,
    check_identities,
    colex_subsets,
    expand_identities,
    topk_colex,
    topk_enum,
    topk_grouped,
)
from topk_lambda.sweep import run_sweep
from topk_lambda.synth import random_small_barcode

STAGGERED = run_sweep(Barcode.from_pairs([(0, 3), (1, 4), (2, 5)]))


def brute_lengths(bc, i):
    return sorted_desc(iv.length for iv in brute_force_lambda(bc, i))


def test_grouped_examples():
    assert topk_grouped(STAGGERED, 2, 2).lengths == [2.0, 2.0]
    assert topk_grouped(STAGGERED, 2, 10).lengths == [2.0, 2.0, 1.0]
    assert topk_grouped(run_sweep(Barcode()), 3, 5).lengths == []
    assert topk_grouped(run_sweep(Barcode.from_pairs([(0, 4), (0, 4)])), 2, 1).lengths == [4.0]


def test_k_zero():
    for engine in (topk_grouped, topk_colex, topk_enum):
        res = engine(STAGGERED, 2, 0, identities=True)
        assert res.lengths == [] and res.identities == []


@pytest.mark.parametrize("engine", [topk_grouped, topk_colex, topk_enum])
def test_bad_arguments(engine):
    with pytest.raises(ValueError):
        engine(STAGGERED, 1, 3)
    with pytest.raises(ValueError):
        engine(STAGGERED, 2, -1)


def test_colex_single_triple():
    res = topk_colex(STAGGERED, 3, 1, identities=True)
    assert res.lengths == [1.0]
    e = res.emissions[0]
    assert e.anchor == 2 and e.ranks == (1, 2)
    assert {STAGGERED.bar_at_rank(2, j) for j in e.ranks} == {0, 1}
    assert res.identities == [(0, 1, 2)]


def test_colex_subsets_order():
    assert list(colex_subsets(2, 1)) == [(1,), (2,)]
    assert list(colex_subsets(4, 2)) == [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4)]
    assert list(colex_subsets(3, 0)) == [()]
    assert list(colex_subsets(1, 2)) == []


def test_expand_identities_rank_subsets():
    # five bars alive at anchor 5 with distinct deaths; ranks 1..5 = bars 4..0
    bc = Barcode.from_pairs([(0, 10), (0, 11), (0, 12), (0, 13), (0, 14), (1, 9)])
    snap = run_sweep(bc)
    got = expand_identities(snap, [Emission(8.0, 5, 3, 2)], K=10, i=3)
    # rank subsets {1,3}, {2,3} -> bars {4,2}, {3,2}
    assert got == [(2, 4, 5), (2, 3, 5)]
    assert expand_identities(snap, [Emission(8.0, 5, 4, 1)], K=10, i=2) == [(1, 5)]
    assert expand_identities(snap, [Emission(8.0, 5, 3, 2), Emission(8.0, 5, 4, 3)], K=4, i=3) == [
        (2, 4, 5), (2, 3, 5), (1, 4, 5), (1, 3, 5)
    ]


def test_bulk_emission_truncated_by_k():
    bc = Barcode.from_pairs([(0, 10)] * 5 + [(1, 5)])
    snap = run_sweep(bc)
    # anchors 3 and 4 (equal births, later index) see 3 and 4 bars dying at 10;
    # rank 3 carries C(2,2)=1 copy, rank 4 carries C(3,2)=3 copies
    res = topk_grouped(snap, 4, 3, identities=True)
    assert res.lengths == [10.0, 10.0, 10.0]
    assert [(e.anchor, e.rank, e.copies) for e in res.emissions] == [(3, 3, 1), (4, 3, 1), (4, 4, 1)]
    assert check_identities(snap, res)
    full = topk_grouped(snap, 4, 100)
    assert full.lengths == brute_lengths(bc, 4)
    assert (4, 4, 3) in [(e.anchor, e.rank, e.copies) for e in full.emissions]


@pytest.mark.parametrize("seed", range(50))
@pytest.mark.parametrize("i", [2, 3, 4])
def test_engines_match_brute_force_for_every_k(seed, i):
    bc = random_small_barcode(random.Random(seed), 22)
    snap = run_sweep(bc)
    brute = brute_lengths(bc, i)
    for K in range(0, len(brute) + 3):
        g = topk_grouped(snap, i, K)
        assert g.lengths == brute[:K]
        assert sum(e.copies for e in g.emissions) == len(g.lengths)
    for K in {1, len(brute) // 2, len(brute) + 2}:
        c = topk_colex(snap, i, K, identities=True)
        assert sorted_desc(c.lengths) == brute[:K]
        assert len({(e.anchor, e.ranks) for e in c.emissions}) == len(c.emissions)
        assert check_identities(snap, c)
        e = topk_enum(snap, i, K, identities=True)
        assert e.lengths == brute[:K]


@pytest.mark.parametrize("seed", range(30))
@pytest.mark.parametrize("i", [2, 3, 4])
def test_identities_realize_lengths(seed, i):
    bc = random_small_barcode(random.Random(500 + seed), 25)
    snap = run_sweep(bc)
    res = topk_grouped(snap, i, 10**6, identities=True)
    assert check_identities(snap, res)
    assert len(set(res.identities)) == len(res.identities)
    brute = {iv.members for iv in brute_force_lambda(bc, i)}
    assert set(res.identities) == brute
    for t, a in zip(res.identities, res.anchors()):
        assert anchor_of(bc, t) == a


def test_emission_order_deterministic():
    bc = random_small_barcode(random.Random(3), 30, min_m=30)
    runs = [topk_grouped(run_sweep(bc), 3, 50, identities=True) for _ in range(3)]
    assert runs[0] == runs[1] == runs[2]


def test_enum_and_grouped_emit_identically():
    for seed in range(20):
        bc = random_small_barcode(random.Random(seed), 25)
        snap = run_sweep(bc)
        for K in (1, 7, 40):
            assert topk_enum(snap, 3, K, identities=True) == topk_grouped(snap, 3, K, identities=True)


def test_intervals_start_at_anchor_birth():
    res = topk_grouped(STAGGERED, 2, 3)
    assert res.intervals(STAGGERED) == [(1.0, 3.0), (2.0, 4.0), (2.0, 3.0)]


grid = st.lists(
    st.tuples(st.integers(0, 6), st.integers(1, 4)).map(lambda t: (float(t[0]), float(t[0] + t[1]))),
    max_size=18,
)


@settings(max_examples=100, deadline=None)
@given(grid, st.integers(2, 4), st.integers(0, 60))
def test_grouped_property(pairs, i, K):
    bc = Barcode.from_pairs(pairs)
    snap = run_sweep(bc)
    res = topk_grouped(snap, i, K)
    assert res.lengths == brute_lengths(bc, i)[:K]
    assert all(a >= b for a, b in zip(res.lengths, res.lengths[1:]))
    keys = [e.length for e in res.emissions]
    assert keys == sorted_desc(keys)
