import random

import pytest

from trigrid import (
    TriGrid,
    boundary,
    final_segment,
    final_segment_boundary_size,
    initial_segment,
    initial_segment_boundary_size,
    packing_minimum,
    rank_sum,
    rank_to_coord,
    simplicial_order,
    simplicial_rank,
    triangular,
)

from helpers import simplicial_sort_oracle


def test_rank_table_t2():
    g = TriGrid(2)
    expected = [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert [tuple(v) for v in simplicial_order(g)] == expected


def test_rank_agrees_with_comparator_sort():
    for n in range(1, 7):
        g = TriGrid(n)
        assert simplicial_order(g) == simplicial_sort_oracle(g)
        for r, v in enumerate(simplicial_order(g)):
            assert simplicial_rank(g, v) == r
            assert rank_to_coord(g, r) == v


def test_rank_extremes():
    for n in (1, 3, 6):
        g = TriGrid(n)
        assert tuple(rank_to_coord(g, 0)) == (0, 0)
        assert tuple(rank_to_coord(g, g.vertex_count - 1)) == (0, n)
    with pytest.raises(ValueError):
        rank_to_coord(TriGrid(2), 6)


def test_segment_examples():
    g = TriGrid(2)
    assert initial_segment(g, 2) == g.set_of([(0, 0), (1, 0)])
    assert initial_segment(g, 0) == g.empty_set()
    assert initial_segment(g, 6) == g.full_set()
    assert final_segment(g, 3) == g.set_of([(2, 0), (1, 1), (0, 2)])
    assert final_segment(g, 0) == g.empty_set()
    with pytest.raises(ValueError):
        initial_segment(g, 7)


def test_segment_complement_identity_and_nesting():
    for n in (2, 4, 6):
        g = TriGrid(n)
        nv = g.vertex_count
        for k in range(nv + 1):
            assert final_segment(g, k) == initial_segment(g, nv - k).complement()
        for k in range(nv):
            assert initial_segment(g, k).issubset(initial_segment(g, k + 1))


def test_initial_closed_form_matches_direct():
    for n in range(1, 6):
        g = TriGrid(n)
        for k in range(1, triangular(n) + 1):
            assert initial_segment_boundary_size(g, k) == len(
                boundary(g, initial_segment(g, k))
            )


def test_final_closed_form_matches_direct():
    for n in range(1, 6):
        g = TriGrid(n)
        for k in range(n + 1, g.vertex_count + 1):
            assert final_segment_boundary_size(g, k) == len(
                boundary(g, final_segment(g, k))
            )


def test_closed_form_examples():
    assert initial_segment_boundary_size(TriGrid(3), 4) == 4
    assert initial_segment_boundary_size(TriGrid(2), 2) == 3
    assert initial_segment_boundary_size(TriGrid(5), 1) == 2
    assert final_segment_boundary_size(TriGrid(2), 3) == 2
    assert final_segment_boundary_size(TriGrid(3), 7) == 2
    g4 = TriGrid(4)
    assert final_segment_boundary_size(g4, g4.vertex_count) == 0


def test_closed_form_regime_errors():
    g = TriGrid(3)
    for k in (0, triangular(3) + 1, 11):
        with pytest.raises(ValueError):
            initial_segment_boundary_size(g, k)
    for k in (0, 3, 11):
        with pytest.raises(ValueError):
            final_segment_boundary_size(g, k)


def test_packing_minimum_examples():
    g = TriGrid(2)
    assert packing_minimum(g, 0) == 0
    assert packing_minimum(g, g.vertex_count) == 0
    assert packing_minimum(g, 3) == 2
    # valid at diagonal-straddling sizes the closed forms refuse
    g5 = TriGrid(5)
    for k in range(g5.vertex_count + 1):
        assert packing_minimum(g5, k) >= 0


def test_rank_sum_decreases_under_lowering_exchange():
    rng = random.Random(11)
    g = TriGrid(5)
    order = simplicial_order(g)
    for _ in range(200):
        k = rng.randrange(2, g.vertex_count)
        members = rng.sample(order, k)
        a = g.set_of(members)
        base = rank_sum(g, a)
        out_v = rng.choice(members)
        lower = [v for v in order if simplicial_rank(g, v) < simplicial_rank(g, out_v) and v not in a]
        if not lower:
            continue
        in_v = rng.choice(lower)
        b = a.copy()
        b.discard(out_v)
        b.add(in_v)
        assert rank_sum(g, b) < base
