import random

import numpy as np
import pytest

from trigrid import (
    TriGrid,
    VertexSet,
    compress_left,
    compress_right,
    initial_segment,
    is_compressed,
    neighborhood,
    rank_sum,
    reflect,
    sections,
)
from trigrid import bulk

from helpers import all_subsets, random_vertex_set

ALL_OPS = [
    (1, "left"),
    (2, "left"),
    (1, "right"),
    (2, "right"),
]


def _apply(g, a, axis, side):
    return (compress_left if side == "left" else compress_right)(g, a, axis)


def test_sections_example():
    g = TriGrid(3)
    a = g.set_of([(1, 1), (2, 0)])
    fam = sections(g, a, 1)
    assert fam.sets == (frozenset(), frozenset({1}), frozenset({0}), frozenset())
    assert fam.reassemble(g) == a
    assert all(s == frozenset() for s in sections(g, g.empty_set(), 2).sets)
    full = sections(g, g.full_set(), 1)
    assert full.sets == tuple(frozenset(range(3 - t + 1)) for t in range(4))
    with pytest.raises(ValueError):
        sections(g, a, 3)


def test_sections_reassemble_round_trip():
    rng = random.Random(3)
    g = TriGrid(5)
    for _ in range(50):
        a = random_vertex_set(g, rng)
        for axis in (1, 2):
            assert sections(g, a, axis).reassemble(g) == a


def test_worked_compression_example():
    g = TriGrid(3)
    a = g.set_of([(1, 1), (2, 0)])
    assert compress_left(g, a, 1) == g.set_of([(1, 0), (2, 0)])
    assert compress_left(g, a, 2) == g.set_of([(0, 0), (0, 1)])


def test_compress_right_example():
    g = TriGrid(3)
    assert compress_right(g, g.set_of([(0, 0)]), 2) == g.set_of([(3, 0)])
    assert compress_right(g, g.full_set(), 1) == g.full_set()


def test_compression_idempotent():
    rng = random.Random(4)
    g = TriGrid(5)
    for _ in range(40):
        a = random_vertex_set(g, rng)
        for axis, side in ALL_OPS:
            once = _apply(g, a, axis, side)
            assert _apply(g, once, axis, side) == once


def test_cardinality_preserved():
    rng = random.Random(5)
    for n in (2, 4, 7):
        g = TriGrid(n)
        for _ in range(60):
            a = random_vertex_set(g, rng)
            for axis, side in ALL_OPS:
                assert len(_apply(g, a, axis, side)) == len(a)


def test_is_compressed():
    g = TriGrid(3)
    a = g.set_of([(1, 1), (2, 0)])
    assert not is_compressed(g, a, 1, "left")
    for axis, side in ALL_OPS:
        assert is_compressed(g, g.empty_set(), axis, side)
        assert is_compressed(g, g.full_set(), axis, side)
    with pytest.raises(ValueError):
        is_compressed(g, a, 1, "up")


def test_initial_segments_left_compressed():
    for n in range(1, 6):
        g = TriGrid(n)
        for k in range(g.vertex_count + 1):
            seg = initial_segment(g, k)
            assert is_compressed(g, seg, 1, "left")
            assert is_compressed(g, seg, 2, "left")


def test_neighborhood_monotone_under_compression_exhaustive():
    for n in (1, 2, 3):
        g = TriGrid(n)
        for a in all_subsets(g):
            na = len(neighborhood(g, a))
            for axis, side in ALL_OPS:
                assert len(neighborhood(g, _apply(g, a, axis, side))) <= na


def test_rank_sum_potential():
    for n in (2, 3):
        g = TriGrid(n)
        for a in all_subsets(g):
            base = rank_sum(g, a)
            for axis in (1, 2):
                left = compress_left(g, a, axis)
                assert rank_sum(g, left) <= base
                assert (rank_sum(g, left) == base) == (left == a)
                right = compress_right(g, a, axis)
                assert rank_sum(g, right) >= base
                assert (rank_sum(g, right) == base) == (right == a)


def test_diagonal_preservation():
    rng = random.Random(6)
    for n in (2, 4, 6):
        g = TriGrid(n)
        diag = g.set_of([(v1, n - v1) for v1 in range(n + 1)])
        for _ in range(60):
            a = random_vertex_set(g, rng)
            avoiding = a - diag
            for axis in (1, 2):
                assert not (compress_left(g, avoiding, axis) & diag)
            containing = a | diag
            for axis in (1, 2):
                assert diag.issubset(compress_right(g, containing, axis))


def test_reflection_identity():
    rng = random.Random(7)
    for n in (2, 3, 5, 8):
        g = TriGrid(n)
        sets = list(all_subsets(g)) if n <= 3 else [
            random_vertex_set(g, rng) for _ in range(60)
        ]
        for a in sets:
            assert reflect(g, reflect(g, a, 2), 2) == a
            assert compress_right(g, a, 2) == reflect(
                g, compress_left(g, reflect(g, a, 2), 2), 2
            )
            assert compress_right(g, a, 1) == reflect(
                g, compress_left(g, reflect(g, a, 1), 1), 1
            )


def test_reflect_preserves_adjacency():
    g = TriGrid(4)
    for axis in (1, 2):
        for v in g.vertices():
            img = next(iter(reflect(g, g.set_of([v]), axis)))
            nbr_img = {
                next(iter(reflect(g, g.set_of([u]), axis))) for u in g.neighbors(v)
            }
            assert set(g.neighbors(img)) == nbr_img


def test_bulk_compress_matches_scalar():
    rng = np.random.default_rng(8)
    for n in (2, 4, 6):
        g = TriGrid(n)
        mat = bulk.random_subsets(g, 40, rng)
        for axis, side in ALL_OPS:
            out = bulk.compress(g, mat, axis, side)
            for row_in, row_out in zip(bulk.pack_rows(mat), bulk.pack_rows(out)):
                a = VertexSet.from_bits(g, row_in)
                assert row_out == _apply(g, a, axis, side).bits


def test_bulk_sizes_match_scalar():
    from trigrid import boundary

    rng = np.random.default_rng(9)
    for n in (2, 5, 9):
        g = TriGrid(n)
        mat = bulk.random_subsets(g, 50, rng)
        bsz = bulk.boundary_sizes(g, mat)
        nsz = bulk.neighborhood_sizes(g, mat)
        for i, bits in enumerate(bulk.pack_rows(mat)):
            a = VertexSet.from_bits(g, bits)
            assert bsz[i] == len(boundary(g, a))
            assert nsz[i] == len(neighborhood(g, a))
