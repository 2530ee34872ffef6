"""Section-wise compression operators on vertex subsets.

A set is sliced into 1-sections (columns, fixed v1 = t) or 2-sections
(rows, fixed v2 = t).  Left compression replaces each section by the
initial interval {0, ..., size-1}; right compression by the terminal
interval {n-t, ..., n-t-size+1}.  An empty section compresses to the
empty interval.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Coord, TriGrid, VertexSet

AXES = (1, 2)
SIDES = ("left", "right")


def _check_axis(axis: int) -> int:
    if axis not in AXES:
        raise ValueError(f"axis must be 1 or 2, got {axis!r}")
    return axis


@dataclass(frozen=True)
class SectionFamily:
    """Per-index cross-coordinate sets of a vertex set along one axis."""

    n: int
    axis: int
    sets: tuple[frozenset[int], ...]

    def reassemble(self, grid: TriGrid) -> VertexSet:
        if grid.n != self.n:
            raise ValueError("section family belongs to a different grid")
        coords = []
        for t, s in enumerate(self.sets):
            for c in s:
                coords.append((t, c) if self.axis == 1 else (c, t))
        return VertexSet(grid, coords)


def sections(grid: TriGrid, a: VertexSet, axis: int) -> SectionFamily:
    """The 1-sections (per column) or 2-sections (per row) of a."""
    _check_axis(axis)
    n = grid.n
    sets = [set() for _ in range(n + 1)]
    for v1, v2 in a:
        if axis == 1:
            sets[v1].add(v2)
        else:
            sets[v2].add(v1)
    return SectionFamily(n, axis, tuple(frozenset(s) for s in sets))


def _section_sizes(grid: TriGrid, a: VertexSet, axis: int) -> list[int]:
    sizes = [0] * (grid.n + 1)
    for v1, v2 in a:
        sizes[v1 if axis == 1 else v2] += 1
    return sizes


def _from_sections(grid: TriGrid, axis, intervals) -> VertexSet:
    coords = []
    for t, rng in enumerate(intervals):
        for c in rng:
            coords.append((t, c) if axis == 1 else (c, t))
    return VertexSet(grid, coords)


def compress_left(grid: TriGrid, a: VertexSet, axis: int) -> VertexSet:
    """Push every section of a to the low end of its range."""
    _check_axis(axis)
    sizes = _section_sizes(grid, a, axis)
    return _from_sections(grid, axis, (range(c) for c in sizes))


def compress_right(grid: TriGrid, a: VertexSet, axis: int) -> VertexSet:
    """Push every section of a to the high end of its range {0, ..., n-t}."""
    _check_axis(axis)
    n = grid.n
    sizes = _section_sizes(grid, a, axis)
    return _from_sections(
        grid, axis, (range(n - t - c + 1, n - t + 1) for t, c in enumerate(sizes))
    )


def is_compressed(grid: TriGrid, a: VertexSet, axis: int, side: str) -> bool:
    """True when the chosen compression fixes a."""
    if side not in SIDES:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    op = compress_left if side == "left" else compress_right
    return op(grid, a, axis) == a


def reflect(grid: TriGrid, a: VertexSet, axis: int) -> VertexSet:
    """Mirror about the median of the given axis.

    axis=2 fixes rows: (v1, v2) -> (n - v1 - v2, v2); axis=1 fixes columns.
    Conjugating left compression by the matching reflection yields right
    compression.
    """
    _check_axis(axis)
    n = grid.n
    if axis == 2:
        return VertexSet(grid, (Coord(n - v1 - v2, v2) for v1, v2 in a))
    return VertexSet(grid, (Coord(v1, n - v1 - v2) for v1, v2 in a))
