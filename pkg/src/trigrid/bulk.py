"""Vectorized batch operations over many vertex subsets at once.

Subsets are rows of a (count, vertex_count) uint8 membership matrix,
column j = dense id j.  These back the large exhaustive and randomized
sweeps; the scalar operations in core/compress are the reference
implementations they are tested against.
"""

from __future__ import annotations

import numpy as np

from .core import TriGrid

_BLOCK_CELLS = 1 << 22  # soft cap on rows*columns handled per matmul


def adjacency_matrix(grid: TriGrid) -> np.ndarray:
    nv = grid.vertex_count
    adj = np.zeros((nv, nv), dtype=np.uint8)
    for v in grid.vertices():
        i = grid.index(v)
        for u in grid.neighbors(v):
            adj[i, grid.index(u)] = 1
    return adj


def subsets_from_ids(grid: TriGrid, ids: np.ndarray) -> np.ndarray:
    """Membership matrix for subset counter values (bit j = dense id j)."""
    ids = np.asarray(ids, dtype=np.uint64)
    shifts = np.arange(grid.vertex_count, dtype=np.uint64)
    return ((ids[:, None] >> shifts[None, :]) & np.uint64(1)).astype(np.uint8)


def random_subsets(grid: TriGrid, count: int, rng: np.random.Generator) -> np.ndarray:
    """count independent uniform subsets (each vertex in with probability 1/2)."""
    return rng.integers(0, 2, size=(count, grid.vertex_count), dtype=np.uint8)


def pack_rows(mat: np.ndarray) -> list[int]:
    """Each row as a Python bitmask int (for cross-checks with VertexSet)."""
    packed = np.packbits(mat.astype(np.uint8), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _neighbor_hits(grid: TriGrid, mat: np.ndarray) -> np.ndarray:
    """Boolean matrix: vertex j adjacent to some member of each row-set."""
    adj = adjacency_matrix(grid).astype(np.float32)
    nv = grid.vertex_count
    rows = max(1, _BLOCK_CELLS // nv)
    out = np.empty(mat.shape, dtype=bool)
    for s in range(0, mat.shape[0], rows):
        block = mat[s : s + rows].astype(np.float32)
        out[s : s + rows] = (block @ adj) > 0.5
    return out


def boundary_sizes(grid: TriGrid, mat: np.ndarray) -> np.ndarray:
    hits = _neighbor_hits(grid, mat)
    return ((mat == 0) & hits).sum(axis=1).astype(np.int64)


def neighborhood_sizes(grid: TriGrid, mat: np.ndarray) -> np.ndarray:
    hits = _neighbor_hits(grid, mat)
    return ((mat != 0) | hits).sum(axis=1).astype(np.int64)


def compress(grid: TriGrid, mat: np.ndarray, axis: int, side: str) -> np.ndarray:
    """Row-wise section compression; matches compress_left/compress_right."""
    if axis not in (1, 2):
        raise ValueError(f"axis must be 1 or 2, got {axis!r}")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    n = grid.n
    out = np.zeros_like(mat, dtype=np.uint8)
    for t in range(n + 1):
        if axis == 1:
            ids = [grid.index((t, c)) for c in range(n - t + 1)]
        else:
            ids = [grid.index((c, t)) for c in range(n - t + 1)]
        section = mat[:, ids]
        counts = section.sum(axis=1, dtype=np.int64)
        pos = np.arange(len(ids), dtype=np.int64)
        if side == "left":
            filled = pos[None, :] < counts[:, None]
        else:
            filled = pos[None, :] >= (len(ids) - counts)[:, None]
        out[:, ids] = filled.astype(np.uint8)
    return out
