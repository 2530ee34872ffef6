"""Triangular grid graphs in shifted coordinates, plus vertex-set arithmetic.

The grid of order n has vertices (v1, v2) with v1, v2 >= 0 and v1 + v2 <= n,
drawn with rows horizontal (v2 = row index) and the hypotenuse on the
anti-diagonal v1 + v2 = n.  Edges join vertices differing by (+-1, 0),
(0, +-1), (+1, -1) or (-1, +1).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, NamedTuple

# Canonical neighbor order: clockwise, starting from (v1+1, v2).
NEIGHBOR_OFFSETS = ((1, 0), (1, -1), (0, -1), (-1, 0), (-1, 1), (0, 1))


class Coord(NamedTuple):
    v1: int
    v2: int

    @property
    def level(self) -> int:
        """Distance from the origin corner: v1 + v2."""
        return self.v1 + self.v2


class TriGrid:
    """The triangular grid graph of order n (>= 1), (n+1)(n+2)/2 vertices.

    Vertices carry dense integer ids in row-major order (row 0 first,
    left to right within a row), so each row occupies a contiguous bit
    range in set bitmasks.
    """

    __slots__ = ("n", "vertex_count", "full_mask", "_row_offset", "_row_mask")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"grid order must be at least 1, got {n}")
        self.n = n
        self.vertex_count = (n + 1) * (n + 2) // 2
        self.full_mask = (1 << self.vertex_count) - 1
        offsets = []
        off = 0
        for r in range(n + 1):
            offsets.append(off)
            off += n - r + 1
        self._row_offset = tuple(offsets)
        self._row_mask = tuple((1 << (n - r + 1)) - 1 for r in range(n + 1))

    def __repr__(self) -> str:
        return f"TriGrid({self.n})"

    def __eq__(self, other) -> bool:
        return isinstance(other, TriGrid) and other.n == self.n

    def __hash__(self) -> int:
        return hash(("TriGrid", self.n))

    def contains(self, v) -> bool:
        v1, v2 = v
        return v1 >= 0 and v2 >= 0 and v1 + v2 <= self.n

    def check(self, v) -> Coord:
        """Validate a coordinate pair and return it as a Coord."""
        if not self.contains(v):
            raise ValueError(f"{tuple(v)} is not a vertex of T_{self.n}")
        return Coord(int(v[0]), int(v[1]))

    def index(self, v) -> int:
        """Dense id of a vertex: row offset plus column."""
        v1, v2 = self.check(v)
        return self._row_offset[v2] + v1

    def coord(self, i: int) -> Coord:
        if not 0 <= i < self.vertex_count:
            raise ValueError(f"dense id {i} out of range for T_{self.n}")
        # Rows are short (<= n+1); linear scan is fine for lookups.
        for r in range(self.n, -1, -1):
            if i >= self._row_offset[r]:
                return Coord(i - self._row_offset[r], r)
        raise AssertionError

    def vertices(self) -> Iterator[Coord]:
        for r in range(self.n + 1):
            for c in range(self.n - r + 1):
                yield Coord(c, r)

    def neighbors(self, v) -> list[Coord]:
        """Valid neighbors of v in the canonical clockwise order."""
        v1, v2 = self.check(v)
        out = []
        for d1, d2 in NEIGHBOR_OFFSETS:
            u = (v1 + d1, v2 + d2)
            if self.contains(u):
                out.append(Coord(*u))
        return out

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def edge_count(self) -> int:
        return 3 * self.n * (self.n + 1) // 2

    def spread_bits(self, bits: int) -> int:
        """Union of the (strict) neighbor sets of all members of a bitmask.

        Row-parallel: every row is a contiguous bit range, so the six edge
        directions reduce to shifted copies of adjacent row words.
        """
        n = self.n
        offs = self._row_offset
        masks = self._row_mask
        rows = [(bits >> offs[r]) & masks[r] for r in range(n + 1)]
        out = 0
        for r in range(n + 1):
            x = rows[r]
            s = (x << 1) | (x >> 1)
            if r > 0:
                below = rows[r - 1]
                s |= below | (below >> 1)
            if r < n:
                above = rows[r + 1]
                s |= above | (above << 1)
            out |= (s & masks[r]) << offs[r]
        return out

    def empty_set(self) -> "VertexSet":
        return VertexSet(self)

    def full_set(self) -> "VertexSet":
        return VertexSet.from_bits(self, self.full_mask)

    def set_of(self, coords: Iterable) -> "VertexSet":
        return VertexSet(self, coords)


class VertexSet:
    """A subset of V(T_n): bitmask over dense ids plus cached cardinality."""

    __slots__ = ("grid", "bits", "_size")

    def __init__(self, grid: TriGrid, coords: Iterable = ()):
        self.grid = grid
        bits = 0
        for v in coords:
            bits |= 1 << grid.index(v)
        self.bits = bits
        self._size = bits.bit_count()

    @classmethod
    def from_bits(cls, grid: TriGrid, bits: int) -> "VertexSet":
        if bits & ~grid.full_mask:
            raise ValueError("bitmask has bits outside the grid")
        vs = cls.__new__(cls)
        vs.grid = grid
        vs.bits = bits
        vs._size = bits.bit_count()
        return vs

    @classmethod
    def from_hex(cls, grid: TriGrid, s: str) -> "VertexSet":
        return cls.from_bits(grid, int(s, 16))

    def to_hex(self) -> str:
        width = (self.grid.vertex_count + 3) // 4
        return format(self.bits, f"0{width}x")

    def to_pairs(self) -> list[list[int]]:
        """JSON form: [v1, v2] pairs sorted by dense id (row-major)."""
        return [[v.v1, v.v2] for v in self]

    @classmethod
    def from_pairs(cls, grid: TriGrid, pairs: Iterable) -> "VertexSet":
        return cls(grid, pairs)

    def __contains__(self, v) -> bool:
        return bool(self.bits >> self.grid.index(v) & 1)

    def __iter__(self) -> Iterator[Coord]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield self.grid.coord(low.bit_length() - 1)
            bits ^= low

    def __len__(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and other.grid.n == self.grid.n
            and other.bits == self.bits
        )

    def __repr__(self) -> str:
        return f"VertexSet(T_{self.grid.n}, {[tuple(v) for v in self]})"

    def add(self, v) -> None:
        b = 1 << self.grid.index(v)
        if not self.bits & b:
            self.bits |= b
            self._size += 1

    def discard(self, v) -> None:
        b = 1 << self.grid.index(v)
        if self.bits & b:
            self.bits ^= b
            self._size -= 1

    def copy(self) -> "VertexSet":
        return VertexSet.from_bits(self.grid, self.bits)

    def _coerce(self, other: "VertexSet") -> int:
        if not isinstance(other, VertexSet) or other.grid.n != self.grid.n:
            raise ValueError("vertex sets belong to different grids")
        return other.bits

    def __or__(self, other) -> "VertexSet":
        return VertexSet.from_bits(self.grid, self.bits | self._coerce(other))

    def __and__(self, other) -> "VertexSet":
        return VertexSet.from_bits(self.grid, self.bits & self._coerce(other))

    def __sub__(self, other) -> "VertexSet":
        return VertexSet.from_bits(self.grid, self.bits & ~self._coerce(other))

    def __xor__(self, other) -> "VertexSet":
        return VertexSet.from_bits(self.grid, self.bits ^ self._coerce(other))

    def issubset(self, other) -> bool:
        return not self.bits & ~self._coerce(other)

    def complement(self) -> "VertexSet":
        return VertexSet.from_bits(self.grid, self.grid.full_mask & ~self.bits)


def neighbors(grid: TriGrid, v) -> list[Coord]:
    """Neighbors of v in the canonical clockwise order."""
    return grid.neighbors(v)


def automorphism_id_permutations(grid: TriGrid) -> list[tuple[int, ...]]:
    """The 6 triangle symmetries as permutations of dense ids.

    Generated by the rotation (v1, v2) -> (v2, n - v1 - v2) and the swap
    (v1, v2) -> (v2, v1); identity first.
    """
    n = grid.n

    def rot(v):
        return (v[1], n - v[0] - v[1])

    def swp(v):
        return (v[1], v[0])

    maps = [
        lambda v: v,
        rot,
        lambda v: rot(rot(v)),
        swp,
        lambda v: swp(rot(v)),
        lambda v: swp(rot(rot(v))),
    ]
    coords = [grid.coord(i) for i in range(grid.vertex_count)]
    return [tuple(grid.index(f(v)) for v in coords) for f in maps]


def _set_bits(grid: TriGrid, a: VertexSet) -> int:
    if a.grid.n != grid.n:
        raise ValueError("vertex set does not belong to this grid")
    return a.bits


def boundary(grid: TriGrid, a: VertexSet) -> VertexSet:
    """Vertex boundary: vertices outside a adjacent to a member of a."""
    bits = _set_bits(grid, a)
    return VertexSet.from_bits(grid, grid.spread_bits(bits) & ~bits)


def neighborhood(grid: TriGrid, a: VertexSet) -> VertexSet:
    """Closed neighborhood: a together with its boundary."""
    bits = _set_bits(grid, a)
    return VertexSet.from_bits(grid, bits | grid.spread_bits(bits))


def interior_boundary(grid: TriGrid, c: VertexSet) -> VertexSet:
    """Vertices of c adjacent to at least one vertex outside c."""
    bits = _set_bits(grid, c)
    outside = grid.full_mask & ~bits
    return VertexSet.from_bits(grid, grid.spread_bits(outside) & bits)


def render_ascii(
    grid: TriGrid,
    labels: Mapping = (),
    default: str = ".",
    row_n_top: bool = True,
) -> str:
    """Character rendering, one grid row per line, columns space-separated."""
    glyphs = {}
    for v, g in dict(labels).items():
        g = str(g)
        if len(g) != 1:
            raise ValueError(f"glyph for {tuple(v)} must be a single character")
        glyphs[grid.index(v)] = g
    rows = range(grid.n, -1, -1) if row_n_top else range(grid.n + 1)
    lines = []
    for r in rows:
        ids = (grid._row_offset[r] + c for c in range(grid.n - r + 1))
        lines.append(" ".join(glyphs.get(i, default) for i in ids))
    return "\n".join(lines) + "\n"
