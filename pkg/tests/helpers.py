"""Independent oracles shared across the test modules.

Everything here recomputes results from first principles (drawn edge
families, explicit set arithmetic, unpruned breadth-first search) so the
library's optimized paths are checked against genuinely separate code.
"""

from itertools import combinations, combinations_with_replacement, product

from trigrid import Coord, TriGrid, VertexSet


def drawn_edges(grid: TriGrid) -> set[frozenset]:
    """Edge set from the three drawn families: row paths, column paths,
    and the anti-diagonal paths between (d, 0) and (0, d)."""
    n = grid.n
    edges = set()
    for r in range(n + 1):  # row paths
        for x in range(n - r):
            edges.add(frozenset({(x, r), (x + 1, r)}))
    for c in range(n + 1):  # column paths
        for y in range(n - c):
            edges.add(frozenset({(c, y), (c, y + 1)}))
    for d in range(1, n + 1):  # anti-diagonal paths
        for x in range(1, d + 1):
            edges.add(frozenset({(x, d - x), (x - 1, d - x + 1)}))
    return edges


def adjacency_oracle(grid: TriGrid) -> dict:
    adj = {tuple(v): set() for v in grid.vertices()}
    for e in drawn_edges(grid):
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    return adj


def boundary_oracle(grid: TriGrid, members) -> set:
    adj = adjacency_oracle(grid)
    inside = {tuple(v) for v in members}
    out = set()
    for v in inside:
        out |= adj[v] - inside
    return out


def neighborhood_oracle(grid: TriGrid, members) -> set:
    inside = {tuple(v) for v in members}
    return inside | boundary_oracle(grid, inside)


def interior_boundary_oracle(grid: TriGrid, members) -> set:
    adj = adjacency_oracle(grid)
    inside = {tuple(v) for v in members}
    return {v for v in inside if adj[v] - inside}


def all_subsets(grid: TriGrid):
    for bits in range(1 << grid.vertex_count):
        yield VertexSet.from_bits(grid, bits)


def simplicial_sort_oracle(grid: TriGrid) -> list[Coord]:
    """Sort all vertices with the ordering comparator directly."""
    return sorted(grid.vertices(), key=lambda v: (v.v1 + v.v2, -v.v1))


def random_vertex_set(grid: TriGrid, rng) -> VertexSet:
    return VertexSet.from_bits(grid, rng.getrandbits(grid.vertex_count))


def search_clearable_oracle(grid: TriGrid, m: int) -> bool:
    """Unpruned BFS over dirty states with plain set arithmetic."""
    adj = adjacency_oracle(grid)
    full = frozenset(adj)
    seen = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for dirty in frontier:
            members = sorted(dirty)
            for searched in combinations(members, min(m, len(members))):
                rem = dirty - set(searched)
                spread = set(rem)
                for v in rem:
                    spread |= adj[v]
                state = frozenset(spread)
                if not state:
                    return True
                if state not in seen:
                    seen.add(state)
                    nxt.append(state)
        frontier = nxt
    return False


def lions_clearable_oracle(grid: TriGrid, lions: int) -> bool:
    """Unpruned lion-game reachability over every start, via plain sets."""
    adj = adjacency_oracle(grid)
    verts = sorted(adj)
    moves = {v: [v] + sorted(adj[v]) for v in verts}

    def transition(pos, dests, cont):
        traversed = {
            frozenset({p, d}) for p, d in zip(pos, dests) if p != d
        }
        occupied = set(dests)
        new = set()
        for v in verts:
            if v in occupied:
                continue
            if v in cont:
                new.add(v)
                continue
            for u in adj[v]:
                if u in cont and frozenset({u, v}) not in traversed:
                    new.add(v)
                    break
        return frozenset(new)

    for start in combinations_with_replacement(verts, lions):
        cont0 = frozenset(set(verts) - set(start))
        if not cont0:
            return True
        seen = {(tuple(sorted(start)), cont0)}
        frontier = [(start, cont0)]
        while frontier:
            nxt = []
            for pos, cont in frontier:
                for dests in product(*(moves[p] for p in pos)):
                    new = transition(pos, dests, cont)
                    if not new:
                        return True
                    key = (tuple(sorted(dests)), new)
                    if key not in seen:
                        seen.add(key)
                        nxt.append((dests, new))
            frontier = nxt
    return False
