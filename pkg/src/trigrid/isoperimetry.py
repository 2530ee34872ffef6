"""Verification of the packing-minimum boundary inequality.

Exhaustive subset enumeration at small order, seeded random spot checks
at larger order, the diagonal-conditioned segment-minimality check, and
the window certificate that turns packing minima into inspection-number
lower bounds.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import bulk
from .core import TriGrid, VertexSet, neighborhood
from .ordering import final_segment, initial_segment, packing_minimum

EXHAUSTIVE_DEFAULT_LIMIT = 5
EXHAUSTIVE_HARD_LIMIT = 6
SAMPLED_ORDER_LIMIT = 30
DIAGONAL_CHECK_ORDER_LIMIT = 4

_CHUNK = 1 << 16


@dataclass
class MinBoundaryTable:
    """Exact per-cardinality boundary minima with witnesses.

    verified[k] records that the enumerated minimum equals the packing
    minimum, which is the inequality's claim at that cardinality.
    """

    n: int
    min_boundary: list[int]
    packing_min: list[int]
    witness_hex: list[str]
    verified: list[bool]

    def all_verified(self) -> bool:
        return all(self.verified)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "min_boundary": self.min_boundary,
            "packing_min": self.packing_min,
            "witness_hex": self.witness_hex,
            "verified": self.verified,
        }

    def to_csv(self) -> str:
        lines = ["k,min_boundary,packing_min,verified"]
        for k, (mb, pm, ok) in enumerate(
            zip(self.min_boundary, self.packing_min, self.verified)
        ):
            lines.append(f"{k},{mb},{pm},{str(ok).lower()}")
        return "\n".join(lines) + "\n"


def _scan_range(n: int, start: int, stop: int) -> tuple[list[int], list[int]]:
    """Per-cardinality (min boundary, witness counter) over one id range."""
    grid = TriGrid(n)
    nv = grid.vertex_count
    best = [nv + 1] * (nv + 1)
    witness = [0] * (nv + 1)
    for s in range(start, stop, _CHUNK):
        ids = np.arange(s, min(s + _CHUNK, stop), dtype=np.uint64)
        mat = bulk.subsets_from_ids(grid, ids)
        card = mat.sum(axis=1, dtype=np.int64)
        bsize = bulk.boundary_sizes(grid, mat)
        for k in range(nv + 1):
            sel = card == k
            if not sel.any():
                continue
            local = bsize[sel]
            i = int(np.argmin(local))
            if local[i] < best[k]:
                best[k] = int(local[i])
                witness[k] = int(ids[sel][i])
    return best, witness


def exhaustive_min_boundary(
    grid: TriGrid, limit: int = EXHAUSTIVE_DEFAULT_LIMIT, workers: int = 1
) -> MinBoundaryTable:
    """Enumerate every subset of T_n and tabulate per-cardinality minima.

    Refuses n above the limit (default 5, hard cap 6: pass limit=6
    explicitly to accept the ~268M-subset run).  Larger orders should use
    sampled_check instead.
    """
    n = grid.n
    if n > min(limit, EXHAUSTIVE_HARD_LIMIT):
        raise ValueError(
            f"T_{n} has 2^{grid.vertex_count} subsets; exhaustive enumeration is "
            f"capped at n = {min(limit, EXHAUSTIVE_HARD_LIMIT)} (use sampled_check "
            f"for larger orders)"
        )
    nv = grid.vertex_count
    total = 1 << nv
    if workers > 1:
        shard = -(-total // workers)
        ranges = [(n, s, min(s + shard, total)) for s in range(0, total, shard)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_range, *zip(*ranges)))
    else:
        parts = [_scan_range(n, 0, total)]
    best = [nv + 1] * (nv + 1)
    witness = [0] * (nv + 1)
    for part_best, part_witness in parts:  # per-k min merge, order-independent
        for k in range(nv + 1):
            if part_best[k] < best[k]:
                best[k] = part_best[k]
                witness[k] = part_witness[k]
    packing = [packing_minimum(grid, k) for k in range(nv + 1)]
    width = (nv + 3) // 4
    return MinBoundaryTable(
        n=n,
        min_boundary=best,
        packing_min=packing,
        witness_hex=[format(w, f"0{width}x") for w in witness],
        verified=[b == p for b, p in zip(best, packing)],
    )


@dataclass
class SampledReport:
    """Randomized spot check: every sample must respect the packing minimum."""

    n: int
    samples: int
    seed: int
    checked: int
    violations: list[dict]
    min_slack: int | None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "samples": self.samples,
            "seed": self.seed,
            "checked": self.checked,
            "violations": self.violations,
            "min_slack": self.min_slack,
            "ok": self.ok,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=2) + "\n"


def sampled_check(grid: TriGrid, samples: int, seed: int) -> SampledReport:
    """Check |boundary(A)| >= packing_min(|A|) on seeded random subsets.

    A violation would falsify the inequality and therefore indicates an
    implementation bug; the report carries the offending witnesses.
    """
    if grid.n > SAMPLED_ORDER_LIMIT:
        raise ValueError(f"sampled check supports n <= {SAMPLED_ORDER_LIMIT}")
    nv = grid.vertex_count
    packing = np.array([packing_minimum(grid, k) for k in range(nv + 1)])
    rng = np.random.default_rng(seed)
    width = (nv + 3) // 4
    violations: list[dict] = []
    min_slack: int | None = None
    done = 0
    while done < samples:
        count = min(_CHUNK, samples - done)
        mat = bulk.random_subsets(grid, count, rng)
        card = mat.sum(axis=1, dtype=np.int64)
        bsize = bulk.boundary_sizes(grid, mat)
        slack = bsize - packing[card]
        lo = int(slack.min()) if count else None
        if lo is not None:
            min_slack = lo if min_slack is None else min(min_slack, lo)
        for i in np.nonzero(slack < 0)[0]:
            bits = bulk.pack_rows(mat[i : i + 1])[0]
            violations.append(
                {
                    "k": int(card[i]),
                    "boundary": int(bsize[i]),
                    "packing_min": int(packing[card[i]]),
                    "witness_hex": format(bits, f"0{width}x"),
                }
            )
        done += count
    return SampledReport(
        n=grid.n,
        samples=samples,
        seed=seed,
        checked=done,
        violations=violations,
        min_slack=min_slack,
    )


@dataclass
class DiagonalSegmentReport:
    """Segment minimality under the two diagonal conditions.

    Case "avoid": over sets disjoint from the diagonal level n, the
    initial segment of equal size has the smallest closed neighborhood.
    Case "contain": over sets including the whole diagonal, the final
    segment does.  min_slack_* [k] is None where no admissible set of
    size k exists.
    """

    n: int
    min_slack_avoid: list[int | None]
    min_slack_contain: list[int | None]
    violations: list[dict]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "min_slack_avoid": self.min_slack_avoid,
            "min_slack_contain": self.min_slack_contain,
            "violations": self.violations,
            "ok": self.ok,
        }


def diagonal_segment_check(grid: TriGrid) -> DiagonalSegmentReport:
    """Exhaustive diagonal-conditioned check of segment minimality (n <= 4)."""
    if grid.n > DIAGONAL_CHECK_ORDER_LIMIT:
        raise ValueError(f"exhaustive diagonal check supports n <= {DIAGONAL_CHECK_ORDER_LIMIT}")
    n = grid.n
    nv = grid.vertex_count
    diag_bits = 0
    for v1 in range(n + 1):
        diag_bits |= 1 << grid.index((v1, n - v1))
    off_ids = [i for i in range(nv) if not diag_bits >> i & 1]
    seg_nbhd_init = [
        len(neighborhood(grid, initial_segment(grid, k))) for k in range(nv + 1)
    ]
    seg_nbhd_final = [
        len(neighborhood(grid, final_segment(grid, k))) for k in range(nv + 1)
    ]
    slack_avoid: list[int | None] = [None] * (nv + 1)
    slack_contain: list[int | None] = [None] * (nv + 1)
    violations: list[dict] = []
    width = (nv + 3) // 4
    for counter in range(1 << len(off_ids)):
        bits = 0
        c = counter
        idx = 0
        while c:
            if c & 1:
                bits |= 1 << off_ids[idx]
            c >>= 1
            idx += 1
        for case, a_bits in (("avoid", bits), ("contain", bits | diag_bits)):
            k = a_bits.bit_count()
            nbhd = (a_bits | grid.spread_bits(a_bits)).bit_count()
            ref = seg_nbhd_init[k] if case == "avoid" else seg_nbhd_final[k]
            slack = nbhd - ref
            table = slack_avoid if case == "avoid" else slack_contain
            if table[k] is None or slack < table[k]:
                table[k] = slack
            if slack < 0:
                violations.append(
                    {"case": case, "k": k, "witness_hex": format(a_bits, f"0{width}x")}
                )
    return DiagonalSegmentReport(
        n=n,
        min_slack_avoid=slack_avoid,
        min_slack_contain=slack_contain,
        violations=violations,
    )


def lower_bound_certificate(grid: TriGrid, m: int) -> bool:
    """Certify that the inspection number of T_n exceeds m.

    Fixes i = (m+1) + (m+2) + ... + (n+1) and requires packing_min(s) >= m
    for every size s with i < s < i + m; an empty window certifies
    vacuously (m = 0 always does).  Soundness rests on the boundary
    inequality, so only packing minima are consulted, never enumeration.
    """
    n = grid.n
    if not 0 <= m <= n + 1:
        raise ValueError(f"certificate budget must be in [0, {n + 1}], got {m}")
    i = sum(range(m + 1, n + 2))
    return all(packing_minimum(grid, s) >= m for s in range(i + 1, i + m))
