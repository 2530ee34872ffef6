"""Command-line entry point.

Exit codes: 0 success, 1 verification failure (an unverified table row, a
trace that does not clear, a failed containment check), 2 usage or input
validation errors, 3 I/O errors.  JSON reports have sorted keys and are
deterministic given the configuration, except for the duration field.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .core import TriGrid, VertexSet, render_ascii
from .compress import compress_left, compress_right
from .isoperimetry import exhaustive_min_boundary, sampled_check
from .lions import LionTrace, claim_check, column_sweep_strategy, couple_to_search
from .ordering import final_segment, initial_segment
from .search import (
    SearchTrace,
    TraceError,
    exact_inspection_number,
    inspection_bounds_report,
    three_stage_strategy,
    verify_trace,
)
from .core import boundary

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_IO = 3


@dataclass
class RunConfig:
    command: str
    params: dict
    fmt: str = "json"
    out: str | None = None
    seed: int = 0
    threads: int = 1


@dataclass
class Report:
    command: str
    config: dict
    payload: Any
    ok: bool
    duration_s: float
    version: str = __version__
    text: str | None = None  # csv/ascii rendering when requested

    def to_json(self) -> str:
        obj = {
            "command": self.command,
            "config": self.config,
            "version": self.version,
            "ok": self.ok,
            "payload": self.payload,
            "duration_s": self.duration_s,
        }
        return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _search_frames(trace: SearchTrace) -> list[str]:
    grid = trace.grid
    frames = []
    for s, dirty in zip(trace.searches, trace.dirty_after):
        labels = {}
        for v in grid.vertices():
            if v in s:
                labels[v] = "Y"
            elif v in dirty:
                labels[v] = "R"
            else:
                labels[v] = "G"
        frames.append(render_ascii(grid, labels))
    return frames


def _lion_frames(trace: LionTrace) -> list[str]:
    grid = trace.grid
    frames = []
    for pos, cont in zip(trace.positions, trace.contaminated):
        labels = {}
        occupied = set(pos)
        for v in grid.vertices():
            if v in occupied:
                labels[v] = "L"
            elif v in cont:
                labels[v] = "R"
            else:
                labels[v] = "G"
        frames.append(render_ascii(grid, labels))
    return frames


def _load_pairs(path: str) -> list:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dispatch(config: RunConfig) -> Report:
    """Run one command; raises TraceError/ValueError for bad inputs."""
    t0 = time.perf_counter()
    p = config.params
    ok = True
    text: str | None = None
    payload: Any

    if config.command == "verify-isoperimetry":
        grid = TriGrid(p["n"])
        if p["exhaustive"]:
            table = exhaustive_min_boundary(
                grid, limit=p["limit"], workers=config.threads
            )
            ok = table.all_verified()
            payload = table.to_json_obj()
            text = table.to_csv()
        else:
            report = sampled_check(grid, p["samples"], config.seed)
            ok = report.ok
            payload = report.to_json_obj()

    elif config.command == "packing":
        grid = TriGrid(p["n"])
        seg = (
            initial_segment(grid, p["k"])
            if p["kind"] == "initial"
            else final_segment(grid, p["k"])
        )
        payload = {
            "n": grid.n,
            "k": p["k"],
            "kind": p["kind"],
            "set": seg.to_pairs(),
            "boundary_size": len(boundary(grid, seg)),
        }

    elif config.command == "compress":
        grid = TriGrid(p["n"])
        vset = VertexSet(grid, _load_pairs(p["set"]))
        op = compress_left if p["side"] == "left" else compress_right
        result = op(grid, vset, p["axis"])
        payload = {
            "n": grid.n,
            "axis": p["axis"],
            "side": p["side"],
            "input": vset.to_pairs(),
            "output": result.to_pairs(),
        }

    elif config.command == "search simulate":
        grid = TriGrid(p["n"])
        trace = three_stage_strategy(grid)
        ok = verify_trace(grid, trace)
        payload = trace.to_json_obj()
        payload["cleared"] = ok
        if p["render"]:
            frames = _search_frames(trace)
            payload["frames"] = frames
            text = "\n".join(frames)

    elif config.command == "search exact":
        grid = TriGrid(p["n"])
        value = exact_inspection_number(grid, p["max_m"])
        payload = {
            "n": grid.n,
            "max_m": p["max_m"],
            "inspection_number": value if value is not None else "unknown",
        }

    elif config.command == "search bounds":
        rows = inspection_bounds_report(p["n_max"], exact_up_to=p["exact_up_to"])
        ok = all(r.upper_verified and r.lower < r.upper for r in rows)
        payload = {"rows": [r.to_json_obj() for r in rows]}
        lines = ["n,lower,upper,upper_verified,exact"]
        for r in rows:
            exact = "" if r.exact is None else r.exact
            lines.append(
                f"{r.n},{r.lower},{r.upper},{str(r.upper_verified).lower()},{exact}"
            )
        text = "\n".join(lines) + "\n"

    elif config.command == "lions simulate":
        grid = TriGrid(p["n"])
        trace = column_sweep_strategy(grid)
        ok = trace.is_winning()
        payload = trace.to_json_obj()
        payload["cleared"] = ok
        if p["render"]:
            frames = _lion_frames(trace)
            payload["frames"] = frames
            text = "\n".join(frames)

    elif config.command == "lions couple":
        with open(p["trace"], "r", encoding="utf-8") as fh:
            trace = LionTrace.from_json_obj(json.load(fh))
        search_trace = couple_to_search(trace)
        ok = (
            claim_check(trace)
            and verify_trace(trace.grid, search_trace)
            and search_trace.max_search_size() <= search_trace.budget
        )
        payload = search_trace.to_json_obj()
        payload["claim_holds"] = claim_check(trace)

    elif config.command == "lions exact":
        from .lions import exact_lion_number

        grid = TriGrid(p["n"])
        value = exact_lion_number(grid, p["max_l"])
        payload = {
            "n": grid.n,
            "max_l": p["max_l"],
            "lion_number": value if value is not None else "unknown",
        }

    elif config.command == "render":
        grid = TriGrid(p["n"])
        labels = {}
        if p["set"]:
            vset = VertexSet(grid, _load_pairs(p["set"]))
            labels = {v: "#" for v in vset}
        text = render_ascii(grid, labels, row_n_top=not p["bottom_up"])
        payload = {"n": grid.n, "ascii": text}

    else:
        raise ValueError(f"unknown command {config.command!r}")

    duration = time.perf_counter() - t0
    return Report(
        command=config.command,
        config={
            "params": p,
            "format": config.fmt,
            "seed": config.seed,
            "threads": config.threads,
        },
        payload=payload,
        ok=ok,
        duration_s=duration,
        text=text,
    )


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("json", "csv", "ascii"), default="json")
    sub.add_argument("--out", help="write the report to this path instead of stdout")
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trigrid",
        description="Isoperimetric minima and pursuit-evasion games on triangular grids",
    )
    parser.add_argument("--version", action="version", version=f"trigrid {__version__}")
    top = parser.add_subparsers(dest="command", required=True)

    sp = top.add_parser("verify-isoperimetry", help="check the packing-minimum table")
    sp.add_argument("--n", type=int, required=True)
    mode = sp.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true")
    mode.add_argument("--samples", type=int)
    sp.add_argument("--limit", type=int, default=5, help="exhaustive order cap")
    _add_common(sp)

    sp = top.add_parser("packing", help="emit a segment packing and its boundary size")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--kind", choices=("initial", "final"), required=True)
    _add_common(sp)

    sp = top.add_parser("compress", help="apply a section compression to a set file")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--axis", type=int, choices=(1, 2), required=True)
    sp.add_argument("--side", choices=("left", "right"), required=True)
    sp.add_argument("--set", required=True, help="JSON file of [v1, v2] pairs")
    _add_common(sp)

    search = top.add_parser("search", help="zero-visibility search game")
    ssub = search.add_subparsers(dest="subcommand", required=True)
    sp = ssub.add_parser("simulate", help="emit and verify the three-stage sweep")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--render", action="store_true")
    _add_common(sp)
    sp = ssub.add_parser("exact", help="exact inspection number at tiny order")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-m", type=int, required=True)
    _add_common(sp)
    sp = ssub.add_parser("bounds", help="per-order bound table")
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--exact-up-to", type=int, default=1)
    _add_common(sp)

    lions = top.add_parser("lions", help="lions-and-contamination game")
    lsub = lions.add_subparsers(dest="subcommand", required=True)
    sp = lsub.add_parser("simulate", help="emit and verify the column sweep")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--render", action="store_true")
    _add_common(sp)
    sp = lsub.add_parser("couple", help="derive a search trace from a lion trace")
    sp.add_argument("--trace", required=True, help="lion trace JSON file")
    _add_common(sp)
    sp = lsub.add_parser("exact", help="exact lion number at tiny order")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-l", type=int, required=True)
    _add_common(sp)

    sp = top.add_parser("render", help="ASCII rendering of the grid or a set file")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--set", help="JSON file of [v1, v2] pairs")
    sp.add_argument("--bottom-up", action="store_true", help="row 0 on the first line")
    _add_common(sp)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    command = args.command
    if getattr(args, "subcommand", None):
        command = f"{args.command} {args.subcommand}"
    params: dict = {}
    if command == "verify-isoperimetry":
        params = {
            "n": args.n,
            "exhaustive": bool(args.exhaustive),
            "samples": args.samples if args.samples is not None else 10000,
            "limit": args.limit,
        }
        if not args.exhaustive and args.samples is None:
            params["exhaustive"] = args.n <= 5
    elif command == "packing":
        params = {"n": args.n, "k": args.k, "kind": args.kind}
    elif command == "compress":
        params = {"n": args.n, "axis": args.axis, "side": args.side, "set": args.set}
    elif command == "search simulate":
        params = {"n": args.n, "render": bool(args.render)}
    elif command == "search exact":
        params = {"n": args.n, "max_m": args.max_m}
    elif command == "search bounds":
        params = {"n_max": args.n_max, "exact_up_to": args.exact_up_to}
    elif command == "lions simulate":
        params = {"n": args.n, "render": bool(args.render)}
    elif command == "lions couple":
        params = {"trace": args.trace}
    elif command == "lions exact":
        params = {"n": args.n, "max_l": args.max_l}
    elif command == "render":
        params = {"n": args.n, "set": args.set, "bottom_up": bool(args.bottom_up)}
    return RunConfig(
        command=command,
        params=params,
        fmt=args.format,
        out=args.out,
        seed=args.seed,
        threads=args.threads,
    )


def _emit(report: Report, config: RunConfig) -> int:
    if config.fmt == "json":
        body = report.to_json()
    else:
        if report.text is None:
            print(
                f"error: --format {config.fmt} is not available for {config.command}",
                file=sys.stderr,
            )
            return EXIT_USAGE
        body = report.text
    if config.out:
        try:
            with open(config.out, "w", encoding="utf-8") as fh:
                fh.write(body)
        except OSError as exc:
            print(f"error: cannot write {config.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(body)
    return EXIT_OK if report.ok else EXIT_VERIFY


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(args)
    try:
        report = dispatch(config)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (TraceError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return _emit(report, config)


if __name__ == "__main__":
    sys.exit(main())
