"""Command-line interface.

Exit codes: 0 clean, 1 verified finding (a claim failure or an unexpected
cycle), 2 usage error. Identical invocations produce byte-identical output;
timing is only emitted behind --timing.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import verify as verify_mod
from .actions import ModelId
from .catalog import build_claims
from .errors import UnknownClaim
from .experiments import cycle_census, delooping_experiment
from .models import bounded_graph, to_dot
from .search import (SearchBounds, Unreachable, bfs_reach, stats_csv,
                     trajectory)
from .ternary import to_ternary

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2

_MODELS = {m.value: m for m in ModelId}


def parse_range(text: str) -> range:
    """Inclusive lo..hi range syntax."""
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit() or int(lo) > int(hi):
        raise argparse.ArgumentTypeError(
            f"range must be lo..hi with lo <= hi, got {text!r}")
    return range(int(lo), int(hi) + 1)


def parse_model(text: str) -> ModelId:
    key = text.lower()
    if key not in _MODELS:
        raise argparse.ArgumentTypeError(
            f"model must be one of {', '.join(_MODELS)}, got {text!r}")
    return _MODELS[key]


def positive_int(text: str) -> int:
    if not text.isdigit() or int(text) < 1:
        raise argparse.ArgumentTypeError(f"positive integer required: {text!r}")
    return int(text)


def _default_workers() -> int:
    return int(os.environ.get("COLLATZLAB_WORKERS", "1"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="collatzlab",
        description="Collatz transition-system models, lemma verification "
                    "and graph experiments.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("traj", help="deterministic M0 trajectory of n")
    p.add_argument("n", type=positive_int)
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument("--verbose", action="store_true",
                   help="also show values in base 3")
    p.add_argument("--max-depth", type=positive_int, default=100_000)

    p = sub.add_parser("verify", help="run catalog claims over a range")
    p.add_argument("--claim", default="all",
                   help="claim id, comma-separated ids, or 'all'")
    p.add_argument("--range", type=parse_range, default=range(1, 101),
                   dest="a_range", metavar="LO..HI")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--max-value", type=positive_int, default=None)
    p.add_argument("--max-depth", type=positive_int, default=64)
    p.add_argument("--timing", action="store_true",
                   help="include wall_ms in reports (non-deterministic)")
    p.add_argument("--workers", type=positive_int, default=_default_workers())

    p = sub.add_parser("reach", help="bounded BFS between two values")
    p.add_argument("--model", type=parse_model, required=True)
    p.add_argument("--from", dest="src", type=positive_int, required=True)
    p.add_argument("--to", dest="dst", type=positive_int, required=True)
    p.add_argument("--max-value", type=positive_int, default=None)
    p.add_argument("--max-depth", type=positive_int, default=64)

    p = sub.add_parser("cluster", help="cluster connectivity check")
    p.add_argument("--kind", choices=("five", "three", "nine"), required=True)
    p.add_argument("--k", type=parse_range, required=True, dest="k_range",
                   metavar="LO..HI")
    p.add_argument("--value-bound", type=positive_int, default=2**20)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--timing", action="store_true")

    p = sub.add_parser("deloop", help="E1/E4 edge-removal experiment")
    p.add_argument("--max", type=positive_int, required=True, dest="max_value")
    p.add_argument("--headroom", type=positive_int, default=2**10)
    p.add_argument("--timing", action="store_true")

    p = sub.add_parser("cycles", help="directed cycle census")
    p.add_argument("--model", type=parse_model, required=True)
    p.add_argument("--max", type=positive_int, required=True, dest="max_value")

    p = sub.add_parser("stats", help="stopping-time statistics CSV")
    p.add_argument("--range", type=parse_range, required=True, dest="n_range",
                   metavar="LO..HI")
    p.add_argument("--max-depth", type=positive_int, default=100_000)

    p = sub.add_parser("dot", help="DOT export of a bounded graph")
    p.add_argument("--model", type=parse_model, required=True)
    p.add_argument("--max", type=positive_int, required=True, dest="max_value")
    return parser


def _search_bounds(args, start_hint=1):
    if args.max_value is None:
        return None
    return SearchBounds(max_value=args.max_value, max_depth=args.max_depth)


def _emit_reports(reports, fmt, timing, out):
    if fmt == "json":
        for report in reports:
            out.write(report.to_json(include_timing=timing) + "\n")
    elif fmt == "csv":
        out.write(verify_mod.CSV_HEADER + "\n")
        for report in reports:
            out.write(report.csv_row() + "\n")
    else:
        for report in reports:
            status = "PASS" if report.failed == 0 else "FAIL"
            out.write(f"{status} {report.claim_id} [{report.model}] "
                      f"range {report.range[0]}..{report.range[1]}: "
                      f"{report.passed} pass, {report.failed} fail, "
                      f"{report.skipped} skipped\n")
            for failure in report.failures[:10]:
                out.write(f"  A={failure.input}: {failure.reason}\n")


def _run_claim_chunk(claim_id, lo, hi, max_value, max_depth):
    bounds = (SearchBounds(max_value=max_value, max_depth=max_depth)
              if max_value else None)
    return verify_mod.run_any_claim(claim_id, range(lo, hi + 1), bounds)


def _merge_reports(parts):
    head = parts[0]
    for other in parts[1:]:
        head.range = (head.range[0], other.range[1])
        head.passed += other.passed
        head.failed += other.failed
        head.skipped += other.skipped
        head.failures.extend(other.failures)
        head.wall_ms += other.wall_ms
    head.failures.sort(key=lambda f: f.input)
    return head


def cmd_verify(args, out) -> int:
    claims = build_claims()
    if args.claim == "all":
        ids = verify_mod.all_claim_ids(claims)
    else:
        ids = [c.strip() for c in args.claim.split(",") if c.strip()]
        known = set(verify_mod.all_claim_ids(claims))
        unknown = [c for c in ids if c not in known]
        if unknown:
            print(f"unknown claim(s): {', '.join(unknown)}", file=sys.stderr)
            print("available: " + ", ".join(sorted(known)), file=sys.stderr)
            return EXIT_USAGE
    reports = []
    for claim_id in ids:
        reports.append(_run_claim_whole(args, claim_id))
    _emit_reports(reports, args.format, args.timing, out)
    return EXIT_FINDING if any(r.failed for r in reports) else EXIT_OK


def _run_claim_whole(args, claim_id):
    rng = args.a_range
    workers = args.workers
    if workers <= 1 or len(rng) < 2 * workers:
        return _run_claim_chunk(claim_id, rng.start, rng[-1],
                                args.max_value, args.max_depth)
    import concurrent.futures

    chunk = (len(rng) + workers - 1) // workers
    spans = [(rng.start + i * chunk,
              min(rng.start + (i + 1) * chunk - 1, rng[-1]))
             for i in range(workers) if rng.start + i * chunk <= rng[-1]]
    with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(
            _run_claim_chunk,
            [claim_id] * len(spans), [lo for lo, _ in spans],
            [hi for _, hi in spans], [args.max_value] * len(spans),
            [args.max_depth] * len(spans)))
    return _merge_reports(parts)


def cmd_traj(args, out) -> int:
    path = trajectory(args.n, max_depth=args.max_depth)
    if args.format == "csv":
        out.write("step,value\n")
        for i, v in enumerate(path.values):
            out.write(f"{i},{v}\n")
    else:
        shown = (" ".join(f"{v}({to_ternary(v)})" for v in path.values)
                 if args.verbose else " ".join(str(v) for v in path.values))
        out.write(f"{shown} | steps={len(path)} peak={path.peak}\n")
    return EXIT_OK


def cmd_reach(args, out) -> int:
    bounds = _search_bounds(args) or SearchBounds(
        max_value=max(args.src, args.dst) * 2**20, max_depth=args.max_depth)
    result = bfs_reach(args.model, args.src, args.dst, bounds)
    if isinstance(result, Unreachable):
        kind = "bound-exhausted" if result.bound_exhausted else "unreachable"
        out.write(f"{kind}: {args.src} => {args.dst} under {args.model}\n")
        return EXIT_FINDING
    out.write(result.render() + "\n")
    return EXIT_OK


def cmd_cluster(args, out) -> int:
    report = verify_mod.verify_cluster(args.kind, args.k_range,
                                       value_bound=args.value_bound)
    _emit_reports([report], args.format, args.timing, out)
    return EXIT_FINDING if report.failed else EXIT_OK


def cmd_deloop(args, out) -> int:
    report = delooping_experiment(args.max_value, args.headroom)
    out.write(json.dumps(report.to_dict(include_timing=args.timing),
                         separators=(",", ":")) + "\n")
    clean = report.phase3_matches_m0 and all(
        p.all_reached for p in report.phases if p.phase in (1, 3))
    return EXIT_OK if clean else EXIT_FINDING


def cmd_cycles(args, out) -> int:
    cycles = cycle_census(args.model, args.max_value)
    for cycle in cycles:
        out.write(" ".join(str(v) for v in cycle) + "\n")
    if args.model is ModelId.M0 and cycles != [[1, 4, 2]]:
        return EXIT_FINDING
    return EXIT_OK


def cmd_stats(args, out) -> int:
    out.write(stats_csv(args.n_range, max_depth=args.max_depth))
    return EXIT_OK


def cmd_dot(args, out) -> int:
    out.write(to_dot(bounded_graph(args.model, args.max_value)))
    return EXIT_OK


_COMMANDS = {
    "traj": cmd_traj,
    "verify": cmd_verify,
    "reach": cmd_reach,
    "cluster": cmd_cluster,
    "deloop": cmd_deloop,
    "cycles": cmd_cycles,
    "stats": cmd_stats,
    "dot": cmd_dot,
}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.command](args, out)
    except (UnknownClaim, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
