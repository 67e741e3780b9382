"""Command-line front end: solve, reduce, count, verify, gen.

Exit codes: 0 = YES/true, 1 = NO/false, 2 = input error, 3 = cap exceeded
without a decision. Output is deterministic for identical inputs and
flags, regardless of --threads.
"""

from __future__ import annotations

import argparse
import random
import sys as _sys
from typing import List, Optional

from . import dagtrack, generate, oracle, shortest
from .errors import CapExceeded, NoPathError
from .graph import Digraph, Graph
from .instance_io import (ParseError, format_digraph, format_graph,
                          format_instance, parse_instance)
from .report import SolveReport
from .setsystem import SetSystem, solve_tracking_set, tracking_lower_bound, tracks

DEFAULT_MODE = {"graph": "shortest", "dag": "dag", "setsystem": "setsystem"}


def _load(path: str):
    with open(path) as f:
        return parse_instance(f.read())


def _emit(report: SolveReport, as_json: bool) -> int:
    print(report.to_json() if as_json else report.to_text())
    return 0 if report.result == "YES" else 1


def _solve_setsystem(sys: SetSystem, k: int) -> SolveReport:
    m = len(sys.family)
    if m <= 1:
        return SolveReport("YES", witness=(), paths=m,
                           reason="at most one set; empty tracking set suffices")
    lb = tracking_lower_bound(m)
    if k < lb:
        return SolveReport("NO", paths=m,
                           reason=f"lower bound ceil(lg {m}) = {lb} exceeds k = {k}")
    witness = solve_tracking_set(sys, k)
    if witness is None:
        return SolveReport("NO", paths=m,
                           reason=f"no tracking set of size <= {k} (branching exhausted)")
    return SolveReport("YES", witness=tuple(sorted(witness)), paths=m)


def _oracle_check(report: SolveReport, family, universe: int, k: int):
    """Cross-check a solve decision against the brute-force oracle."""
    best = oracle.brute_min_tracking(family, universe, max_k=k)
    agree = (best is not None) == (report.result == "YES")
    if report.result == "YES" and report.witness is not None:
        agree = agree and len(report.witness) >= (best or 0)
        agree = agree and oracle.brute_is_tracking(family, report.witness)
    if not agree:
        raise AssertionError("oracle disagrees with solver decision")
    print("oracle: agree")


def _cmd_solve(args) -> int:
    kind, inst = _load(args.input)
    mode = args.mode or DEFAULT_MODE[kind]
    if mode == "shortest":
        if kind != "graph":
            print("mode shortest requires a graph instance", file=_sys.stderr)
            return 2
        report = shortest.solve_shortest_paths(inst, args.k, cap=args.cap)
        code = _emit(report, args.json)
        if args.oracle:
            try:
                lg, relab = shortest.reduce_rule_1(inst)
                paths = shortest.enumerate_shortest_paths(lg, cap=args.cap)
                family = [relab.map_set(p) for p in paths]
            except NoPathError:
                family = []
            _oracle_check(report, family, inst.n, args.k)
        return code
    if mode == "dag":
        if kind != "dag":
            print("mode dag requires a dag instance", file=_sys.stderr)
            return 2
        report = dagtrack.solve_dag(inst, args.k)
        code = _emit(report, args.json)
        if args.oracle:
            family = oracle.enumerate_all_paths(inst, cap=args.cap)
            _oracle_check(report, family, inst.n, args.k)
        return code
    # setsystem mode: native set systems, or graphs via path enumeration
    if kind == "graph":
        try:
            lg, relab = shortest.reduce_rule_1(inst)
        except NoPathError:
            return _emit(SolveReport("YES", witness=(), paths=0,
                                     reason="no s-t path; zero paths are vacuously tracked"),
                         args.json)
        default_cap = 2 ** args.k + 1
        try:
            paths = shortest.enumerate_shortest_paths(
                lg, args.cap if args.cap is not None else default_cap)
        except CapExceeded as exc:
            if args.cap is not None:
                print(f"cap exceeded without decision ({exc.count} paths)",
                      file=_sys.stderr)
                return 3
            return _emit(SolveReport(
                "NO", paths=exc.count, paths_saturated=True,
                reason=f"more than 2^{args.k} shortest paths need more than "
                       f"{args.k} trackers"), args.json)
        sys_ = shortest.to_set_system(paths, lg.base.n)
        report = _solve_setsystem(sys_, args.k)
        if report.witness is not None:
            report.witness = tuple(sorted(relab.map_set(report.witness)))
        code = _emit(report, args.json)
        if args.oracle:
            _oracle_check(report, [relab.map_set(p) for p in paths], inst.n, args.k)
        return code
    if kind != "setsystem":
        print("mode setsystem requires a setsystem or graph instance", file=_sys.stderr)
        return 2
    report = _solve_setsystem(inst, args.k)
    code = _emit(report, args.json)
    if args.oracle:
        _oracle_check(report, inst.family, inst.universe_size, args.k)
    return code


def _relabel_lines(relab) -> str:
    return "".join(f"# relabel {new} {old}\n"
                   for new, old in enumerate(relab.to_original))


def _cmd_reduce(args) -> int:
    kind, inst = _load(args.input)
    if kind == "graph":
        try:
            lg, relab = shortest.reduce_rule_1(inst)
        except NoPathError:
            print("# no s-t path: zero paths, trivially YES")
            return 0
        _sys.stdout.write(format_graph(lg.base))
        _sys.stdout.write(_relabel_lines(relab))
        return 0
    if kind == "dag":
        reduced, _ = dagtrack.reduce_dag(inst)
        if reduced is None:
            print("# singleton after reduction: trivially YES")
            return 0
        _sys.stdout.write(format_digraph(reduced.base))
        _sys.stdout.write(_relabel_lines(reduced.relabeling))
        return 0
    print("reduce supports graph and dag instances only", file=_sys.stderr)
    return 2


def _cmd_count(args) -> int:
    kind, inst = _load(args.input)
    if kind == "graph":
        try:
            lg, _ = shortest.reduce_rule_1(inst)
        except NoPathError:
            print(0)
            return 0
        pc = dagtrack.count_paths(shortest.to_dag(lg), cap=args.cap)
    elif kind == "dag":
        pc = dagtrack.count_paths(inst, cap=args.cap)
    else:
        print("count supports graph and dag instances only", file=_sys.stderr)
        return 2
    if pc.saturated:
        print(f"{args.cap}+")
        return 3
    print(pc.value)
    return 0


def _find_violating_pair(paths, trackers):
    seen = {}
    for p in paths:
        key = frozenset(p) & trackers
        if key in seen:
            return seen[key], p
        seen[key] = p
    return None


def _cmd_verify(args) -> int:
    kind, inst = _load(args.input)
    trackers = frozenset(args.trackers)
    universe = inst.universe_size if kind == "setsystem" else inst.n
    for v in trackers:
        if not (0 <= v < universe):
            print(f"tracker id out of range: {v}", file=_sys.stderr)
            return 2
    if kind == "setsystem":
        ok = tracks(inst.family, trackers)
        print(f"tracking: {'true' if ok else 'false'}")
        if not ok:
            seen = {}
            for idx, s in enumerate(inst.family):
                key = s & trackers
                if key in seen:
                    print(f"violating sets: {seen[key]} {idx}")
                    break
                seen[key] = idx
        return 0 if ok else 1

    if kind == "graph":
        try:
            lg, relab = shortest.reduce_rule_1(inst)
        except NoPathError:
            print("tracking: true")
            print("# no s-t path: vacuously tracked")
            return 0
        paths = [tuple(sorted(relab.map_set(p)))
                 for p in shortest.enumerate_shortest_paths(lg, cap=args.cap)]
        ok = _find_violating_pair(paths, trackers) is None
    else:
        pruned, relab = dagtrack.reduce_rule_2(inst)
        inv = {old: new for new, old in enumerate(relab.to_original)}
        mapped = frozenset(inv[v] for v in trackers if v in inv)
        ok = dagtrack.verify_tracking_condition(pruned, mapped)
        paths = [tuple(sorted(p)) for p in oracle.enumerate_all_paths(inst, cap=args.cap)]
        if args.oracle:
            agree = oracle.brute_is_tracking(paths, trackers) == ok
            if not agree:
                raise AssertionError("oracle disagrees with tracking-condition verifier")
            print("oracle: agree")
    print(f"tracking: {'true' if ok else 'false'}")
    if not ok:
        pair = _find_violating_pair(paths, trackers)
        assert pair is not None
        print("violating paths:")
        for p in pair:
            print("  " + " ".join(str(v) for v in p))
    return 0 if ok else 1


def _cmd_gen(args) -> int:
    rng = random.Random(args.seed)
    if args.kind == "graph":
        inst = generate.random_connected_graph(rng, args.n)
    elif args.kind == "layered":
        inst = generate.random_layered_graph(rng, args.layers, args.width)
    elif args.kind == "dag":
        inst = generate.random_dag(rng, args.n)
    else:
        inst = generate.random_set_system(rng, args.n, args.sets, d=args.d)
    _sys.stdout.write(format_instance(inst))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trackset",
        description="Minimum tracking sets for shortest s-t paths, DAG s-t paths, "
                    "and set systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide whether a size-k tracking set exists")
    p.add_argument("input")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["shortest", "dag", "setsystem"])
    p.add_argument("--cap", type=int, help="path enumeration cap (default 2^k + 1)")
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check the decision against the brute-force oracle")
    p.add_argument("--threads", type=int, default=1,
                   help="worker hint; output is identical for any value")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("reduce", help="emit the reduced instance plus a relabeling map")
    p.add_argument("input")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("count", help="count shortest s-t paths (graph) or s-t paths (dag)")
    p.add_argument("input")
    p.add_argument("--cap", type=int)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("verify", help="check whether a given set is a tracking set")
    p.add_argument("input")
    p.add_argument("--trackers", type=int, nargs="*", default=[])
    p.add_argument("--cap", type=int)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--kind", choices=["graph", "dag", "setsystem", "layered"],
                   required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--sets", type=int, default=6)
    p.add_argument("--d", type=int)
    p.add_argument("--layers", type=int, default=3)
    p.add_argument("--width", type=int, default=3)
    p.set_defaults(func=_cmd_gen)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "k", 0) is not None and getattr(args, "k", 0) < 0:
        print("k must be nonnegative", file=_sys.stderr)
        return 2
    if getattr(args, "threads", 1) < 1:
        print("threads must be at least 1", file=_sys.stderr)
        return 2
    try:
        return args.func(args)
    except (ParseError, OSError, ValueError) as exc:
        print(str(exc), file=_sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"cap exceeded without decision ({exc.count} paths)", file=_sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
