"""Command-line interface.

Exit codes: 0 = yes/ok, 1 = no, 2 = usage or format error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import os
import sys
from typing import List, Optional

from . import bench as bench_mod
from . import hgr
from .core import Hypergraph, peel_degree_le1
from .cuts import minimum_edge_cut
from .errors import HypergraphError
from .oracle import GenModel, GenSpec, Mode, generate
from .solvers import CutChoice, SolverConfig, Strategy, solve
from .trails import verify_euler_family

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2


def _read_instance(path: str) -> Hypergraph:
    with open(path) as fh:
        return hgr.parse(fh.read())


def _add_solver_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("file")
    p.add_argument("--strategy", choices=["standard", "collapse", "oracle"], default="standard")
    p.add_argument("--cut", choices=["minimal", "minimum"], default=None)
    p.add_argument("--parallel", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", dest="as_json")
    p.add_argument("--verify-spanning", action="store_true")


def _config(args) -> SolverConfig:
    return SolverConfig(
        strategy=Strategy(args.strategy),
        cut_choice=CutChoice(args.cut) if args.cut else None,
        parallel=args.parallel,
        seed=args.seed,
    )


def _solve_command(args, mode: Mode, want_certificate: bool) -> int:
    h = _read_instance(args.file)
    out = solve(h, mode, _config(args))
    spanning = None
    if out.decision and args.verify_spanning:
        spanning = verify_euler_family(h, out.certificate, spanning=True).spanning
    if args.as_json:
        payload = {
            "instance": args.file,
            "mode": mode.value,
            "strategy": args.strategy,
            "decision": out.decision,
            "spanning": spanning,
            "stats": {
                "nodes": out.stats.nodes,
                "max_depth": out.stats.max_depth,
                "assignments": out.stats.assignments,
                "oracle_fallbacks": out.stats.oracle_fallbacks,
                "elapsed": out.stats.elapsed,
            },
        }
        if want_certificate and out.decision:
            payload["certificate"] = hgr.emit_certificate(out.certificate).splitlines()
        print(json.dumps(payload))
    else:
        print("yes" if out.decision else "no")
        if want_certificate and out.decision:
            sys.stdout.write(hgr.emit_certificate(out.certificate))
        if spanning is not None:
            print(f"spanning: {'yes' if spanning else 'no'}")
    return EXIT_YES if out.decision else EXIT_NO


def _min_cut_command(args) -> int:
    h = _read_instance(args.file)
    cut = minimum_edge_cut(h)
    print(f"size {len(cut.edge_ids)}")
    print("edges " + " ".join(f"e{i}" for i in sorted(cut.edge_ids)))
    print("side " + " ".join(str(v) for v in sorted(cut.side)))
    return EXIT_YES


def _peel_command(args) -> int:
    h = _read_instance(args.file)
    res = peel_degree_le1(h)
    print(f"verdict {res.verdict.value}")
    print("removed " + (" ".join(str(v) for v in res.removed) or "-"))
    print(f"remaining {res.reduced.n} vertices, {res.reduced.m} edges")
    return EXIT_YES


def _gen_command(args) -> int:
    lo, hi = args.sizes
    spec = GenSpec(
        max_vertices=args.n,
        max_edges=args.m,
        min_edge_size=lo,
        max_edge_size=hi,
        seed=args.seed,
        model=GenModel.EXHAUSTIVE if args.exhaustive else GenModel.UNIFORM,
    )
    stream = generate(spec)
    if not args.exhaustive:
        stream = itertools.islice(stream, args.count)
    written = 0
    for i, h in enumerate(stream):
        if args.exhaustive and args.count and i >= args.count:
            break
        text = hgr.emit(h)
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            with open(os.path.join(args.out, f"inst_{i:04d}.hgr"), "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
            print("%")
        written += 1
    if args.out:
        print(f"wrote {written} instances to {args.out}")
    return EXIT_YES


def _bench_command(args) -> int:
    names = sorted(f for f in os.listdir(args.corpus) if f.endswith(".hgr"))
    instances = []
    for name in names:
        path = os.path.join(args.corpus, name)
        try:
            instances.append((name, _read_instance(path)))
        except HypergraphError as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            return EXIT_ERROR
    strategies = [Strategy(s) for s in args.strategies.split(",") if s]
    modes = {
        "family": (Mode.FAMILY,),
        "tour": (Mode.TOUR,),
        "both": (Mode.FAMILY, Mode.TOUR),
    }[args.mode]
    report = bench_mod.run_bench(instances, strategies, modes)
    if args.out:
        for path in bench_mod.write_report(report, args.out):
            print(f"wrote {path}")
    else:
        sys.stdout.write(bench_mod.format_report(report))
    return EXIT_YES


def _verify_command(args) -> int:
    h = _read_instance(args.file)
    with open(args.certfile) as fh:
        family = hgr.parse_certificate(fh.read())
    report = verify_euler_family(h, family, spanning=args.verify_spanning)
    if report.ok:
        print("valid" + (" tour" if report.is_tour else " family"))
        return EXIT_YES
    print("invalid")
    for v in report.violations:
        print(f"  {v}")
    return EXIT_NO


def _sizes(text: str):
    parts = text.replace("-", ",").split(",")
    if len(parts) == 1:
        parts = parts * 2
    lo, hi = (int(p) for p in parts)
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hypereuler",
        description="Euler tours and Euler families in hypergraphs",
    )
    sub = p.add_subparsers(dest="command", required=True)

    for name, mode, cert in (
        ("check-family", Mode.FAMILY, False),
        ("check-tour", Mode.TOUR, False),
        ("find-family", Mode.FAMILY, True),
        ("find-tour", Mode.TOUR, True),
    ):
        sp = sub.add_parser(name)
        _add_solver_flags(sp)
        sp.set_defaults(func=lambda a, m=mode, c=cert: _solve_command(a, m, c))

    sp = sub.add_parser("min-cut")
    sp.add_argument("file")
    sp.set_defaults(func=_min_cut_command)

    sp = sub.add_parser("peel")
    sp.add_argument("file")
    sp.set_defaults(func=_peel_command)

    sp = sub.add_parser("gen")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--sizes", type=_sizes, default=(2, 4))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=10)
    sp.add_argument("--exhaustive", action="store_true")
    sp.add_argument("--out")
    sp.set_defaults(func=_gen_command)

    sp = sub.add_parser("bench")
    sp.add_argument("--corpus", required=True)
    sp.add_argument("--strategies", default="standard,collapse")
    sp.add_argument("--mode", choices=["family", "tour", "both"], default="both")
    sp.add_argument("--out")
    sp.set_defaults(func=_bench_command)

    sp = sub.add_parser("verify")
    sp.add_argument("file")
    sp.add_argument("certfile")
    sp.add_argument("--verify-spanning", action="store_true")
    sp.set_defaults(func=_verify_command)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (HypergraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
