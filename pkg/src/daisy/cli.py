"""Command-line front end.

JSON goes to stdout (the machine interface), human-readable summaries go
to stderr.  Exit codes: 0 success, 1 verification or claim failure, 2
usage error.  Every command is deterministic given its flags; commands
that sample require an explicit --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import asympt, bounds, cyclic, reproduce
from .hypergraph import (
    daisy_hypergraph,
    is_daisy_free,
    read_edge_list,
    write_edge_list,
)
from .subsets import EnumerationBudgetError


def _default_threads() -> int:
    return os.cpu_count() or 1


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_construct(args) -> int:
    if args.kind == "shift":
        spec = cyclic.ShiftGraphSpec(n=args.n, r=args.r, t=args.t, j=args.j)
        graph = cyclic.build_shift_graph(spec)
    elif args.kind == "residue":
        classes = [int(c) for c in args.classes.split(",")] if args.classes else []
        graph = cyclic.residue_class_graph(args.n, args.r, classes)
    elif args.kind == "augment":
        base = read_edge_list(args.base)
        graph = cyclic.augmented_blowup(base, args.t, args.j)
    else:
        graph = cyclic.h44_recursive_graph(args.s)
    write_edge_list(graph, args.out)
    result = {"kind": args.kind, "out": str(args.out), "n": graph.n, "r": graph.r,
              "edges": graph.num_edges}
    free = None
    if args.verify is not None:
        free, witness = is_daisy_free(graph, args.verify)
        result["verify_k"] = args.verify
        result["free"] = free
        if witness is not None:
            result["witness"] = {
                "vertex_set": list(witness.vertex_set),
                "contained_edges": [list(e) for e in witness.contained_edges],
            }
    _emit(result)
    if free is not None:
        print("FREE" if free else "NOT FREE", file=sys.stderr)
        if not free:
            return 1
    return 0


def _parse_ex(raw: str) -> Fraction:
    return Fraction(raw)


def cmd_bound(args) -> int:
    if args.formula == "c3a":
        report = bounds.bound_C3a(args.n, args.r)
    elif args.formula == "c1":
        report = bounds.bound_C1(args.n, args.r, args.k)
    elif args.formula == "t3":
        report = bounds.bound_T3(_parse_ex(args.ex), args.n, args.r, args.k)
    elif args.formula == "recurs":
        report = bounds.bound_recurs(_parse_ex(args.ex), args.n, args.r, args.k, args.s)
    elif args.formula == "cinf":
        report = bounds.pi_Cinf(_parse_ex(args.ex), args.n, args.r, args.k, args.M)
    elif args.formula == "blowup":
        report = bounds.pi_blowup(_parse_ex(args.ex), args.n, args.r)
    elif args.formula == "chrom":
        h = read_edge_list(args.graph) if args.graph else daisy_hypergraph(args.r, args.k)
        report = bounds.bound_chrom(args.n, h.r, h)
    else:  # pi-r
        verdict = bounds.pi_r_sandwich(args.r)
        value = verdict["value"]
        _emit(
            {
                "r": args.r,
                "n_star": verdict["n_star"],
                "value": f"{value.numerator}/{value.denominator}",
                "decimal": bounds.render_decimal(value, 10),
                "sandwich": {
                    "lower_certified": verdict["lower_certified"],
                    "upper_certified": verdict["upper_certified"],
                },
            }
        )
        return 0
    _emit(report.to_json_dict())
    return 0


def cmd_profile(args) -> int:
    profile = cyclic.shift_edge_profile_cached(
        args.n, args.r, args.t, args.cache_dir, workers=args.threads
    )
    _emit(profile.to_json_dict())
    return 0


def cmd_optimize(args) -> int:
    report = bounds.optimize_n(args.r, args.k, args.pipeline, s=args.s)
    _emit(report.to_json_dict())
    return 0


def cmd_fx(args) -> int:
    if args.curve:
        lo, hi, step = (float(p) for p in args.curve.split(":"))
        xs = []
        x = lo
        while x <= hi + 1e-12:
            xs.append(round(x, 12))
            x += step
        sys.stdout.write(asympt.f_curve_csv(xs, args.M))
        return 0
    if args.max:
        if args.little:
            x0, val = asympt.maximize_f()
        else:
            x0, val = asympt.maximize_F(args.M)
        _emit(
            {
                "function": "f" if args.little else "F",
                "x_star": x0,
                "lo": float(val.lo),
                "hi": float(val.hi),
            }
        )
        return 0
    if args.x is None:
        print("fx needs --x, --max, or --curve", file=sys.stderr)
        return 2
    val = asympt.eval_f(args.x) if args.little else asympt.eval_F(args.x, args.M)
    _emit(
        {
            "function": "f" if args.little else "F",
            "x": args.x,
            "lo": float(val.lo),
            "hi": float(val.hi),
        }
    )
    return 0


def cmd_spacing(args) -> int:
    est = asympt.estimate_spacing(args.r, args.t, args.samples, args.seed, workers=args.threads)
    result = {
        "r": est.r,
        "t": est.t,
        "samples": est.samples,
        "seed": est.seed,
        "mean": est.mean,
        "stderr": est.stderr,
    }
    if args.edge_frequency:
        freq = cyclic.continuous_edge_frequency(
            args.r, args.t, args.samples, args.seed, workers=args.threads
        )
        result["edge_frequency"] = freq.frequency
        result["edge_frequency_stderr"] = freq.stderr
    if args.csv:
        sys.stdout.write(asympt.spacing_csv([est]))
    else:
        _emit(result)
    return 0


def cmd_reproduce(args) -> int:
    rows = reproduce.run_reproduction(
        cache_dir=args.cache_dir,
        threads=args.threads,
        seed=args.seed,
        samples=args.samples,
    )
    payload = reproduce.rows_to_json(rows)
    print(payload)
    if args.out:
        Path(args.out).write_text(payload + "\n", encoding="utf-8")
    print(reproduce.rows_to_table(rows), file=sys.stderr)
    return reproduce.exit_code(rows)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="daisy",
        description="Daisy-free hypergraph constructions and certified Turan-type bounds",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=_default_threads(),
        help="worker count for scans and sampling (results are worker-count invariant)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a graph and write its edge list")
    p.add_argument("kind", choices=["shift", "residue", "augment", "h44"])
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--s", type=int, help="doubling levels for h44")
    p.add_argument("--classes", help="comma-separated residues for residue graphs")
    p.add_argument("--base", help="edge-list file with the base graph for augment")
    p.add_argument("--out", required=True)
    p.add_argument("--verify", type=int, help="check H_k^r-freeness for this k")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("bound", help="evaluate one bound formula exactly")
    p.add_argument(
        "formula",
        choices=["c1", "c3a", "t3", "recurs", "cinf", "blowup", "chrom", "pi-r"],
    )
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--M", type=int, default=16)
    p.add_argument("--ex", help="input ex value (integer or p/q)")
    p.add_argument("--graph", help="edge-list file for chrom")
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("profile", help="per-shift edge counts from one scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--cache-dir")
    p.set_defaults(fn=cmd_profile)

    p = sub.add_parser("optimize", help="scan n for the best density pipeline")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--pipeline", choices=list(bounds.PIPELINES), required=True)
    p.add_argument("--s", type=int)
    p.set_defaults(fn=cmd_optimize)

    p = sub.add_parser("fx", help="evaluate or maximize the F (or f) envelope")
    p.add_argument("--x", help="evaluation point (decimal string)")
    p.add_argument("--max", action="store_true")
    p.add_argument("--little", action="store_true", help="use f instead of F")
    p.add_argument("--M", type=int, default=64, help="series truncation")
    p.add_argument("--curve", help="lo:hi:step CSV sweep to stdout")
    p.set_defaults(fn=cmd_fx)

    p = sub.add_parser("spacing", help="Monte Carlo estimate of e_{r,t}")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--edge-frequency", action="store_true")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(fn=cmd_spacing)

    p = sub.add_parser("reproduce", help="run the full claim battery")
    p.add_argument("--cache-dir", help="cache directory for the big profiles")
    p.add_argument("--seed", type=int, default=reproduce.DEFAULT_SEED)
    p.add_argument("--samples", type=int, default=reproduce.DEFAULT_SAMPLES)
    p.add_argument("--out", help="also write the JSON report here")
    p.set_defaults(fn=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, EnumerationBudgetError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
