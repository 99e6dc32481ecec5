"""Command-line interface.

Results go to stdout as JSON, diagnostics to stderr.  Exit codes: 0 success,
1 internal invariant violation (a bug), 2 bad input or failed precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import berge, cyclefinder, generate, hypergraph, lagrangian, oracle, pathfinder, rainbow
from .errors import InternalInvariantViolation, PreconditionError


def _load(path: str) -> hypergraph.Hypergraph:
    if path == "-":
        text = sys.stdin.read()
        return hypergraph.parse_json(text) if text.lstrip().startswith("{") else hypergraph.parse_text(text)
    return hypergraph.load(path)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=None)
    sys.stdout.write("\n")


def cmd_validate(args) -> int:
    h = _load(args.file)
    if args.sizes:
        hypergraph.validate(h.edges, h.n, [int(s) for s in args.sizes.split(",")])
    _emit({"valid": True, "n": h.n, "m": h.m, "sizes": sorted({len(e) for e in h.edges})})
    return 0


def cmd_shadow(args) -> int:
    sh = hypergraph.shadow(_load(args.file))
    _emit({"n": sh.n, "pairs": [list(p) for p in sorted(sh.pairs)], "complete": sh.is_complete})
    return 0


def cmd_covering(args) -> int:
    h = _load(args.file)
    _emit({"covering": hypergraph.is_covering(h), "min_codegree": hypergraph.min_codegree(h)})
    return 0


def cmd_find_path(args) -> int:
    _emit(pathfinder.find_hamiltonian_path(_load(args.file)).to_json())
    return 0


def cmd_find_cycle(args) -> int:
    h = _load(args.file)
    if args.all:
        cycles = cyclefinder.find_all_cycles(h, fallback_oracle=args.fallback_oracle)
        _emit([cycles[s].to_json() for s in sorted(cycles)])
    else:
        s = h.n if args.length is None else args.length
        _emit(cyclefinder.find_cycle_of_length(h, s, fallback_oracle=args.fallback_oracle).to_json())
    return 0


def cmd_find_triangle(args) -> int:
    _emit(cyclefinder.find_triangle(_load(args.file)).to_json())
    return 0


def cmd_verify(args) -> int:
    h = _load(args.file)
    text = sys.stdin.read() if args.cert == "-" else Path(args.cert).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"certificate is not valid JSON: {exc}") from None
    certs = data if isinstance(data, list) else [data]
    results = [berge.verify(h, berge.certificate_from_json(c)) for c in certs]
    _emit({"valid": all(results), "results": results})
    if not all(results):
        print("certificate does not verify", file=sys.stderr)
        return 2
    return 0


def cmd_oracle(args) -> int:
    h = _load(args.file)
    if args.kind == "cycle":
        found = oracle.exists_cycle(h, args.s, method=args.method)
    else:
        found = oracle.exists_path(h, args.s, method=args.method)
    _emit({"kind": args.kind, "length": args.s, "exists": found is not None,
           "certificate": found.to_json() if found is not None else None})
    return 0


def cmd_remark5(args) -> int:
    _emit(oracle.remark5_experiment(jobs=args.jobs))
    return 0


def cmd_conjecture(args) -> int:
    _emit(oracle.conjecture_search(args.k, args.n, args.mode, budget=args.budget, seed=args.seed, jobs=args.jobs))
    return 0


def cmd_lagrangian(args) -> int:
    h = _load(args.file)
    res = lagrangian.maximize(h, restarts=args.restarts, seed=args.seed, exact_2graph=args.exact_2graph)
    if args.minimal_support:
        res = lagrangian.minimal_support(h, res)
    _emit(res.to_json())
    return 0


def cmd_verify_bound(args) -> int:
    h = _load(args.file)
    report = lagrangian.verify_bound(h, args.t, args.mode, restarts=args.restarts, seed=args.seed)
    _emit(report)
    if not report["holds"]:
        print("bound violated", file=sys.stderr)
        return 1
    return 0


def cmd_rainbow_export(args) -> int:
    g = rainbow.to_coloring(_load(args.file))
    out = g.to_json()
    out["boundedness"] = rainbow.boundedness(g)
    _emit(out)
    return 0


def cmd_gen(args) -> int:
    h = generate.random_covering_3graph(
        args.n, args.seed, pair_prob=args.pair_prob, extra=args.extra, prune=args.prune
    )
    if args.format == "json":
        _emit(h.to_json())
    else:
        sys.stdout.write(h.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bergecover", description="Berge paths and cycles in covering hypergraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str, file: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        if file:
            sp.add_argument("file", help="hypergraph in .hg text or JSON format ('-' for stdin)")
        sp.set_defaults(func=func)
        return sp

    sp = add("validate", cmd_validate, "check a hypergraph file")
    sp.add_argument("--sizes", help="comma-separated allowed edge sizes, e.g. 2,3")
    add("shadow", cmd_shadow, "print the 2-shadow")
    add("covering", cmd_covering, "test whether every pair is covered")
    add("find-path", cmd_find_path, "Hamiltonian Berge path of a covering [3]-graph")
    sp = add("find-cycle", cmd_find_cycle, "Berge cycle of a given length (default n)")
    sp.add_argument("--length", "-s", type=int)
    sp.add_argument("--all", action="store_true", help="one cycle for every length 3..n")
    sp.add_argument("--fallback-oracle", action="store_true", help="rescue finder failures by exhaustive search")
    add("find-triangle", cmd_find_triangle, "Berge triangle")
    sp = add("verify", cmd_verify, "verify a certificate (or a JSON array of them)")
    sp.add_argument("cert", help="certificate JSON file ('-' for stdin)")

    sp = sub.add_parser("oracle", help="exhaustive Berge cycle/path search")
    sp.add_argument("kind", choices=("cycle", "path"))
    sp.add_argument("file")
    sp.add_argument("-s", type=int, required=True, help="length")
    sp.add_argument("--method", choices=("matching", "backtrack"), default="matching")
    sp.set_defaults(func=cmd_oracle)

    sp = add("remark5", cmd_remark5, "small covering {2,3}-graphs missing a cycle length", file=False)
    sp.add_argument("--jobs", type=int, default=1)
    sp = add("conjecture", cmd_conjecture, "cycle lengths in covering k-graphs, k >= 4", file=False)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    sp.add_argument("--budget", type=int, default=10_000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("lagrangian", cmd_lagrangian, "lower bound on the Lagrangian with a witness")
    sp.add_argument("--restarts", type=int, default=64)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--exact-2graph", action=argparse.BooleanOptionalAction, default=True)
    sp.add_argument("--minimal-support", action="store_true")
    sp = add("verify-bound", cmd_verify_bound, "compare the Lagrangian of a C_t/P_t-free graph with K_{t-1}")
    sp.add_argument("-t", type=int, required=True)
    sp.add_argument("--mode", choices=("cycle", "path"), default="cycle")
    sp.add_argument("--restarts", type=int, default=64)
    sp.add_argument("--seed", type=int, default=0)
    add("rainbow-export", cmd_rainbow_export, "pair coloring by lowest containing edge")

    sp = add("gen", cmd_gen, "random covering [3]-graph", file=False)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--pair-prob", type=float, default=0.0)
    sp.add_argument("--extra", type=int, default=0)
    sp.add_argument("--prune", action="store_true")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InternalInvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        print(json.dumps(getattr(exc, "context", {}), default=str), file=sys.stderr)
        return 1
    except (PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


run = main

if __name__ == "__main__":
    sys.exit(main())
