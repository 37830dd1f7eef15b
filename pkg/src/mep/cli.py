"""``mep`` command line: gen, stats, solve, verify, export-dual.

Exit codes: 0 success, 1 bad input or failed verification, 2 solver limit refusal.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import nullcontext
from pathlib import Path

from . import brute, branch, cells
from .errors import LimitExceeded, MEPError
from .generate import SHAPES, GenConfig, generate
from .instance import compute_stats, to_dual_hypergraph
from .io import dump_solution, dump_space, load_solution, load_space
from .solution import check_solution


def _write(text: str, output) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    cfg = GenConfig(n=args.n, m=args.m, shape=args.shape, bbox=args.bbox,
                    max_size=args.max_size, seed=args.seed)
    _write(dump_space(generate(cfg)) + "\n", args.output)
    return 0


def cmd_stats(args) -> int:
    st = compute_stats(load_space(args.input), args.k)
    _write(json.dumps(st.to_json()) + "\n", args.output)
    return 0


def run_solver(space, k: int, algo: str, mode: str = "semantic", d_limit: int = 20,
               trace=None, dedup: bool = False):
    if algo == "brute":
        return brute.solve_brute(space, k)
    if algo == "branch":
        return branch.rec_mep(space, k, dedup=dedup, trace=trace)[0]
    if mode == "paper":
        return cells.solve_cells_paper(space, k, d_limit=d_limit)[0]
    return cells.solve_cells_semantic(space, k, d_limit=d_limit)[0]


def cmd_solve(args) -> int:
    space = load_space(args.input)
    trace_ctx = open(args.trace, "w") if args.trace else nullcontext()
    with trace_ctx as trace:
        for _ in range(args.repeat):
            start = time.perf_counter()
            sol = run_solver(space, args.k, args.algo, args.mode, args.d_limit,
                             trace=trace, dedup=args.dedup)
            elapsed = time.perf_counter() - start
            if args.repeat > 1:
                print(f"{args.algo}: {elapsed:.4f}s", file=sys.stderr)
    _write(dump_solution(sol) + "\n", args.output)
    return 0


def cmd_verify(args) -> int:
    space = load_space(args.input)
    sol = load_solution(args.solution)
    problems = check_solution(space, sol)
    if problems:
        for p in problems:
            print(f"mismatch: {p}")
        return 1
    print("ok")
    return 0


def cmd_export_dual(args) -> int:
    _write(to_dual_hypergraph(load_space(args.input)).to_text(), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mep", description="Maximum exposure problem solvers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--shape", choices=SHAPES, default="rect")
    p.add_argument("--bbox", type=float, default=10.0)
    p.add_argument("--max-size", type=float, default=4.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("stats", help="report n, m, l, d for a budget k")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("solve", help="solve an instance")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", choices=("brute", "branch", "cells"), default="branch")
    p.add_argument("--mode", choices=("semantic", "paper"), default="semantic")
    p.add_argument("--d-limit", type=int, default=cells.DEFAULT_D_LIMIT)
    p.add_argument("--trace", help="write the branching tree as JSON lines to this file")
    p.add_argument("--dedup", action="store_true", help="skip repeated (T, budget) nodes")
    p.add_argument("--repeat", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a solution against an instance")
    p.add_argument("--input", required=True)
    p.add_argument("--solution", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dual", help="write the dual hypergraph")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.set_defaults(func=cmd_export_dual)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except LimitExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except (MEPError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
