"""Command-line front end.

Exit codes: 0 ok, 2 parse error, 3 rank-deficient input, 4 trivial kernel,
5 enumeration budget exceeded, 6 an identity that must hold failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from bvlattice import __version__
from bvlattice._backend import BACKEND
from bvlattice.bench import run_bench
from bvlattice.bounds import bound_report
from bvlattice.errors import (
    BudgetExceeded,
    DegenerateInputError,
    DimensionError,
    EmptyKernelError,
    InconsistencyError,
    ParseError,
    RankError,
)
from bvlattice.hnf import column_hnf
from bvlattice.linalg import rank
from bvlattice.matrixfile import read_matrix
from bvlattice.oracle import DEFAULT_BUDGET
from bvlattice.report import build_report

EXIT_OK, EXIT_PARSE, EXIT_RANK, EXIT_EMPTY_KERNEL, EXIT_BUDGET, EXIT_VIOLATION = 0, 2, 3, 4, 5, 6


def _fmt_matrix(rows, indent="  "):
    rows = [[str(v) for v in r] for r in rows]
    width = max((len(v) for r in rows for v in r), default=1)
    return "\n".join(indent + " ".join(v.rjust(width) for v in r) for r in rows)


def _emit(args, report, text):
    if args.json:
        print(json.dumps(report.to_json_obj(), indent=2))
    else:
        print(text)


def cmd_hnf(args):
    A = read_matrix(args.file)
    res = column_hnf(A)
    rep = build_report(A, budget=args.budget)
    lines = ["H =", _fmt_matrix(res.H.tolist()), f"det(H) = {rep.det_column_lattice}"]
    if args.show_u:
        lines += ["U =", _fmt_matrix(res.U.tolist())]
    if args.json:
        obj = rep.to_json_obj()
        obj["H"] = [[str(v) for v in r] for r in res.H.tolist()]
        if args.show_u:
            obj["U"] = [[str(v) for v in r] for r in res.U.tolist()]
        print(json.dumps(obj, indent=2))
    else:
        print("\n".join(lines))
    return EXIT_OK


def _kernel_input(args):
    A = read_matrix(args.file)
    k, n = A.shape
    r = rank(A)
    if r != k:
        raise RankError(r, k)
    if k == n:
        raise EmptyKernelError(f"{k}x{n} matrix of full rank has trivial kernel")
    return A


def cmd_kernel(args):
    A = _kernel_input(args)
    rep = build_report(A, budget=args.budget)
    text = "\n".join(
        [
            f"kernel basis ({len(rep.kernel_basis)} rows):",
            _fmt_matrix(rep.kernel_basis),
            f"ndet^2 = {rep.ndet_sq}",
        ]
    )
    _emit(args, rep, text)
    return EXIT_OK


def cmd_ndet(args):
    A = read_matrix(args.file)
    rep = build_report(A, budget=args.budget)
    text = "\n".join(
        [
            f"det(A A^T)   = {rep.gram_det_sq}",
            f"det(L_C(A))  = {rep.det_column_lattice}",
            f"ndet^2       = {rep.ndet_sq}",
            f"ndet         ~ {rep.ndet_approx} (approx.)",
        ]
    )
    _emit(args, rep, text)
    return EXIT_OK


def cmd_bound(args):
    A = _kernel_input(args)
    br = bound_report(A)
    rep = build_report(A, witnesses=args.witness, budget=args.budget)
    lines = [
        f"ndet^2             = {br.ndet_sq}",
        f"codim n-k          = {br.codim}",
        f"a = max|a_ij|      = {br.a_max}",
        f"Bombieri-Vaaler    : max|x_i| <= {br.bv_box_radius}  (ndet^(1/(n-k)) ~ {br.bv_approx}, approx.)",
        f"Siegel             : max|x_i| <= {br.siegel_floor}",
    ]
    if rep.witnesses:
        lines.append(f"witness            = {tuple(rep.witnesses[0])}")
    _emit(args, rep, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args):
    A = _kernel_input(args)
    rep = build_report(A, witnesses=True, verify=True, budget=args.budget)
    v = rep.verification
    width = max(len(c.name) for c in v.checks)
    lines = []
    for c in v.checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"{status}  {c.name.ljust(width)}  {c.lhs} {c.relation} {c.rhs}")
    lines.append(f"{sum(c.passed for c in v.checks)}/{len(v.checks)} checks passed")
    if v.kernel_not_involutive:
        lines.append("note: the kernel of the kernel is strictly larger than the row lattice of A")
    _emit(args, rep, "\n".join(lines))
    return EXIT_OK if v.passed else EXIT_VIOLATION


def cmd_bench(args):
    res = run_bench(args.n, args.k, args.trials, args.seed, args.lo, args.hi)
    summary = res.summary()
    summary["backend"] = BACKEND
    if args.json:
        print(json.dumps(summary, indent=2))
    else:
        print(f"bench n={args.n} k={args.k} trials={res.trials} seed={args.seed} backend={BACKEND}")
        if res.trials:
            for label, key in (("HNF route", "hnf_ms"), ("minor-GCD route", "minor_gcd_ms")):
                s = summary[key]
                print(f"  {label:<16} mean {s['mean']:12.3f} ms   max {s['max']:12.3f} ms")
            print(f"  speedup          {res.speedup:.1f}x")
            print(f"  agreement        {res.trials - len(res.disagreements)}/{res.trials}")
    if res.disagreements:
        print(f"routes disagree on instances {res.disagreements}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


def _global_flags(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
    parser.add_argument(
        "--budget", type=int, default=d(DEFAULT_BUDGET), help="cap on enumeration candidates (default 10^7)"
    )
    parser.add_argument("--seed", type=int, default=d(0), help="random seed for bench")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bvlattice", description="Exact kernel lattices and Bombieri-Vaaler bounds for A x = 0."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, file=True):
        p = sub.add_parser(name, help=help)
        _global_flags(p, suppress=True)
        if file:
            p.add_argument("file", help="matrix file (text or JSON); '-' reads stdin")
        p.set_defaults(func=func)
        return p

    p = add("hnf", cmd_hnf, "column Hermite normal form")
    p.add_argument("--show-u", action="store_true", help="also print the unimodular transform")
    add("kernel", cmd_kernel, "kernel lattice basis and ndet^2")
    add("ndet", cmd_ndet, "normalized determinant")
    p = add("bound", cmd_bound, "Bombieri-Vaaler and Siegel height bounds")
    p.add_argument("--witness", action="store_true", help="search for a shortest kernel vector")
    add("verify", cmd_verify, "check every identity against brute force")
    p = add("bench", cmd_bench, "HNF route vs minor enumeration timing", file=False)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--k", type=int, default=4)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--lo", type=int, default=-9)
    p.add_argument("--hi", type=int, default=9)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, DimensionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (RankError, DegenerateInputError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_RANK
    except EmptyKernelError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_EMPTY_KERNEL
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except InconsistencyError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_VIOLATION
