"""Compare the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_backends.py [--repeat 3] [--json]

Each workload runs through both backends on identical inputs; outputs
must match, and the table reports best-of-``repeat`` wall time.
"""

import argparse
import json
import random
import sys
import time

from bvlattice import _backend


def workloads(seed):
    rng = random.Random(seed)

    def rows(k, n, lo=-9, hi=9):
        return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(k)]

    dets = [rows(10, 10) for _ in range(2000)]
    big_dets = [rows(6, 6, -(2**40), 2**40) for _ in range(500)]
    minors = rows(8, 16)
    box_basis = rows(3, 6, -2, 2)
    return [
        ("det 10x10 x2000", lambda core: [core.det(m) for m in dets]),
        ("det 6x6 huge-entry x500", lambda core: [core.det(m) for m in big_dets]),
        ("minor gcd C(16,8)", lambda core: core.minor_gcd_scan(minors, 8)),
        ("enumerate box 41^3", lambda core: core.enumerate_box(box_basis, [20, 20, 20], 6)),
    ]


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    names = _backend.available()
    if "cython" not in names:
        print("compiled kernels are not built; nothing to compare", file=sys.stderr)
        return 1
    py, cy = _backend.get("python"), _backend.get("cython")
    rows = []
    for label, work in workloads(args.seed):
        t_py, out_py = best_of(lambda: work(py), args.repeat)
        t_cy, out_cy = best_of(lambda: work(cy), args.repeat)
        if out_py != out_cy:
            print(f"backends disagree on {label}", file=sys.stderr)
            return 6
        rows.append({"workload": label, "python_ms": t_py * 1e3, "cython_ms": t_cy * 1e3, "speedup": t_py / t_cy})

    if args.json:
        print(json.dumps(rows, indent=2))
    else:
        print(f"{'workload':<26}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
        for r in rows:
            print(f"{r['workload']:<26}{r['python_ms']:12.2f}{r['cython_ms']:12.2f}{r['speedup']:9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
