"""Timing the HNF route against minor enumeration for the same determinant."""

from __future__ import annotations

import hashlib
import random
import statistics
import time
from dataclasses import dataclass, field

from bvlattice.hnf import det_column_lattice
from bvlattice.linalg import IntMatrix, rank
from bvlattice.oracle import minor_gcd


def bench_instances(n, k, trials, seed, lo=-9, hi=9):
    """Deterministic stream of random full-row-rank k x n matrices."""
    rng = random.Random(seed)
    for _ in range(trials):
        while True:
            A = IntMatrix(k, n, [rng.randint(lo, hi) for _ in range(k * n)])
            if rank(A) == k:
                yield A
                break


@dataclass
class BenchResult:
    n: int
    k: int
    seed: int
    hnf_ms: list[float] = field(default_factory=list)
    minor_ms: list[float] = field(default_factory=list)
    values: list[tuple[int, int]] = field(default_factory=list)
    digest: str = ""

    @property
    def trials(self):
        return len(self.values)

    @property
    def disagreements(self):
        return [i for i, (a, b) in enumerate(self.values) if a != b]

    @property
    def speedup(self):
        if not self.values or sum(self.hnf_ms) == 0:
            return None
        return sum(self.minor_ms) / sum(self.hnf_ms)

    def summary(self):
        def stats(xs):
            return {"mean": statistics.fmean(xs), "max": max(xs)} if xs else {"mean": None, "max": None}

        return {
            "n": self.n,
            "k": self.k,
            "seed": self.seed,
            "trials": self.trials,
            "instance_digest": self.digest,
            "hnf_ms": stats(self.hnf_ms),
            "minor_gcd_ms": stats(self.minor_ms),
            "speedup": self.speedup,
            "agree": not self.disagreements,
            "values": [[str(a), str(b)] for a, b in self.values],
        }


def run_bench(n, k, trials, seed, lo=-9, hi=9) -> BenchResult:
    res = BenchResult(n, k, seed)
    h = hashlib.sha256()
    for A in bench_instances(n, k, trials, seed, lo, hi):
        h.update(repr(A.entries).encode())
        t0 = time.perf_counter()
        d_hnf = det_column_lattice(A)
        t1 = time.perf_counter()
        d_minor = minor_gcd(A)
        t2 = time.perf_counter()
        res.hnf_ms.append((t1 - t0) * 1e3)
        res.minor_ms.append((t2 - t1) * 1e3)
        res.values.append((d_hnf, d_minor))
    res.digest = h.hexdigest()
    return res
