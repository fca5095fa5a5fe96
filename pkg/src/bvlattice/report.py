"""Everything the command line knows about one matrix, in one record."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from math import prod

from bvlattice.bounds import approx_root, bv_box_radius, siegel_floor
from bvlattice.errors import RankError
from bvlattice.hnf import column_hnf
from bvlattice.kernel import kernel_basis, ndet_sq
from bvlattice.linalg import IntMatrix, gram_det_sq, rank
from bvlattice.oracle import DEFAULT_BUDGET, VerificationRecord, shortest_kernel_vector, verify_theorems


@dataclass
class LatticeReport:
    rows: int
    cols: int
    rank: int
    hnf_diag: list[int]
    det_column_lattice: int
    gram_det_sq: int
    ndet_sq: int
    ndet_approx: str
    bv_box_radius: int | None = None
    siegel_floor: int | None = None
    kernel_basis: list[list[int]] | None = None
    witnesses: list[list[int]] | None = None
    verification: VerificationRecord | None = None
    timings_ms: dict[str, float] = field(default_factory=dict)

    def to_json_obj(self) -> dict:
        """JSON-ready dict; every exact integer becomes a decimal string."""

        def s(v):
            if v is None:
                return None
            if isinstance(v, bool):
                return v
            if isinstance(v, int):
                return str(v)
            if isinstance(v, (list, tuple)):
                return [s(t) for t in v]
            return v

        out = {
            "rows": self.rows,
            "cols": self.cols,
            "rank": self.rank,
            "hnf_diag": s(self.hnf_diag),
            "det_column_lattice": s(self.det_column_lattice),
            "gram_det_sq": s(self.gram_det_sq),
            "ndet_sq": s(self.ndet_sq),
            "ndet_approx": self.ndet_approx,
            "bv_box_radius": s(self.bv_box_radius),
            "siegel_floor": s(self.siegel_floor),
            "kernel_basis": s(self.kernel_basis),
            "witnesses": s(self.witnesses),
            "verification": None,
            "timings_ms": {k: round(v, 3) for k, v in self.timings_ms.items()},
        }
        v = self.verification
        if v is not None:
            out["verification"] = {
                "passed": v.passed,
                "kernel_not_involutive": v.kernel_not_involutive,
                "checks": [
                    {"name": c.name, "passed": c.passed, "relation": c.relation, "lhs": s(c.lhs), "rhs": s(c.rhs)}
                    for c in v.checks
                ],
                "minima": {
                    "vectors": [s(list(w.vector)) for w in v.minima.vectors],
                    "norms": s(list(v.minima.norms)),
                    "product_sq": s(v.minima.product_sq),
                },
            }
        return out


@contextmanager
def _timed(timings, name):
    t0 = time.perf_counter()
    yield
    timings[name] = (time.perf_counter() - t0) * 1e3


def build_report(A: IntMatrix, witnesses=False, verify=False, budget=DEFAULT_BUDGET) -> LatticeReport:
    """Compute the report for a full-row-rank ``A``.

    Kernel-dependent fields stay ``None`` when ``A`` is square.
    """
    t = {}
    k, n = A.shape
    with _timed(t, "rank"):
        r = rank(A)
    if r != k:
        raise RankError(r, k)
    with _timed(t, "hnf"):
        res = column_hnf(A)
    with _timed(t, "ndet"):
        g = gram_det_sq(A)
        nd = ndet_sq(A)
    diag = res.diagonal
    rep = LatticeReport(k, n, r, diag, prod(diag), g, nd, approx_root(nd, 2))
    if k < n:
        with _timed(t, "kernel"):
            rep.kernel_basis = kernel_basis(A).tolist()
        with _timed(t, "bounds"):
            rep.bv_box_radius = bv_box_radius(A)
            rep.siegel_floor = siegel_floor(A)
        if witnesses:
            with _timed(t, "witness"):
                rep.witnesses = [list(shortest_kernel_vector(A, budget).vector)]
        if verify:
            with _timed(t, "verify"):
                rep.verification = verify_theorems(A, budget)
    rep.timings_ms = t
    return rep
