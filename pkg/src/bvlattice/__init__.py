"""Exact integer lattices for homogeneous linear Diophantine systems.

The kernel lattice of ``A x = 0``, its determinant, and the
Bombieri-Vaaler height bound are all computed in polynomial time from the
column Hermite normal form of ``A``.  The :mod:`bvlattice.oracle` module
holds the brute-force routes used to check them.
"""

__version__ = "0.1.0"

from bvlattice._backend import BACKEND
from bvlattice.bounds import BoundReport, bound_report, bv_box_radius, integer_root, siegel_floor
from bvlattice.errors import (
    BudgetExceeded,
    DegenerateInputError,
    DimensionError,
    EmptyKernelError,
    InconsistencyError,
    LatticeError,
    ParseError,
    RankError,
)
from bvlattice.hnf import HnfResult, column_hnf, det_column_lattice, extract_blocks
from bvlattice.kernel import kernel_basis, lattice_equal, ndet_sq, normalized_lattice_basis
from bvlattice.linalg import IntMatrix, det, gram_det_sq, matmul, rank, sup_norm
from bvlattice.oracle import (
    KernelWitness,
    MinimaSet,
    enumerate_kernel_points,
    minor_gcd,
    shortest_kernel_vector,
    successive_minima_product,
    verify_theorems,
)
