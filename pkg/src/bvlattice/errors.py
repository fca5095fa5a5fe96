"""Exception hierarchy shared by the library and the command line."""


class LatticeError(Exception):
    """Base class for every error raised by :mod:`bvlattice`."""


class DimensionError(LatticeError, ValueError):
    pass


class RankError(LatticeError, ValueError):
    """The input matrix does not have full row rank.

    The computed rank is kept on the instance so callers can report it.
    """

    def __init__(self, rank, rows, message=None):
        self.rank = rank
        self.rows = rows
        super().__init__(message or f"matrix has rank {rank} but {rows} rows; full row rank required")


class EmptyKernelError(LatticeError, ValueError):
    """k == n: the kernel lattice is {0} and has no basis."""


class DegenerateInputError(LatticeError, ValueError):
    pass


class BudgetExceeded(LatticeError):
    def __init__(self, candidates, budget):
        self.candidates = candidates
        self.budget = budget
        super().__init__(f"enumeration needs {candidates} candidates, budget is {budget}")


class InconsistencyError(LatticeError, ArithmeticError):
    """An identity that must hold exactly did not. Always a bug."""


class ParseError(LatticeError, ValueError):
    pass
