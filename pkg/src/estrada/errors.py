"""Exception types raised across the package."""


class EstradaError(Exception):
    """Base class for all library errors."""


class InvalidEdge(EstradaError, ValueError):
    pass


class InvalidFamilyParam(EstradaError, ValueError):
    pass


class Graph6ParseError(EstradaError, ValueError):
    """Malformed graph6 token; ``offset`` is the index of the offending byte."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class UnsupportedSize(EstradaError, ValueError):
    pass


class AsymmetricMatrix(EstradaError, ValueError):
    """Matrix failed the exact symmetry / shape check at ``(row, col)``."""

    def __init__(self, message, row=None, col=None):
        super().__init__(message)
        self.row = row
        self.col = col


class NoConvergence(EstradaError, ArithmeticError):
    def __init__(self, residual, sweeps):
        super().__init__(
            f"Jacobi iteration did not converge after {sweeps} sweeps "
            f"(off-diagonal norm {residual:.3e})"
        )
        self.residual = residual
        self.sweeps = sweeps


class UnsupportedMoment(EstradaError, ValueError):
    pass


class OverflowGuard(EstradaError, OverflowError):
    pass


class NotPSD(EstradaError, ArithmeticError):
    pass


class NotApplicable(EstradaError, ValueError):
    """A bound's hypotheses do not hold for the given input."""
