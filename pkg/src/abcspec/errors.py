"""Exceptions raised by the closed-form and verification routines."""


class AbcError(ValueError):
    """Base class for parameter errors."""


class ZeroBorder(AbcError):
    """The border (spoke) weight b is zero; use the block decomposition instead."""


class ZeroTire(AbcError):
    """The tire weight a is zero, so crossings and transition points do not exist."""


class UnsupportedOrder(AbcError):
    """The circulant block order n is outside the range an operation handles."""


class ZeroAbscissa(AbcError):
    pass


class UnsupportedDegeneracy(AbcError):
    """Degeneracies above 3 have no configuration label."""


class ZeroVector(AbcError):
    pass


class NoConvergence(ArithmeticError):
    """Jacobi sweeps exhausted before the off-diagonal norm reached tolerance."""

    def __init__(self, sweeps, offdiag_norm, tol):
        self.sweeps = sweeps
        self.offdiag_norm = offdiag_norm
        self.tol = tol
        super().__init__(
            f"no convergence after {sweeps} sweeps: off-diagonal norm "
            f"{offdiag_norm:.3e} > tol {tol:.3e}"
        )
