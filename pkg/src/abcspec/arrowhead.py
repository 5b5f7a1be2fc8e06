"""Eigenvalues of regular arrowhead matrices A_n(h, b, d)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ZeroBorder
from .matrices import ArrowheadParams


@dataclass(frozen=True)
class ArrowheadSpectrum:
    n: int
    lambda_minus: float
    lambda_plus: float
    lambda_d: float
    discriminant: float

    @property
    def d_multiplicity(self) -> int:
        return self.n - 1

    def values(self) -> list[float]:
        """All n + 1 eigenvalues in ascending order."""
        vals = [self.lambda_minus, self.lambda_plus] + [self.lambda_d] * (self.n - 1)
        return sorted(vals)


def stable_quadratic_roots(s: float, prod: float, root: float) -> tuple[float, float]:
    """Roots (lo, hi) of x**2 - s*x + prod with sqrt(discriminant) = root >= 0.

    The larger-magnitude root comes from (s +- root)/2 with no cancellation and
    the other from the product of roots.
    """
    if s >= 0:
        hi = (s + root) / 2
        lo = prod / hi if hi != 0 else (s - root) / 2
    else:
        lo = (s - root) / 2
        hi = prod / lo
    return lo, hi


def arrowhead_eigenvalues(p: ArrowheadParams) -> ArrowheadSpectrum:
    """lambda_+- = (h + d +- sqrt(D))/2 with D = (h - d)**2 + 4*n*b**2; d repeated n - 1 times."""
    n, h, b, d = p.n, p.h, p.b, p.d
    disc = (h - d) ** 2 + 4 * n * b * b
    root = math.hypot(h - d, 2 * math.sqrt(n) * b)
    lo, hi = stable_quadratic_roots(h + d, h * d - n * b * b, root)
    return ArrowheadSpectrum(n, lo, hi, d, disc)


def arrowhead_spectrum_cardinality(p: ArrowheadParams) -> int:
    """Number of distinct eigenvalues: 2 for n = 1, else 3 (requires b != 0).

    For b != 0 the root of the discriminant strictly exceeds |h - d|, so d lies
    strictly between lambda_- and lambda_+ and never merges with either.
    """
    if p.b == 0:
        raise ZeroBorder("cardinality formula requires b != 0")
    return 2 if p.n == 1 else 3
