"""Parameter records and dense materialization of circulant, arrowhead and abc matrices.

Matrices are plain ``numpy.ndarray`` objects of dtype float64. Construction only
assigns entries (the hub weight ``-n*c`` is the single computed value), so every
symmetric matrix produced here is symmetric bit for bit.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .errors import UnsupportedOrder, ZeroBorder


class N2Variant(enum.Enum):
    """Convention for the tire block when n is 1 or 2.

    ``TILDE`` uses circ(c) and circ(c, a); ``DOUBLED`` keeps the tire row sum at
    c + 2a, i.e. circ(c + 2a) and circ(c, 2a). Ignored for n >= 3.
    """

    TILDE = "tilde"
    DOUBLED = "doubled"


@dataclass(frozen=True)
class CirculantParams:
    row: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "row", tuple(float(x) for x in self.row))
        if len(self.row) < 1:
            raise UnsupportedOrder("circulant needs at least one entry")

    @property
    def n(self) -> int:
        return len(self.row)


@dataclass(frozen=True)
class ArrowheadParams:
    """Regular arrowhead A_n(h, b, d) of order n + 1."""

    n: int
    h: float
    b: float
    d: float

    def __post_init__(self):
        if self.n < 1:
            raise UnsupportedOrder(f"arrowhead block size must be >= 1, got {self.n}")


@dataclass(frozen=True)
class AbcParams:
    """The regular abc matrix m_n(a, b, c): hub -n*c, spokes b, tire circ(c, a, 0, ..., 0, a)."""

    n: int
    a: float
    b: float = 1.0
    c: float = 0.0
    variant: N2Variant = N2Variant.DOUBLED

    def __post_init__(self):
        if self.n < 1:
            raise UnsupportedOrder(f"abc block order must be >= 1, got {self.n}")

    @property
    def order(self) -> int:
        return self.n + 1

    @property
    def headpoint(self):
        return headpoint(self.n, self.c)

    @property
    def traceless(self) -> bool:
        return not (self.n == 1 and self.variant is N2Variant.DOUBLED and self.a != 0)

    def with_c(self, c) -> "AbcParams":
        return replace(self, c=c)

    def tire_row(self) -> tuple:
        """First row of the circulant tire block t_n."""
        n, a, c = self.n, self.a, self.c
        if n == 1:
            return (c + 2 * a,) if self.variant is N2Variant.DOUBLED else (c,)
        if n == 2:
            return (c, 2 * a) if self.variant is N2Variant.DOUBLED else (c, a)
        return (c, a) + (0.0,) * (n - 3) + (a,)


def headpoint(n, c):
    return -(n * c)


def materialize_circulant(p: CirculantParams | Sequence[float]) -> np.ndarray:
    """Dense circ(row): row j is the first row shifted j places to the right."""
    row = p.row if isinstance(p, CirculantParams) else tuple(float(x) for x in p)
    n = len(row)
    out = np.empty((n, n), dtype=float)
    for j in range(n):
        for k in range(n):
            out[j, k] = row[(k - j) % n]
    return out


def materialize_arrowhead(p: ArrowheadParams) -> np.ndarray:
    m = np.zeros((p.n + 1, p.n + 1), dtype=float)
    m[0, 0] = p.h
    m[0, 1:] = p.b
    m[1:, 0] = p.b
    idx = np.arange(1, p.n + 1)
    m[idx, idx] = p.d
    return m


def materialize_abc(p: AbcParams) -> np.ndarray:
    """Dense m_n(a, b, c) in block form [[-n*c, b^T], [b, t_n]]."""
    m = np.zeros((p.order, p.order), dtype=float)
    m[0, 0] = p.headpoint
    m[0, 1:] = p.b
    m[1:, 0] = p.b
    m[1:, 1:] = materialize_circulant(p.tire_row())
    return m


def normalize_b(p: AbcParams) -> tuple[float, AbcParams]:
    """Split off the spoke weight: m_n(a, b, c) = b * m_n(a/b, 1, c/b)."""
    if p.b == 0:
        raise ZeroBorder("b = 0: spectrum is {-n*c} union the tire spectrum")
    return p.b, replace(p, a=p.a / p.b, b=1.0, c=p.c / p.b)
