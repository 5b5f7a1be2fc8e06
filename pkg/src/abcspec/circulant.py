"""Closed-form eigenpairs of circulant matrices."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .matrices import CirculantParams

IMAG_TOL = 1e-12


@dataclass(frozen=True)
class ComplexEigenpair:
    value: complex
    vector: np.ndarray


def unit_root_power(m: int, n: int) -> complex:
    """omega_n ** m with the exponent reduced mod n before the exponential."""
    return cmath.exp(2j * math.pi * (m % n) / n)


def fourier_vector(k: int, n: int) -> np.ndarray:
    """[1, w^k, w^2k, ..., w^(n-1)k] for w = exp(2*pi*i/n)."""
    return np.array([unit_root_power(j * k, n) for j in range(n)], dtype=complex)


def _row(p) -> tuple[float, ...]:
    return p.row if isinstance(p, CirculantParams) else tuple(p)


def circulant_eigenpairs(p: CirculantParams | Sequence[float]) -> list[ComplexEigenpair]:
    """Eigenpairs (lambda_k, v_k), k = 0..n-1, of circ(row).

    lambda_k = sum_j c_j w^(jk) and v_k is the k-th Fourier vector.
    """
    row = _row(p)
    n = len(row)
    pairs = []
    for k in range(n):
        value = sum(cj * unit_root_power(j * k, n) for j, cj in enumerate(row))
        pairs.append(ComplexEigenpair(complex(value), fourier_vector(k, n)))
    return pairs


def real_circulant_eigenvalues(p: CirculantParams | Sequence[float]) -> list[float]:
    """Real parts of the circulant eigenvalues for a symmetric row (c_j == c_{n-j}).

    Raises ValueError when an imaginary part exceeds the projection threshold.
    """
    row = _row(p)
    scale = 1.0 + sum(abs(x) for x in row)
    out = []
    for pair in circulant_eigenpairs(row):
        if abs(pair.value.imag) > IMAG_TOL * scale:
            raise ValueError(
                f"circulant row is not symmetric: eigenvalue {pair.value} has imaginary part"
            )
        out.append(pair.value.real)
    return out
