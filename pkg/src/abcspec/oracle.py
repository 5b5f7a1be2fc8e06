"""Independent numerical ground truth: cyclic Jacobi eigenvalues and residual helpers.

Nothing in this module knows the closed-form spectra; it only sees dense matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numba
import numpy as np

from .errors import NoConvergence, ZeroVector

MAX_SWEEPS = 100


@dataclass(frozen=True)
class OracleSpectrum:
    values: np.ndarray
    iterations: int
    offdiag_norm: float


@numba.njit(cache=True)
def _offdiag_norm(a):
    n = a.shape[0]
    s = 0.0
    for p in range(n):
        for q in range(p + 1, n):
            s += a[p, q] * a[p, q]
    return math.sqrt(2.0 * s)


@numba.njit(cache=True)
def _jacobi_sweeps(a, tol, max_sweeps):
    n = a.shape[0]
    off = _offdiag_norm(a)
    sweeps = 0
    while off > tol and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                cs = 1.0 / math.sqrt(1.0 + t * t)
                sn = t * cs
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for r in range(n):
                    if r == p or r == q:
                        continue
                    arp = a[r, p]
                    arq = a[r, q]
                    nrp = cs * arp - sn * arq
                    nrq = sn * arp + cs * arq
                    a[r, p] = nrp
                    a[p, r] = nrp
                    a[r, q] = nrq
                    a[q, r] = nrq
        sweeps += 1
        off = _offdiag_norm(a)
    return sweeps, off


def jacobi_eigenvalues(m, tol: float | None = None, max_sweeps: int = MAX_SWEEPS) -> OracleSpectrum:
    """Eigenvalues of a real symmetric matrix by cyclic-by-row Jacobi rotations.

    Sweeps continue until the off-diagonal Frobenius norm is at most ``tol``
    (default 1e-12 times the Frobenius norm of ``m``). The input is not modified.
    """
    work = np.array(m, dtype=np.float64, copy=True)
    if work.ndim != 2 or work.shape[0] != work.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {work.shape}")
    if not np.array_equal(work, work.T):
        raise ValueError("matrix is not symmetric")
    if tol is None:
        tol = 1e-12 * float(np.linalg.norm(work, "fro"))
    elif tol <= 0:
        raise ValueError("tol must be positive")
    sweeps, off = _jacobi_sweeps(work, float(tol), int(max_sweeps))
    if off > tol:
        raise NoConvergence(sweeps, off, tol)
    return OracleSpectrum(np.sort(np.diag(work).copy()), sweeps, off)


def residual(m, lam, v) -> float:
    """Scaled residual ||M v - lam v||_inf / ((1 + ||M||_inf) ||v||_inf)."""
    m = np.asarray(m)
    v = np.asarray(v)
    vnorm = np.max(np.abs(v)) if v.size else 0.0
    if vnorm == 0:
        raise ZeroVector("residual of the zero vector is undefined")
    mnorm = np.max(np.sum(np.abs(m), axis=1))
    return float(np.max(np.abs(m @ v - lam * v)) / ((1 + mnorm) * vnorm))


def count_near(values, target: float, eps: float) -> int:
    if eps <= 0:
        raise ValueError("eps must be positive")
    return int(np.sum(np.abs(np.asarray(values) - target) <= eps))


def distinct_count(values, eps: float) -> int:
    """Number of clusters in sorted ``values`` when gaps <= eps are merged."""
    vals = np.sort(np.asarray(values))
    if vals.size == 0:
        return 0
    return 1 + int(np.sum(np.diff(vals) > eps))


def inf_norm(m) -> float:
    return float(np.max(np.sum(np.abs(np.asarray(m)), axis=1)))


def oracle_min(m) -> float:
    return float(jacobi_eigenvalues(m).values[0])


def oracle_max(m) -> float:
    return float(jacobi_eigenvalues(m).values[-1])
