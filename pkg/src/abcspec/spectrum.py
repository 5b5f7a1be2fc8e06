"""Closed-form spectrum, eigenvectors, crossings and cardinality of abc matrices.

For n >= 3 the eigenvalues of m_n(a, b, c) are

* the two border eigenvalues lambda_+- = (2a - (n-1)c +- sqrt(D))/2 with
  D = (2a + (n+1)c)**2 + 4 n b**2, eigenvectors [beta_+-, 1, ..., 1];
* the n - 1 tire eigenvalues lambda_k = c + 2a cos(2 pi k / n), eigenvectors
  [0, 1, w^k, ..., w^((n-1)k)].

Orders n = 1, 2 reuse the same border formulas with the row sum of the tire block
(which depends on the ``N2Variant``) in place of c + 2a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arrowhead import stable_quadratic_roots
from .circulant import fourier_vector
from .errors import UnsupportedOrder, ZeroBorder, ZeroTire
from .matrices import AbcParams, N2Variant


def crossing_tolerance(c: float) -> float:
    return 1e-9 * (1.0 + abs(c))


@dataclass(frozen=True)
class AbcSpectrum:
    n: int
    lambda_minus: float
    lambda_plus: float
    beta_minus: float
    beta_plus: float
    discriminant: float
    lambda_k: tuple[float, ...]  # lambda_k[k - 1] for k = 1..n-1

    @property
    def p(self) -> int:
        return (self.n - 1) // 2

    @property
    def q(self) -> int:
        return self.n // 2

    def tire(self, k: int) -> float:
        return self.lambda_k[k - 1]

    def values(self) -> list[float]:
        """All n + 1 eigenvalues, ascending."""
        return sorted((self.lambda_minus, self.lambda_plus) + self.lambda_k)

    def labelled(self) -> list[tuple[str, float]]:
        out = [("lambda_minus", self.lambda_minus), ("lambda_plus", self.lambda_plus)]
        out += [(f"lambda_{k}", v) for k, v in enumerate(self.lambda_k, start=1)]
        return out


@dataclass(frozen=True)
class AbcEigenbasis:
    w_minus: np.ndarray
    w_plus: np.ndarray
    w_k: tuple[np.ndarray, ...]

    def columns(self) -> np.ndarray:
        """Eigenvectors as columns in the order w_-, w_+, w_1, ..., w_{n-1}."""
        vecs = [self.w_minus.astype(complex), self.w_plus.astype(complex), *self.w_k]
        return np.column_stack(vecs)


def tire_row_sum(p: AbcParams):
    """Row sum of the tire block; plays the role of c + 2a in the border eigenvalues."""
    if p.n == 1 and p.variant is N2Variant.TILDE:
        return p.c
    if p.n == 2 and p.variant is N2Variant.TILDE:
        return p.c + p.a
    return p.c + 2 * p.a


def effective_tire_weight(p: AbcParams):
    """Tire weight a' with m_n(a, b, c) == m_n(a', b, c) in the doubled convention.

    Only the tilde n = 2 matrix differs: its single tire edge a equals 2a' with a' = a/2.
    """
    if p.n == 2 and p.variant is N2Variant.TILDE:
        return p.a / 2
    return p.a


def _border_pair(n: int, row_sum: float, b: float, c: float):
    # [beta, 1, ..., 1] is an eigenvector iff b*beta**2 + (row_sum + n c) beta - n b = 0,
    # with eigenvalue b*beta + row_sum.
    t = row_sum + n * c
    disc = t * t + 4 * n * b * b
    root = math.hypot(t, 2 * math.sqrt(n) * b)
    lam_minus, lam_plus = stable_quadratic_roots(
        row_sum - n * c, -n * (c * row_sum + b * b), root
    )
    if t >= 0:
        beta_minus = -(t + root) / (2 * b)
        beta_plus = -n / beta_minus
    else:
        beta_plus = (root - t) / (2 * b)
        beta_minus = -n / beta_plus
    return disc, beta_minus, beta_plus, lam_minus, lam_plus


def _tire_values(n: int, a: float, c: float) -> tuple[float, ...]:
    vals = [0.0] * (n - 1)
    for k in range(1, n // 2 + 1):
        v = c + 2 * a * math.cos(2 * math.pi * k / n)
        vals[k - 1] = v
        vals[n - k - 1] = v
    return tuple(vals)


def _check(p: AbcParams) -> None:
    if p.b == 0:
        raise ZeroBorder("b = 0: spectrum is {-n*c} union the tire spectrum")


def abc_spectrum(p: AbcParams) -> AbcSpectrum:
    """Closed-form spectrum of m_n(a, b, c) for n >= 2 (n = 2 goes through small_n_spectrum)."""
    if p.n < 2:
        raise UnsupportedOrder("n = 1 has nonzero trace in the doubled convention; use small_n_spectrum")
    if p.n == 2:
        return small_n_spectrum(p)
    _check(p)
    disc, bm, bp, lm, lp = _border_pair(p.n, tire_row_sum(p), p.b, p.c)
    return AbcSpectrum(p.n, lm, lp, bm, bp, disc, _tire_values(p.n, p.a, p.c))


def small_n_spectrum(p: AbcParams) -> AbcSpectrum:
    """Spectra of the order-2 and order-3 matrices in either convention.

    tilde n=1:   {+- sqrt(b**2 + c**2)}
    tilde n=2:   (a - c +- sqrt((a + 3c)**2 + 8 b**2))/2 and c - a
    doubled n=2: the tilde n=2 formulas with a -> 2a
    doubled n=1: arrowhead A_1(-c, b, c + 2a)
    """
    if p.n not in (1, 2):
        raise UnsupportedOrder(f"small_n_spectrum handles n in {{1, 2}}, got {p.n}")
    _check(p)
    disc, bm, bp, lm, lp = _border_pair(p.n, tire_row_sum(p), p.b, p.c)
    if p.n == 1:
        tire = ()
    elif p.variant is N2Variant.TILDE:
        tire = (p.c - p.a,)
    else:
        tire = (p.c - 2 * p.a,)
    return AbcSpectrum(p.n, lm, lp, bm, bp, disc, tire)


def spectrum(p: AbcParams) -> AbcSpectrum:
    """Dispatch on n: small orders through small_n_spectrum, the rest through abc_spectrum."""
    return small_n_spectrum(p) if p.n <= 2 else abc_spectrum(p)


def abc_eigenbasis(p: AbcParams, real: bool = False) -> AbcEigenbasis:
    """Eigenvectors matching abc_spectrum.

    With ``real=True`` the conjugate pair (w_k, w_{n-k}) is replaced by its real
    and imaginary parts, giving a real basis of the same eigenspaces.
    """
    if p.n < 2:
        raise UnsupportedOrder("eigenbasis needs n >= 2")
    spec = abc_spectrum(p)
    n = p.n
    ones = np.ones(n)
    w_minus = np.concatenate(([spec.beta_minus], ones))
    w_plus = np.concatenate(([spec.beta_plus], ones))
    w_k = []
    for k in range(1, n):
        v = np.concatenate(([0.0], fourier_vector(k, n)))
        if real:
            v = (v.real if 2 * k <= n else v.imag).astype(complex)
        w_k.append(v)
    return AbcEigenbasis(w_minus, w_plus, tuple(w_k))


def crossing_abscissas(n: int, a: float) -> list[float]:
    """Abscissas c_k, k = 1..floor(n/2), where lambda_k meets lambda_- (a > 0) or lambda_+ (a < 0).

    Assumes |b| = 1. Monotone in k: increasing for a > 0, decreasing for a < 0.
    """
    if n < 2:
        raise UnsupportedOrder("crossings need n >= 2")
    if a == 0:
        raise ZeroTire("a = 0: tire eigenvalues never meet lambda_+-")
    out = []
    for k in range(1, n // 2 + 1):
        x = math.cos(2 * math.pi * k / n)
        out.append((4 * a * a * x * (1 - x) + n) / (2 * (n + 1) * a * (x - 1)))
    return out


def _unit_border(p: AbcParams) -> tuple[float, float, float]:
    # m_n(a, b, c) and m_n(a, |b|, c) share a spectrum; divide out |b|.
    _check(p)
    s = abs(p.b)
    return s, effective_tire_weight(p) / s, p.c / s


def matched_crossing(p: AbcParams) -> int | None:
    """Index k of the crossing abscissa that c hits (within tolerance), else None."""
    if p.n < 2:
        return None
    _, a, c = _unit_border(p)
    if a == 0:
        return None
    ck = crossing_abscissas(p.n, a)
    k = min(range(len(ck)), key=lambda i: abs(ck[i] - c))
    return k + 1 if abs(ck[k] - c) <= crossing_tolerance(c) else None


def spectrum_cardinality(p: AbcParams) -> int:
    """Number of distinct eigenvalues.

    For a != 0 this is floor(n/2) + 1 when c is a crossing abscissa and
    floor(n/2) + 2 otherwise; for a = 0 it is min(n + 1, 3).
    """
    _check(p)
    if p.n == 1:
        return 2
    if effective_tire_weight(p) == 0:
        return min(p.n + 1, 3)
    q = p.n // 2
    return q + 1 if matched_crossing(p) is not None else q + 2


def multiplicity_profile(p: AbcParams) -> list[tuple[float, int]]:
    """Distinct eigenvalues with multiplicities, ascending by value.

    Groups come from structure, not from comparing floats: lambda_k and
    lambda_{n-k} always pair up, all tire values coincide when a = 0, and a tire
    value joins lambda_- (a > 0) or lambda_+ (a < 0) exactly when c is that
    crossing abscissa. Distinct crossing indices have distinct abscissas (c_k is
    strictly monotone in cos(2 pi k/n)), so at most one merge happens.
    """
    spec = spectrum(p)
    n = p.n
    if n == 1:
        return sorted([(spec.lambda_minus, 1), (spec.lambda_plus, 1)])
    a = effective_tire_weight(p)
    if a == 0:
        return sorted([(spec.lambda_minus, 1), (spec.lambda_plus, 1), (p.c, n - 1)])
    groups = {k: 1 if 2 * k == n else 2 for k in range(1, n // 2 + 1)}
    minus, plus = 1, 1
    hit = matched_crossing(p)
    out = []
    if hit is not None:
        if a > 0:
            minus = 0
        else:
            plus = 0
        groups[hit] += 1
    if minus:
        out.append((spec.lambda_minus, 1))
    if plus:
        out.append((spec.lambda_plus, 1))
    out += [(spec.tire(k), m) for k, m in groups.items()]
    return sorted(out)
