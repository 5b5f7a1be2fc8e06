"""Special points of the eigenlines lambda(c) and the extreme-eigenvalue analysis.

Everything here assumes |b| = 1 unless a function says otherwise. The point
formulas are rational in (n, a), so passing ``fractions.Fraction`` values for
``a`` gives exact rational coordinates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .errors import UnsupportedDegeneracy, UnsupportedOrder, ZeroAbscissa, ZeroTire
from .matrices import AbcParams, N2Variant, materialize_abc
from .oracle import count_near, jacobi_eigenvalues
from .spectrum import effective_tire_weight, spectrum

CRITICAL_COUPLING = 0.25
DEGENERACY_EPS = 1e-7


class Regime(enum.Enum):
    BELOW_CRITICAL_NEG = "below_critical_neg"
    CRITICAL_NEG = "critical_neg"
    NEG_SMALL = "neg_small"
    ZERO_TIRE = "zero_tire"
    POS_SMALL = "pos_small"
    CRITICAL_POS = "critical_pos"
    ABOVE_CRITICAL_POS = "above_critical_pos"


class TransitionBranch(enum.Enum):
    ON_LAMBDA_MINUS = "lambda_minus"
    ON_LAMBDA_PLUS = "lambda_plus"


class Branch(enum.Enum):
    LAMBDA_MINUS = "lambda_minus"
    LAMBDA_PLUS = "lambda_plus"
    LAMBDA_HALF = "lambda_half"  # c - 2a, the tire value at k = n/2
    LAMBDA_Q = "lambda_q"  # extreme tire value k = (n-1)/2 for odd n


class ExtremumKind(enum.Enum):
    MIN_OF_MAX = "min_of_max"
    MAX_OF_MIN = "max_of_min"


class Configuration(enum.Enum):
    COLLINEAR = "collinear"
    COPLANAR = "coplanar"
    SPATIAL = "spatial"


@dataclass(frozen=True)
class SpecialPoints:
    n: int
    a: float
    uppermost: tuple
    lowermost: tuple
    transition: tuple | None
    transition_branch: TransitionBranch | None
    limit_transition: tuple | None
    regime: Regime
    transition_is_actual: bool  # the branch switch only happens for even n


@dataclass(frozen=True)
class ExtremeEigenvalues:
    c: float
    lambda_min: float
    lambda_max: float
    active_branch_min: Branch
    active_branch_max: Branch


@dataclass(frozen=True)
class ExtremeExtremum:
    location: tuple
    kind: ExtremumKind
    degeneracy: int
    configuration: Configuration


def uppermost_point(n, a):
    """Global maximum of lambda_-(c)."""
    c = -((n - 1) + 2 * a) / (n + 1)
    return c, 2 * n * (a - 1) / (n + 1)


def lowermost_point(n, a):
    """Global minimum of lambda_+(c)."""
    c = ((n - 1) - 2 * a) / (n + 1)
    return c, 2 * n * (a + 1) / (n + 1)


def transition_point(n, a):
    """Point where lambda_- (a > 0) or lambda_+ (a < 0) meets the line lambda = c - 2a."""
    if a == 0:
        raise ZeroTire("transition point needs a != 0")
    c = (8 * a * a - n) / (4 * (n + 1) * a)
    return c, -n * (8 * a * a + 1) / (4 * (n + 1) * a)


def limit_transition_point(a):
    """n -> infinity limit of the transition point: (-1/(4a)) * (1, 8a**2 + 1)."""
    if a == 0:
        raise ZeroTire("limit transition point needs a != 0")
    return -1 / (4 * a), -(8 * a * a + 1) / (4 * a)


def limit_transition_curve(c):
    """The curve lambda = c + 1/(2c) traced by the limit transition points."""
    if c == 0:
        raise ZeroAbscissa("limit transition curve is undefined at c = 0")
    return c + 1 / (2 * c)


def classify_regime(a) -> Regime:
    if a == 0:
        return Regime.ZERO_TIRE
    if a == CRITICAL_COUPLING:
        return Regime.CRITICAL_POS
    if a == -CRITICAL_COUPLING:
        return Regime.CRITICAL_NEG
    if a > CRITICAL_COUPLING:
        return Regime.ABOVE_CRITICAL_POS
    if a > 0:
        return Regime.POS_SMALL
    if a < -CRITICAL_COUPLING:
        return Regime.BELOW_CRITICAL_NEG
    return Regime.NEG_SMALL


def _effective_a(n, a, variant):
    return a / 2 if n == 2 and variant is N2Variant.TILDE else a


def special_points(n: int, a, variant: N2Variant = N2Variant.DOUBLED) -> SpecialPoints:
    """U, L, T, T_inf and the coupling regime for m_n(a, 1, c).

    For the tilde n = 2 matrix every 2a of the doubled formulas becomes a, so the
    critical couplings move to +-1/2 in terms of the caller's a.
    """
    if n < 2:
        raise UnsupportedOrder("special points need n >= 2")
    ae = _effective_a(n, a, variant)
    if ae == 0:
        trans = branch = limit = None
    else:
        trans = transition_point(n, ae)
        branch = TransitionBranch.ON_LAMBDA_MINUS if ae > 0 else TransitionBranch.ON_LAMBDA_PLUS
        limit = limit_transition_point(ae)
    return SpecialPoints(
        n=n,
        a=a,
        uppermost=uppermost_point(n, ae),
        lowermost=lowermost_point(n, ae),
        transition=trans,
        transition_branch=branch,
        limit_transition=limit,
        regime=classify_regime(ae),
        transition_is_actual=n % 2 == 0,
    )


def classify_configuration(degeneracy: int) -> Configuration:
    """Spin configuration dimensionality from the degeneracy of max-of-min."""
    try:
        return {1: Configuration.COLLINEAR, 2: Configuration.COPLANAR, 3: Configuration.SPATIAL}[degeneracy]
    except KeyError:
        raise UnsupportedDegeneracy(f"no configuration label for degeneracy {degeneracy}") from None


def extreme_candidates(p: AbcParams) -> list[tuple[float, Branch]]:
    """All n + 1 analytic eigenvalues tagged with the branch they belong to.

    Tire values are tagged with the extreme-tire label; only the k = floor(n/2)
    tire value can ever be the smallest or largest eigenvalue.
    """
    spec = spectrum(p)
    tire_label = Branch.LAMBDA_HALF if p.n % 2 == 0 else Branch.LAMBDA_Q
    out = [(spec.lambda_minus, Branch.LAMBDA_MINUS), (spec.lambda_plus, Branch.LAMBDA_PLUS)]
    out += [(v, tire_label) for v in spec.lambda_k]
    return out


def brute_force_extremes(p: AbcParams) -> ExtremeEigenvalues:
    cands = extreme_candidates(p)
    lo = min(cands, key=lambda t: t[0])
    hi = max(cands, key=lambda t: t[0])
    return ExtremeEigenvalues(p.c, lo[0], hi[0], lo[1], hi[1])


def extreme_eigenvalues(p: AbcParams, c: float | None = None) -> ExtremeEigenvalues:
    """Smallest and largest eigenvalue of m_n(a, b, c) with the branch attaining each.

    Even n uses the piecewise closed form around the transition abscissa; odd n
    (and n = 1) compares the full analytic spectrum.
    """
    if c is not None:
        p = p.with_c(c)
    if p.n % 2 == 1:
        return brute_force_extremes(p)
    spec = spectrum(p)
    lm, lp, half = spec.lambda_minus, spec.lambda_plus, spec.tire(p.n // 2)
    s = abs(p.b)
    a = effective_tire_weight(p) / s
    x = p.c / s
    if a == 0:
        return ExtremeEigenvalues(p.c, lm, lp, Branch.LAMBDA_MINUS, Branch.LAMBDA_PLUS)
    c_trans = transition_point(p.n, a)[0]
    if a > 0:
        if x <= c_trans:
            return ExtremeEigenvalues(p.c, half, lp, Branch.LAMBDA_HALF, Branch.LAMBDA_PLUS)
        return ExtremeEigenvalues(p.c, lm, lp, Branch.LAMBDA_MINUS, Branch.LAMBDA_PLUS)
    if x < c_trans:
        return ExtremeEigenvalues(p.c, lm, lp, Branch.LAMBDA_MINUS, Branch.LAMBDA_PLUS)
    return ExtremeEigenvalues(p.c, lm, half, Branch.LAMBDA_MINUS, Branch.LAMBDA_HALF)


def oracle_degeneracy(n: int, a, c, lam, variant=N2Variant.DOUBLED, eps: float = DEGENERACY_EPS) -> int:
    """Count of Jacobi eigenvalues of m_n(a, 1, c) within eps of lam."""
    m = materialize_abc(AbcParams(n, float(a), 1.0, float(c), variant))
    return count_near(jacobi_eigenvalues(m).values, float(lam), eps)


def extreme_extrema(
    n: int, a, variant: N2Variant = N2Variant.DOUBLED
) -> tuple[ExtremeExtremum, ExtremeExtremum]:
    """(min over c of lambda_max, max over c of lambda_min) for even n and |b| = 1.

    The extremum sits at the transition point when a <= -1/4 (min-of-max) or
    a >= 1/4 (max-of-min) and is double there; otherwise it is the single
    lowermost / uppermost point. At a = +-1/4 exactly the transition point and
    U or L coincide and the degeneracy is counted with the Jacobi oracle.
    """
    if n < 2 or n % 2:
        raise UnsupportedOrder(f"closed-form extreme extrema need even n >= 2, got {n}")
    sp = special_points(n, a, variant)
    ae = _effective_a(n, a, variant)

    def degeneracy(loc, at_transition):
        if abs(ae) == CRITICAL_COUPLING:
            return oracle_degeneracy(n, a, loc[0], loc[1], variant)
        return 2 if at_transition else 1

    at_t = ae != 0 and ae <= -CRITICAL_COUPLING
    loc = sp.transition if at_t else sp.lowermost
    d = degeneracy(loc, at_t)
    min_of_max = ExtremeExtremum(loc, ExtremumKind.MIN_OF_MAX, d, classify_configuration(d))

    at_t = ae >= CRITICAL_COUPLING
    loc = sp.transition if at_t else sp.uppermost
    d = degeneracy(loc, at_t)
    max_of_min = ExtremeExtremum(loc, ExtremumKind.MAX_OF_MIN, d, classify_configuration(d))
    return min_of_max, max_of_min


def golden_extremum(f, maximize: bool, bracket=(-1.0, 1.0), xtol: float = 1e-11) -> tuple[float, float]:
    """Golden-section search for the extremum of a unimodal f; returns (x, f(x))."""
    g = (lambda x: -f(x)) if maximize else f
    res = minimize_scalar(g, bracket=bracket, method="golden", options={"xtol": xtol})
    return float(res.x), float(f(res.x))


def numeric_extreme_extrema(
    n: int, a: float, variant: N2Variant = N2Variant.DOUBLED, use_oracle: bool = False
) -> tuple[ExtremeExtremum, ExtremeExtremum]:
    """Extreme extrema by golden-section search over c; works for any n >= 2.

    lambda_min(c) is concave and lambda_max(c) convex in c, so both searches are
    unimodal. With ``use_oracle`` the extreme eigenvalues come from the Jacobi
    oracle instead of the closed-form spectrum.
    """

    def eigs(c):
        p = AbcParams(n, a, 1.0, c, variant)
        if use_oracle:
            return jacobi_eigenvalues(materialize_abc(p)).values
        return np.array(spectrum(p).values())

    out = []
    for kind, maximize, pick in (
        (ExtremumKind.MIN_OF_MAX, False, lambda v: v[-1]),
        (ExtremumKind.MAX_OF_MIN, True, lambda v: v[0]),
    ):
        c, lam = golden_extremum(lambda x: pick(eigs(x)), maximize)
        d = count_near(eigs(c), lam, DEGENERACY_EPS)
        try:
            conf = classify_configuration(d)
        except UnsupportedDegeneracy:
            conf = None
        out.append(ExtremeExtremum((c, lam), kind, d, conf))
    return out[0], out[1]


def solve_critical_coupling(n: int, sign: int = 1) -> float:
    """Coupling where the transition point meets U (sign=+1) or L (sign=-1), found by root bracketing."""
    if sign > 0:
        f = lambda a: uppermost_point(n, a)[0] - transition_point(n, a)[0]
        return brentq(f, 0.01, 1.0, xtol=1e-15, rtol=4 * np.finfo(float).eps)
    f = lambda a: lowermost_point(n, a)[0] - transition_point(n, a)[0]
    return brentq(f, -1.0, -0.01, xtol=1e-15, rtol=4 * np.finfo(float).eps)
