"""Randomized property suites comparing the closed forms with the Jacobi oracle."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from .matrices import AbcParams, materialize_abc, normalize_b
from .oracle import inf_norm, jacobi_eigenvalues, residual
from .spectrum import abc_eigenbasis, abc_spectrum

DEFAULT_TOL = 1e-9
# Base thresholds at the default tolerance; all scale linearly with --tol.
BASE_THRESHOLDS = {
    "oracle_equivalence": 1e-9,
    "trace_zero": 1e-10,
    "residual": 1e-10,
    "scaling": 1e-10,
}


def random_cases(seed: int, trials: int, n_range=(3, 64)) -> list[AbcParams]:
    """n uniform in n_range, a and c uniform in [-5, 5], b uniform in [-3, 3] minus {0}."""
    rng = np.random.default_rng(seed)
    cases = []
    for _ in range(trials):
        n = int(rng.integers(n_range[0], n_range[1] + 1))
        a, c = rng.uniform(-5, 5, size=2)
        b = 0.0
        while b == 0.0:
            b = rng.uniform(-3, 3)
        cases.append(AbcParams(n, float(a), float(b), float(c)))
    return cases


@dataclass
class SuiteResult:
    name: str
    threshold: float
    worst: float = 0.0
    worst_case: dict | None = None
    failures: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, value: float, p: AbcParams, failed: bool):
        if self.worst_case is None or value > self.worst:
            self.worst = value
            self.worst_case = {"n": p.n, "a": p.a, "b": p.b, "c": p.c}
        if failed:
            self.failures += 1


def oracle_deviation(p: AbcParams) -> float:
    m = materialize_abc(p)
    ref = jacobi_eigenvalues(m).values
    got = np.array(abc_spectrum(p).values())
    return float(np.max(np.abs(got - ref)) / (1 + inf_norm(m)))


def trace_deviation(p: AbcParams) -> float:
    vals = np.array(abc_spectrum(p).values())
    return float(abs(vals.sum()) / ((p.n + 1) * np.max(np.abs(vals))))


def max_residual(p: AbcParams) -> float:
    m = materialize_abc(p)
    spec = abc_spectrum(p)
    basis = abc_eigenbasis(p)
    lams = [spec.lambda_minus, spec.lambda_plus, *spec.lambda_k]
    return max(residual(m, lam, w) for lam, w in zip(lams, basis.columns().T))


def separation_margin(p: AbcParams) -> float:
    """min(lambda_sep - lambda_-, lambda_+ - lambda_sep); must be > 0."""
    spec = abc_spectrum(p)
    sep = p.c + 2 * p.a
    return min(sep - spec.lambda_minus, spec.lambda_plus - sep)


def pairing_mismatches(p: AbcParams) -> int:
    lk = abc_spectrum(p).lambda_k
    n = p.n
    return sum(lk[k - 1] != lk[n - k - 1] for k in range(1, n))


def sign_flip_deviation(p: AbcParams) -> float:
    flipped = AbcParams(p.n, p.a, -p.b, p.c, p.variant)
    x = np.array(abc_spectrum(p).values())
    y = np.array(abc_spectrum(flipped).values())
    return float(np.max(np.abs(x - y)))


def scaling_deviation(p: AbcParams) -> float:
    scale, unit = normalize_b(p)
    x = np.sort(np.array(abc_spectrum(p).values()))
    y = np.sort(scale * np.array(abc_spectrum(unit).values()))
    return float(np.max(np.abs(x - y)) / max(1.0, np.max(np.abs(x))))


@dataclass
class VerifyReport:
    seed: int
    trials: int
    tol: float
    suites: list[SuiteResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "tol": self.tol,
            "passed": self.passed,
            "suites": [dict(asdict(s), passed=s.passed) for s in self.suites],
        }


def run_verification(trials: int, seed: int, tol: float = DEFAULT_TOL) -> VerifyReport:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    factor = tol / DEFAULT_TOL
    th = {k: v * factor for k, v in BASE_THRESHOLDS.items()}
    suites = {
        "oracle_equivalence": SuiteResult("oracle_equivalence", th["oracle_equivalence"]),
        "trace_zero": SuiteResult("trace_zero", th["trace_zero"]),
        "residual": SuiteResult("residual", th["residual"]),
        "separation": SuiteResult("separation", 0.0),
        "pairing": SuiteResult("pairing", 0.0),
        "sign_of_b": SuiteResult("sign_of_b", 0.0),
        "scaling": SuiteResult("scaling", th["scaling"]),
    }
    for p in random_cases(seed, trials):
        for name, fn in (
            ("oracle_equivalence", oracle_deviation),
            ("trace_zero", trace_deviation),
            ("residual", max_residual),
            ("scaling", scaling_deviation),
        ):
            v = fn(p)
            suites[name].record(v, p, v > suites[name].threshold)
        margin = separation_margin(p)
        suites["separation"].record(-margin, p, margin <= 0)
        mism = pairing_mismatches(p)
        suites["pairing"].record(float(mism), p, mism > 0)
        dev = sign_flip_deviation(p)
        suites["sign_of_b"].record(dev, p, dev > 0)
    return VerifyReport(seed, trials, tol, list(suites.values()))
