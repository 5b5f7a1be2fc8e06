"""Command-line interface: spectra, figure data, extreme points, verification, graph export."""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import math
import os
import sys

from .circulant import real_circulant_eigenvalues
from .errors import AbcError
from .matrices import AbcParams, N2Variant
from .special_points import (
    extreme_extrema,
    limit_transition_point,
    numeric_extreme_extrema,
    special_points,
    transition_point,
)
from .spectrum import abc_eigenbasis, multiplicity_profile, spectrum, spectrum_cardinality
from .verify import DEFAULT_TOL, run_verification
from .wheel import build_wheel, to_dot, to_json_dict

SCHEMA_VERSION = 1
TOL_ENV = "ABC_SPECTRA_TOL"


def fmt(x) -> str:
    return f"{x:.17g}"


@contextlib.contextmanager
def open_out(path):
    if path in (None, "-"):
        yield sys.stdout
        return
    try:
        fh = open(path, "w", newline="", encoding="utf-8")
    except OSError as e:
        raise SystemExit(f"cannot write {path}: {e.strerror}") from None
    with fh:
        yield fh


def emit_json(obj, path):
    with open_out(path) as fh:
        json.dump(dict(schema_version=SCHEMA_VERSION, **obj), fh, indent=2)
        fh.write("\n")


def _variant(args) -> N2Variant:
    return N2Variant(args.variant) if args.variant else N2Variant.DOUBLED


def _params(args) -> AbcParams:
    return AbcParams(args.n, args.a, args.b, args.c, _variant(args))


def _point(pt):
    return None if pt is None else {"c": float(pt[0]), "lambda": float(pt[1])}


def cmd_spectrum(args, parser) -> int:
    if args.n < 1:
        parser.error("--n must be >= 1")
    if args.n == 1 and args.variant is None:
        parser.error(
            "n = 1 needs an explicit --variant {tilde,doubled}; the doubled M_1 has "
            "nonzero trace 2a and is omitted from the traceless analysis"
        )
    p = _params(args)
    if p.b == 0:
        if not args.allow_diagonal:
            parser.error("b = 0 makes the matrix block diagonal; pass --allow-diagonal")
        tire = real_circulant_eigenvalues(p.tire_row())
        vals = sorted([p.headpoint] + tire)
        report = {
            "params": _param_dict(p),
            "values": vals,
            "decomposition": {"hub": p.headpoint, "tire": tire},
        }
        return _emit_report(report, args)
    spec = spectrum(p)
    report = {
        "params": _param_dict(p),
        "values": spec.values(),
        "eigenvalues": dict(spec.labelled()),
        "discriminant": spec.discriminant,
        "beta_minus": spec.beta_minus,
        "beta_plus": spec.beta_plus,
        "multiplicity_profile": [[v, m] for v, m in multiplicity_profile(p)],
        "cardinality": spectrum_cardinality(p),
        "traceless": p.traceless,
    }
    if args.eigenvectors and p.n >= 2:
        cols = abc_eigenbasis(p).columns().T
        report["eigenvectors"] = {
            label: [[z.real, z.imag] for z in vec] for (label, _), vec in zip(spec.labelled(), cols)
        }
    return _emit_report(report, args)


def _param_dict(p: AbcParams) -> dict:
    return {"n": p.n, "a": p.a, "b": p.b, "c": p.c, "variant": p.variant.value}


def _emit_report(report, args) -> int:
    if args.format == "json":
        emit_json(report, args.out)
    elif args.format == "csv":
        with open_out(args.out) as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["index", "value"])
            for i, v in enumerate(report["values"]):
                w.writerow([i, fmt(v)])
    else:
        with open_out(args.out) as fh:
            fh.write(_text(report))
    return 0


def _text(obj, indent=0) -> str:
    pad = "  " * indent
    out = io.StringIO()
    width = max((len(k) for k in obj), default=0)
    for k, v in obj.items():
        if isinstance(v, dict):
            out.write(f"{pad}{k}:\n{_text(v, indent + 1)}")
        elif isinstance(v, list):
            out.write(f"{pad}{k:<{width}}  {', '.join(_scalar(x) for x in v)}\n")
        else:
            out.write(f"{pad}{k:<{width}}  {_scalar(v)}\n")
    return out.getvalue()


def _scalar(x) -> str:
    if isinstance(x, float):
        return fmt(x)
    if isinstance(x, list):
        return "(" + ", ".join(_scalar(y) for y in x) + ")"
    return str(x)


def eigenline_rows(n, a, b, c_min, c_max, steps, variant=N2Variant.DOUBLED):
    """Rows of (c, lambda_-, lambda_+, lambda_1..lambda_{n-1}, c + 2a, -n c)."""
    for i in range(steps):
        c = c_min + (c_max - c_min) * i / (steps - 1)
        spec = spectrum(AbcParams(n, a, b, c, variant))
        yield [c, spec.lambda_minus, spec.lambda_plus, *spec.lambda_k, c + 2 * a, -(n * c)]


def cmd_eigenlines(args, parser) -> int:
    if args.steps < 2:
        parser.error("--steps must be >= 2")
    if not args.c_min < args.c_max:
        parser.error("--c-min must be < --c-max")
    if args.n < 2:
        parser.error("--n must be >= 2")
    if args.b == 0:
        parser.error("--b must be nonzero")
    header = ["c", "lambda_minus", "lambda_plus"]
    header += [f"lambda_{k}" for k in range(1, args.n)] + ["lambda_sep", "lambda_neg_nc"]
    with open_out(args.out) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in eigenline_rows(args.n, args.a, args.b, args.c_min, args.c_max, args.steps, _variant(args)):
            w.writerow([fmt(x) for x in row])
    return 0


def transition_rows(n_list, a_values, mark_a=()):
    """Rows (a, n, c_trans, lambda_trans); n = inf for the limit point. a = 0 is skipped."""
    skipped = 0
    rows = []
    for a in list(a_values) + list(mark_a):
        if a == 0:
            skipped += 1
            continue
        for n in n_list:
            c, lam = transition_point(n, a)
            rows.append((a, n, c, lam))
        c, lam = limit_transition_point(a)
        rows.append((a, math.inf, c, lam))
    return rows, skipped


def cmd_transition_curve(args, parser) -> int:
    try:
        n_list = [int(x) for x in args.n_list.split(",") if x.strip()]
    except ValueError:
        parser.error(f"bad --n-list {args.n_list!r}")
    if not n_list or min(n_list) < 2:
        parser.error("--n-list entries must be >= 2")
    if args.steps < 2:
        parser.error("--steps must be >= 2")
    a_vals = [args.a_min + (args.a_max - args.a_min) * i / (args.steps - 1) for i in range(args.steps)]
    rows, skipped = transition_rows(n_list, a_vals, args.mark_a or ())
    if skipped:
        print(f"warning: skipped {skipped} a = 0 value(s); transition undefined", file=sys.stderr)
    with open_out(args.out) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["a", "n", "c_trans", "lambda_trans"])
        for a, n, c, lam in rows:
            w.writerow([fmt(a), "inf" if n == math.inf else n, fmt(c), fmt(lam)])
    return 0


def extremes_report(n: int, a: float, variant: N2Variant = N2Variant.DOUBLED) -> dict:
    sp = special_points(n, a, variant)
    report = {
        "n": n,
        "a": a,
        "variant": variant.value,
        "regime": sp.regime.value,
        "uppermost": _point(sp.uppermost),
        "lowermost": _point(sp.lowermost),
        "transition": _point(sp.transition),
        "transition_branch": sp.transition_branch.value if sp.transition_branch else None,
        "limit_transition": _point(sp.limit_transition),
    }
    if n % 2 == 0:
        extrema = extreme_extrema(n, a, variant)
        report["method"] = "closed_form"
    else:
        extrema = numeric_extreme_extrema(n, a, variant)
        report["method"] = "golden_section"
        report["notice"] = (
            "odd n: the transition point is not a branch switch; extrema found numerically "
            "over the analytic spectrum"
        )
    for e in extrema:
        report[e.kind.value] = {
            **_point(e.location),
            "degeneracy": e.degeneracy,
            "configuration": e.configuration.value if e.configuration else None,
        }
    return report


def cmd_extremes(args, parser) -> int:
    if args.n < 2:
        parser.error("--n must be >= 2")
    report = extremes_report(args.n, args.a, _variant(args))
    if args.format == "json":
        emit_json(report, args.out)
    else:
        with open_out(args.out) as fh:
            fh.write(_text(report))
    return 0


def cmd_verify(args, parser) -> int:
    if args.trials < 1:
        parser.error("--trials must be >= 1")
    tol = args.tol
    if tol is None:
        tol = float(os.environ.get(TOL_ENV, DEFAULT_TOL))
    if not tol > 0:
        parser.error("--tol must be positive")
    report = run_verification(args.trials, args.seed, tol)
    if args.format == "json":
        emit_json(report.to_dict(), args.out)
    else:
        with open_out(args.out) as fh:
            fh.write(f"verify: trials={args.trials} seed={args.seed} tol={tol:g}\n")
            for s in report.suites:
                status = "PASS" if s.passed else "FAIL"
                fh.write(
                    f"  {status}  {s.name:<20} worst={s.worst:.3e} threshold={s.threshold:.3e}"
                    f" failures={s.failures}\n"
                )
                if not s.passed:
                    fh.write(f"        worst case: {s.worst_case}\n")
            fh.write("all suites passed\n" if report.passed else "verification FAILED\n")
    return 0 if report.passed else 1


def cmd_graph(args, parser) -> int:
    if args.n < 2:
        parser.error("--n must be >= 2")
    wheel = build_wheel(_params(args))
    if args.format == "json":
        emit_json(to_json_dict(wheel), args.out)
    else:
        with open_out(args.out) as fh:
            fh.write(to_dot(wheel))
    return 0


def _add_abc(p, with_c=True):
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--b", type=float, default=1.0)
    if with_c:
        p.add_argument("--c", type=float, default=0.0)
    p.add_argument("--variant", choices=[v.value for v in N2Variant], default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="abcspec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="closed-form spectrum of m_n(a, b, c)")
    _add_abc(p)
    p.add_argument("--eigenvectors", action="store_true")
    p.add_argument("--allow-diagonal", action="store_true")
    p.add_argument("--format", choices=["json", "text", "csv"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("eigenlines", help="CSV of all eigenvalues along a c sweep")
    _add_abc(p, with_c=False)
    p.add_argument("--c-min", type=float, required=True)
    p.add_argument("--c-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=601)
    p.add_argument("--out")
    p.set_defaults(func=cmd_eigenlines)

    p = sub.add_parser("transition-curve", help="CSV of transition points T_n(a)")
    p.add_argument("--n-list", default="2,3,4,5,7,10,20")
    p.add_argument("--a-min", type=float, required=True)
    p.add_argument("--a-max", type=float, required=True)
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--mark-a", type=float, action="append", help="extra a values (repeatable)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_transition_curve)

    p = sub.add_parser("extremes", help="special points and extreme extrema")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--variant", choices=[v.value for v in N2Variant], default=None)
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_extremes)

    p = sub.add_parser("verify", help="randomized analytic-vs-oracle property suites")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tol", type=float, default=None, help=f"default 1e-9 or ${TOL_ENV}")
    p.add_argument("--format", choices=["json", "text"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph", help="export the weighted wheel graph")
    _add_abc(p)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_graph)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except AbcError as e:
        parser.error(str(e))


if __name__ == "__main__":
    sys.exit(main())
