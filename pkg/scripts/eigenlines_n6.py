"""Eigenlines of m_6(2, 1, c) over c in [-3, 3], with the special points marked.

Writes two CSVs: the eigenline sweep and the special points U, L, T, T_inf and
the crossing abscissas c_k.
"""

import argparse
import csv
from pathlib import Path

from abcspec import crossing_abscissas, special_points
from abcspec.cli import eigenline_rows, fmt


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--a", type=float, default=2.0)
    ap.add_argument("--steps", type=int, default=1201)
    ap.add_argument("--outdir", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    lines = args.outdir / f"eigenlines_n{args.n}_a{args.a:g}.csv"
    with lines.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(
            ["c", "lambda_minus", "lambda_plus"]
            + [f"lambda_{k}" for k in range(1, args.n)]
            + ["lambda_sep", "lambda_neg_nc"]
        )
        for row in eigenline_rows(args.n, args.a, 1.0, -3.0, 3.0, args.steps):
            w.writerow([fmt(x) for x in row])

    sp = special_points(args.n, args.a)
    marks = args.outdir / f"special_points_n{args.n}_a{args.a:g}.csv"
    with marks.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["label", "c", "lambda"])
        for label, pt in (
            ("U", sp.uppermost),
            ("L", sp.lowermost),
            ("T", sp.transition),
            ("T_inf", sp.limit_transition),
        ):
            if pt is not None:
                w.writerow([label, fmt(pt[0]), fmt(pt[1])])
        if args.a != 0:
            for k, c in enumerate(crossing_abscissas(args.n, args.a), start=1):
                w.writerow([f"c_{k}", fmt(c), ""])
    print(f"wrote {lines} and {marks}")


if __name__ == "__main__":
    main()
