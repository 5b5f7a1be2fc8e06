"""Transition points T_n(a) for several n plus the n -> inf limit curve."""

import argparse
import csv
import math
from pathlib import Path

import numpy as np

from abcspec.cli import fmt, transition_rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-list", default="2,3,4,5,7,10,20")
    ap.add_argument("--a-min", type=float, default=-3.0)
    ap.add_argument("--a-max", type=float, default=3.0)
    ap.add_argument("--steps", type=int, default=400)
    ap.add_argument("--out", type=Path, default=Path("results/transition_curves.csv"))
    args = ap.parse_args()
    args.out.parent.mkdir(parents=True, exist_ok=True)

    n_list = [int(x) for x in args.n_list.split(",")]
    a_vals = np.linspace(args.a_min, args.a_max, args.steps)
    rows, skipped = transition_rows(n_list, a_vals[a_vals != 0], mark_a=(2.0,))
    with args.out.open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["a", "n", "c_trans", "lambda_trans"])
        for a, n, c, lam in rows:
            w.writerow([fmt(a), "inf" if n == math.inf else n, fmt(c), fmt(lam)])
    print(f"wrote {len(rows)} rows to {args.out}")


if __name__ == "__main__":
    main()
