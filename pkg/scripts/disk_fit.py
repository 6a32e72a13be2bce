"""Fitted vs predicted small-t coefficients of the weighted disk trace over a range of alpha.

    python scripts/disk_fit.py --alphas 0.25 0.5 0.75 1.0 1.5 --csv results/disk_fit.csv
"""

import argparse
import csv
import sys
from pathlib import Path

import numpy as np

from heattrace.fit import fit_coefficients, ladder_from
from heattrace.geometry import Disk
from heattrace.predict import full_expansion
from heattrace.spectrum.trace import weighted_traces
from heattrace.weight import CutoffSpec, WeightProfile


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alphas", type=float, nargs="+", default=[0.25, 0.5, 0.75, 1.0])
    ap.add_argument("--t-min", type=float, default=1e-4)
    ap.add_argument("--t-max", type=float, default=6e-3)
    ap.add_argument("--t-points", type=int, default=24)
    ap.add_argument("--eps0", type=float, default=0.4)
    ap.add_argument("--eps", type=float, default=0.6)
    ap.add_argument("--csv", type=Path)
    args = ap.parse_args()

    disk = Disk(1.0)
    t = np.geomspace(args.t_min, args.t_max, args.t_points)
    weights = [WeightProfile(a, (1.0,), CutoffSpec(args.eps0, args.eps)) for a in args.alphas]
    traces = weighted_traces(disk, weights, t)  # one spectrum for all alphas
    rows = []
    for w, s in zip(weights, traces):
        pred = full_expansion(disk, w)
        rep = fit_coefficients(s, ladder_from(pred), len(ladder_from(pred)), pred)
        for term in rep.terms:
            rows.append({"alpha": w.alpha, "power": term.power, "log": term.log, "fitted": term.fitted,
                         "predicted": term.predicted, "rel_dev": term.rel_dev, "stderr": term.stderr})
    print(f"{'alpha':>6} {'power':>7} {'log':>4} {'fitted':>14} {'predicted':>14} {'rel_dev':>9}")
    for r in rows:
        print(f"{r['alpha']:6.2f} {r['power']:7.3f} {str(r['log'])[0]:>4} {r['fitted']:14.8g} "
              f"{r['predicted']:14.8g} {r['rel_dev']:9.2e}")
    if args.csv:
        args.csv.parent.mkdir(parents=True, exist_ok=True)
        with open(args.csv, "w", newline="") as fh:
            wr = csv.DictWriter(fh, fieldnames=list(rows[0]))
            wr.writeheader()
            wr.writerows(rows)
    return 0


if __name__ == "__main__":
    sys.exit(main())
