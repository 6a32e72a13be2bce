"""Peel the predicted interior terms from the weighted unit-ball trace and fit the boundary terms.

    python scripts/ball_fit.py --alpha 0.5
"""

import argparse
import sys

import numpy as np

from heattrace.fit import fit_coefficients, ladder_from, peel_leading
from heattrace.geometry import Ball3
from heattrace.predict import full_expansion
from heattrace.spectrum.trace import weighted_trace
from heattrace.weight import CutoffSpec, WeightProfile


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--alpha", type=float, default=0.5)
    ap.add_argument("--t-min", type=float, default=1e-4)
    ap.add_argument("--t-max", type=float, default=6e-3)
    args = ap.parse_args()

    ball = Ball3(1.0)
    w = WeightProfile(args.alpha, (1.0, 0.3), CutoffSpec(0.4, 0.6))
    t = np.geomspace(args.t_min, args.t_max, 24)
    s = weighted_trace(ball, w, t)
    pred = full_expansion(ball, w)
    ladder = ladder_from(pred)
    rep = fit_coefficients(s, ladder, len(ladder), pred)
    print(f"{s.n_modes} modes up to lambda={s.lambda_max:.3g}; condition {rep.condition:.3g}")
    for term in rep.terms:
        print(f"  t^{term.power:+.3f}  fitted {term.fitted:+.10f}  predicted {term.predicted:+.10f}  "
              f"rel {term.rel_dev:.2e}")
    c, p = peel_leading(s, pred.truncated(1))
    print(f"after the leading term: remainder ~ {c:+.6f} t^{p:+.4f} "
          f"(predicted {complex(pred.terms[1].coefficient).real:+.6f} t^{pred.terms[1].power:+.4f})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
