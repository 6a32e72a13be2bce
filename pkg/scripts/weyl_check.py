"""Compare eigenvalue counts with the two-term Weyl law for every model geometry.

    python scripts/weyl_check.py --lambdas 100 1000 10000
"""

import argparse
import math
import sys

from heattrace.geometry import Annulus, Ball3, Cylinder, Disk, Hemisphere, Interval
from heattrace.spectrum.modes import eigenvalues, weyl_count

GEOMS = [Interval(math.pi), Disk(1.0), Annulus(0.5, 1.0), Cylinder(1.0, math.pi), Ball3(1.0), Hemisphere(1.0)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lambdas", type=float, nargs="+", default=[100.0, 1000.0, 10000.0])
    args = ap.parse_args()
    print(f"{'geometry':>10} {'lambda':>9} {'N':>8} {'weyl':>10} {'ratio':>7}")
    for g in GEOMS:
        for lam in args.lambdas:
            n = sum(line.multiplicity for line in eigenvalues(g, lam))
            wc = weyl_count(g, lam)
            print(f"{type(g).__name__:>10} {lam:9.0f} {n:8d} {wc:10.1f} {n / wc:7.4f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
