"""Run the acceptance criteria and write a JSON report.

    python scripts/run_acceptance.py --out results/acceptance.json [--criteria 1 2 7]
"""

import argparse
import json
import sys
from pathlib import Path

from heattrace.acceptance import AcceptanceConfig, run_all


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("results/acceptance.json"))
    ap.add_argument("--criteria", type=int, nargs="+")
    args = ap.parse_args()
    cfg = AcceptanceConfig()
    results = run_all(cfg, args.criteria, echo=print)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps({"config": cfg.to_json(), "criteria": [r.to_json() for r in results]}, indent=2))
    print(f"{sum(r.passed for r in results)}/{len(results)} passed; report in {args.out}")
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
