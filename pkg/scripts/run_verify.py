"""Run every verification suite and write the JSON report.

    python3 scripts/run_verify.py [--seed 42] [--out results/verify.json]
"""

import argparse
import json
import time
from pathlib import Path

from hypmetrics.analysis import SUITES, VerifyConfig, run_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--out", default="results/verify.json")
    args = ap.parse_args()
    cfg = VerifyConfig(seed=args.seed)
    reports = []
    for sid in SUITES:
        t0 = time.perf_counter()
        rep = run_suite(sid, cfg)
        dt = time.perf_counter() - t0
        print(f"{sid:<10} checked {rep.checked:>7}  violations {len(rep.violations):>3}  "
              f"max ratio {rep.max_ratio:8.4f}  {dt:6.1f}s")
        reports.append(rep.to_dict())
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps({"seed": args.seed, "suites": reports}, indent=2) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
