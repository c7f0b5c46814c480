"""Run every exhaustive sweep for n = 3..5 and write the reports to a directory.

    python3 scripts/run_sweeps.py --out results --workers 4
"""
import argparse
import time
from pathlib import Path

from majority_closure.enumeration import Mode, enumerate_check

PLAN = [
    (3, Mode.CLASSIFY), (3, Mode.DECIDE_VS_ORACLE), (3, Mode.SYNTHESIZE_ALL),
    (4, Mode.CLASSIFY), (4, Mode.DECIDE_VS_ORACLE), (4, Mode.SYNTHESIZE_ALL),
    (5, Mode.DECIDE_VS_ORACLE), (5, Mode.SYNTHESIZE_ALL), (5, Mode.CLASSIFY),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="results")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--max-n", type=int, default=5)
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    failures = 0
    for n, mode in PLAN:
        if n > args.max_n:
            continue
        start = time.perf_counter()
        report = enumerate_check(n, mode, workers=args.workers)
        elapsed = time.perf_counter() - start
        (out / f"n{n}_{mode.value}.txt").write_text(report.render())
        failures += not report.ok
        print(f"n={n} {mode.value:17s} pairs={report.families_tested * report.targets_tested:6d} "
              f"realizable={report.realizable_count:6d} disagreements={len(report.disagreements)} "
              f"({elapsed:.1f}s)")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
