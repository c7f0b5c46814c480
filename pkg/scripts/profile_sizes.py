"""Compare voter counts of the orbit construction with the classic
two-orders-per-edge construction, over random full targets.

    python3 scripts/profile_sizes.py --n 5 --samples 50 --csv sizes.csv
"""
import argparse
import csv
import random
import statistics
import sys

from majority_closure.core import all_full
from majority_closure.generators import cyclic, linear
from majority_closure.realizability import decide_membership
from majority_closure.synthesis import mcgarvey_classic, realize_target
from majority_closure.verify import verify


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--samples", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--csv")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    targets = list(all_full(args.n))
    picks = rng.sample(targets, min(args.samples, len(targets)))
    families = {"linear": linear(args.n)}
    if args.n % 2:
        families["cyclic"] = cyclic(args.n)

    rows = []
    for c in picks:
        row = {"target_code": c.code, "classic": mcgarvey_classic(args.n, c).size}
        for name, d in families.items():
            if decide_membership(d, c).member:
                p = realize_target(d, c)
                assert verify(p, c).passed
                row[name] = p.size
            else:
                row[name] = ""
        rows.append(row)

    for key in ["classic", *families]:
        vals = [r[key] for r in rows if r[key] != ""]
        if vals:
            print(f"{key:8s} realized {len(vals):3d}/{len(rows)}  voters: min {min(vals)}, "
                  f"median {statistics.median(vals)}, max {max(vals)}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
            writer.writeheader()
            writer.writerows(rows)


if __name__ == "__main__":
    sys.exit(main())
