"""Tabulate certificate outcomes for every full generator at a given n:
how many are balanced, the side-1 mass range, and support sizes.

    python3 scripts/certificate_census.py --n 5
"""
import argparse
from collections import Counter

from majority_closure.core import all_full
from majority_closure.realizability import certificate_obstruction, f_certificate


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=5)
    args = ap.parse_args()

    supports, masses = Counter(), Counter()
    balanced = 0
    for d in all_full(args.n):
        cert = f_certificate(d)
        if cert is None:
            assert certificate_obstruction(d).verify()
            balanced += 1
            continue
        supports[len(cert.support0) + len(cert.support1)] += 1
        masses[str(cert.r1)] += 1
    total = 2 ** (args.n * (args.n - 1) // 2)
    print(f"n={args.n}: {total} full generators, {balanced} balanced (obstruction verified)")
    print("support size: " + ", ".join(f"{k}: {v}" for k, v in sorted(supports.items())))
    print("side-1 mass:  " + ", ".join(f"{k}: {v}" for k, v in sorted(masses.items())))


if __name__ == "__main__":
    main()
