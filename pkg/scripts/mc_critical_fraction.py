"""Fraction of critical vertices for random Morse functions on G(n, p).

    python scripts/mc_critical_fraction.py --p 0.2 0.5 0.8 --trials 5000 --seed 1
"""

import argparse
import csv
import sys

from graphmorse.experiments import mc_critical


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, nargs="+", default=[6, 10, 14])
    ap.add_argument("--p", type=float, nargs="+", default=[0.5])
    ap.add_argument("--trials", type=int, default=20000)
    ap.add_argument("--seed", type=int, required=True)
    args = ap.parse_args()

    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "p", "trials", "seed", "critical_fraction", "half_width_95"])
    for n in args.n:
        for p in args.p:
            res = mc_critical(n, p, args.trials, args.seed)
            w.writerow([n, p, args.trials, args.seed, f"{float(res.critical_fraction):.4f}", f"{res.half_width:.4f}"])
            sys.stdout.flush()


if __name__ == "__main__":
    main()
