"""Census vs fast-chi timings on G(n, p), median over seeds.

    python scripts/bench_fast_chi.py --n 20 30 40 --p 0.5 --seeds 5 --budget 20000000
"""

import argparse
import statistics
import sys

from graphmorse.experiments import bench, disagreements
from graphmorse.generators import FamilySpec


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--n", type=int, nargs="+", default=[20, 30])
    ap.add_argument("--p", type=float, default=0.5)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--budget", type=int, default=None)
    args = ap.parse_args()

    print("n,p,census_us,fast_us,gaussbonnet_us,census_over_fast,over_budget")
    for n in args.n:
        specs = [FamilySpec("erdos_renyi", (n,), args.p, s) for s in range(args.seeds)]
        rows = bench(specs, ("cliques", "fast", "gaussbonnet"), budget=args.budget)
        if disagreements(rows):
            sys.exit(f"methods disagree at n={n}: {disagreements(rows)}")
        t = {m: statistics.median(int(r["wall_time_us"]) for r in rows if r["method"] == m)
             for m in ("cliques", "fast", "gaussbonnet")}
        over = sum(r["chi"] == "" for r in rows)
        print(f"{n},{args.p},{t['cliques']:.0f},{t['fast']:.0f},{t['gaussbonnet']:.0f},"
              f"{t['cliques'] / t['fast']:.2f},{over}")
        sys.stdout.flush()


if __name__ == "__main__":
    main()
