"""Bounds on m for triangulated tori: heuristic search and, when small enough, exhaustive subset DP.

    python scripts/torus_m.py --sizes 4x4 4x5 5x5 --exact-up-to 16 --seed 0
"""

import argparse
import time

from graphmorse.generators import triangulated_torus
from graphmorse.morse import index_report
from graphmorse.spectrum import m_exact, m_search


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--sizes", nargs="+", default=["4x4", "5x5"])
    ap.add_argument("--exact-up-to", type=int, default=16, help="largest order for the exhaustive DP")
    ap.add_argument("--seed", type=int, required=True)
    args = ap.parse_args()

    for size in args.sizes:
        n, m = map(int, size.split("x"))
        T = triangulated_torus(n, m)
        t0 = time.perf_counter()
        r = m_search(T, seed=args.seed)
        rep = index_report(T, r.witness)
        crit = sorted(rep.indices[v] for v in rep.critical_points)
        line = f"{size}: search lower={r.lower} upper={r.upper} indices={crit} ({time.perf_counter() - t0:.2f}s)"
        if T.order <= args.exact_up_to:
            t0 = time.perf_counter()
            line += f"; exhaustive m={m_exact(T, max_order=T.order).upper} ({time.perf_counter() - t0:.2f}s)"
        print(line)


if __name__ == "__main__":
    main()
