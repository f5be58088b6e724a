"""Check every chi method and both counting identities over the acceptance corpus.

    python scripts/corpus_sweep.py --functions 20 --seed 1
"""

import argparse
import random
import time

from graphmorse.curvature import gauss_bonnet_report
from graphmorse.fastchi import fast_euler
from graphmorse.generators import acceptance_corpus
from graphmorse.graph import clique_census
from graphmorse.morse import index_report, random_morse, verify_intermediate, verify_transfer


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--functions", type=int, default=20, help="random Morse functions per graph")
    ap.add_argument("--seed", type=int, required=True)
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    t0 = time.perf_counter()
    graphs = bad = 0
    for name, G in acceptance_corpus():
        graphs += 1
        chi = clique_census(G).euler
        problems = []
        if gauss_bonnet_report(G, verify=False).total != chi:
            problems.append("curvature")
        if fast_euler(G) != chi:
            problems.append("fast")
        if not verify_transfer(G):
            problems.append("transfer")
        for _ in range(args.functions):
            s = rng.getrandbits(32)
            f = random_morse(G, s)
            if index_report(G, f).index_sum != chi:
                problems.append(f"hopf@{s}")
            if not verify_intermediate(G, f):
                problems.append(f"intermediate@{s}")
        if problems:
            bad += 1
            print(f"{name}: chi={chi} FAILED {' '.join(problems)}")
        elif args.verbose:
            print(f"{name}: chi={chi} ok")
    print(f"{graphs} graphs, {bad} with failures, {time.perf_counter() - t0:.1f}s")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
