"""Compare heuristic NR against the exhaustive optimum on small random graphs.

For every node with a nonzero core value, print how often each method hits the
optimum, how often it stays within the core-strength budget, and the mean gap.
"""

import argparse
import random
from collections import defaultdict

from kcollapse.baselines import knm, sv
from kcollapse.cores import compute_cores
from kcollapse.corona import core_strength
from kcollapse.graph import GraphView
from kcollapse.oracle import exact_nr
from kcollapse.solvers import atnc, tnc
from kcollapse.synthetic import erdos_renyi

METHODS = {"tnc": tnc, "atnc": atnc, "knm": knm, "sv": sv}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=30)
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    hits = defaultdict(int)
    within = defaultdict(int)
    gap = defaultdict(int)
    nodes = 0
    for s in range(args.graphs):
        rng = random.Random(args.seed + s)
        g = erdos_renyi(rng.randint(6, args.max_n), rng.choice((0.3, 0.5, 0.7)), seed=args.seed + s)
        v = GraphView(g)
        idx = compute_cores(v)
        for i in range(g.node_count):
            if idx.core[i] == 0:
                continue
            cs = core_strength(v, idx, i)
            best = exact_nr(g, i, size_cap=cs).nr
            nodes += 1
            for name, fn in METHODS.items():
                nr = fn(g, i).nr
                hits[name] += nr == best
                within[name] += nr <= cs
                gap[name] += nr - best

    print(f"{nodes} nodes over {args.graphs} graphs")
    print("method,optimal,within_cs,mean_gap")
    for name in METHODS:
        print(f"{name},{hits[name] / nodes:.3f},{within[name] / nodes:.3f},{gap[name] / nodes:.3f}")


if __name__ == "__main__":
    main()
