"""Sweep all six methods over an edge list (or the seeded surrogate) and print a comparison table.

    python scripts/run_usair_like.py                 # surrogate with the USAir shape
    python scripts/run_usair_like.py path/to/edges.txt --threads 4
"""

import argparse
import time

from kcollapse.evaluation import METHODS, compare, sweep
from kcollapse.graph import read_edge_list
from kcollapse.synthetic import usair_like


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("edges", nargs="?", help="edge-list file; omit to use the surrogate graph")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--timeout", type=float, default=60.0, help="per-node time limit in seconds")
    args = ap.parse_args()

    g = read_edge_list(args.edges) if args.edges else usair_like(args.seed)
    print(f"# nodes={g.node_count} edges={g.edge_count}")
    reports = []
    for m in METHODS:
        t0 = time.perf_counter()
        reports.append(sweep(g, m, seed=args.seed, threads=args.threads, timeout=args.timeout))
        print(f"# {m}: {time.perf_counter() - t0:.1f}s")
    print(compare(reports), end="")


if __name__ == "__main__":
    main()
