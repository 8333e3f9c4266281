"""Seeded random graphs for tests and desk-scale benchmarks."""

from __future__ import annotations

import random

from .cores import compute_cores
from .graph import Graph, GraphView

USAIR_SHAPE = (332, 2126, 26)


def erdos_renyi(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_int_edges(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p])


def _connected(adj: list[set[int]]) -> bool:
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def _hub_graph(n: int, m: int, hubs: int, p_hub: float, rng: random.Random) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(n)]

    def add(a: int, b: int) -> bool:
        if a == b or b in adj[a]:
            return False
        adj[a].add(b)
        adj[b].add(a)
        return True

    for a in range(hubs):
        for b in range(a + 1, hubs):
            if rng.random() < p_hub:
                add(a, b)
    # Spokes: every peripheral node attaches to hubs with a heavy-tailed count.
    for v in range(hubs, n):
        for _ in range(min(hubs, max(1, int(rng.paretovariate(1.3))))):
            add(v, rng.randrange(hubs) if rng.random() < 0.8 else rng.randrange(hubs, n))
    edges = sum(len(s) for s in adj) // 2
    while edges < m:
        a = rng.randrange(n)
        b = rng.randrange(hubs) if rng.random() < 0.5 else rng.randrange(n)
        edges += add(a, b)
    while edges > m:
        a = rng.randrange(hubs, n)
        if len(adj[a]) > 1:
            b = rng.choice(sorted(adj[a]))
            if len(adj[b]) > 1:
                adj[a].discard(b)
                adj[b].discard(a)
                edges -= 1
    return adj


def usair_like(seed: int = 0) -> Graph:
    """Hub-and-spoke graph with 332 nodes, 2126 edges and maximum core value 26.

    A stand-in with the published size of the US airport network: a dense
    hub club plus heavy-tailed peripheral attachment. Deterministic in
    ``seed``; retries derived seeds until the shape matches exactly.
    """
    n, m, kmax = USAIR_SHAPE
    for attempt in range(1000):
        rng = random.Random(f"usair:{seed}:{attempt}")
        adj = _hub_graph(n, m, hubs=40, p_hub=0.75, rng=rng)
        if any(not s for s in adj) or not _connected(adj):
            continue
        g = Graph.from_int_edges(n, [(a, b) for a in range(n) for b in adj[a] if a < b])
        if compute_cores(GraphView(g)).max_core == kmax:
            return g
    raise RuntimeError("could not match the target shape")
