"""Core decomposition and core maintenance under edge deletion."""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Edge, GraphError, GraphView, canonical


@dataclass
class CoreIndex:
    core: list[int]

    @property
    def max_core(self) -> int:
        return max(self.core, default=0)

    def copy(self) -> "CoreIndex":
        return CoreIndex(list(self.core))


@dataclass
class CascadeReport:
    edge: Edge
    collapsed: set[int] = field(default_factory=set)


def compute_cores(view: GraphView) -> CoreIndex:
    """Core values of the live graph by bucket peeling (Batagelj-Zaversnik)."""
    n = view.node_count
    deg = [len(s) for s in view.adj]
    md = max(deg, default=0)
    bins = [0] * (md + 1)
    for d in deg:
        bins[d] += 1
    start = 0
    for d in range(md + 1):
        bins[d], start = start, start + bins[d]
    pos = [0] * n
    vert = [0] * n
    for v in range(n):
        pos[v] = bins[deg[v]]
        vert[pos[v]] = v
        bins[deg[v]] += 1
    for d in range(md, 0, -1):
        bins[d] = bins[d - 1]
    bins[0] = 0
    adj = view.adj
    for i in range(n):
        v = vert[i]
        for u in adj[v]:
            if deg[u] > deg[v]:
                du = deg[u]
                pu = pos[u]
                pw = bins[du]
                w = vert[pw]
                if u != w:
                    pos[u], pos[w] = pw, pu
                    vert[pu], vert[pw] = w, u
                bins[du] += 1
                deg[u] -= 1
    return CoreIndex(deg)


def kcore_members(index: CoreIndex, k: int) -> set[int]:
    return {i for i, c in enumerate(index.core) if c >= k}


def in_kcore(view: GraphView, i: int, k: int) -> bool:
    """Whether node ``i`` survives peeling of the live graph down to its k-core."""
    if len(view.adj[i]) < k:
        return False
    adj = view.adj
    deg = [len(s) for s in adj]
    alive = [True] * view.node_count
    stack = [v for v, d in enumerate(deg) if d < k]
    for v in stack:
        alive[v] = False
    while stack:
        v = stack.pop()
        if v == i:
            return False
        for u in adj[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] < k:
                    alive[u] = False
                    stack.append(u)
    return alive[i]


def collapse_set(view: GraphView, core: list[int], u: int, v: int) -> set[int]:
    """Nodes whose core value drops if live edge ``(u, v)`` were removed.

    Pure: neither the view nor ``core`` is modified. Only nodes with core
    value ``min(core[u], core[v])`` can drop, each by exactly one.
    """
    k = min(core[u], core[v])
    if k == 0:
        return set()
    adj = view.adj
    evicted: set[int] = set()
    support: dict[int, int] = {}

    def count(x: int) -> int:
        c = 0
        for w in adj[x]:
            if core[w] >= k and w not in evicted:
                c += 1
        return c

    # The removed edge is excluded by pre-decrementing its endpoints' support.
    stack: list[int] = []
    for x in (u, v):
        if core[x] == k:
            support[x] = count(x) - 1
            if support[x] < k:
                stack.append(x)
    while stack:
        x = stack.pop()
        if x in evicted:
            continue
        evicted.add(x)
        for w in adj[x]:
            if core[w] != k or w in evicted:
                continue
            if (x == u and w == v) or (x == v and w == u):
                continue
            if w in support:
                support[w] -= 1
            else:
                support[w] = count(w)
            if support[w] < k:
                stack.append(w)
    return evicted


def cascade_after_removal(
    view: GraphView, index: CoreIndex, e: Edge, validate: bool = False
) -> CascadeReport:
    """Delete ``e`` from ``view`` and update ``index`` in place."""
    u, v = canonical(*e)
    if not view.has_edge(u, v):
        raise GraphError(f"edge {(u, v)} is not live")
    if len(index.core) != view.node_count:
        raise GraphError("core index does not match view")
    collapsed = collapse_set(view, index.core, u, v)
    view.delete_edge((u, v))
    for x in collapsed:
        index.core[x] -= 1
    if validate:
        fresh = compute_cores(view).core
        if fresh != index.core:
            raise GraphError("incremental core index diverged from recomputation")
    return CascadeReport((u, v), collapsed)
