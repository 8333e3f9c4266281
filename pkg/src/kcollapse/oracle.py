"""Exact node robustness by exhaustive subset search (small graphs only)."""

from __future__ import annotations

import itertools
import math
import time
from typing import Iterable

from .corona import candidate_edges, core_strength
from .cores import compute_cores, in_kcore
from .graph import Edge, Graph, GraphError, GraphView, canonical
from .solvers import CollapseResult


class OracleInfeasible(RuntimeError):
    """The instance exceeds the configured search budget; no answer is given."""


def verify_collapse(graph: Graph, target: int, edges: Iterable[Edge]) -> bool:
    """Whether deleting ``edges`` and recomputing from scratch drops the target's core value."""
    view = GraphView(graph)
    k = compute_cores(view).core[target]
    for e in edges:
        u, v = canonical(*e)
        if not graph.has_edge(u, v):
            raise GraphError(f"edge {(u, v)} is not in the graph")
        if (u, v) not in view.deleted:
            view.delete_edge((u, v))
    return compute_cores(view).core[target] < k


def _component(view: GraphView, core: list[int], i: int, k: int) -> set[int]:
    seen = {i}
    stack = [i]
    while stack:
        u = stack.pop()
        for w in view.adj[u]:
            if core[w] >= k and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def oracle_candidates(graph: Graph, target: int, mode: str = "reduced") -> list[Edge]:
    view = GraphView(graph)
    index = compute_cores(view)
    k = index.core[target]
    if mode == "full":
        return graph.edges()
    if mode != "reduced":
        raise ValueError(f"unknown candidate mode {mode!r}")
    comp = _component(view, index.core, target, k)
    return sorted(e for e in candidate_edges(view, index, k) if e[0] in comp)


def exact_nr(
    graph: Graph,
    target: int,
    candidate_mode: str = "reduced",
    size_cap: int = 4,
    budget: int = 10**7,
) -> CollapseResult:
    """Smallest edge set whose deletion drops the target's core value.

    Subsets are tried by increasing size, each size in lexicographic order of
    canonical edges, so the witness is the lexicographically first minimum.
    ``reduced`` restricts candidates to edges at the target's core level
    inside its k-core component; ``full`` tries every edge.
    """
    t0 = time.perf_counter()
    base = GraphView(graph)
    index = compute_cores(base)
    k = index.core[target]
    if k < 1:
        raise GraphError(f"target {target} has core value 0")
    cs = core_strength(base, index, target)
    depth = min(cs, size_cap)
    cands = oracle_candidates(graph, target, candidate_mode)
    cost = sum(math.comb(len(cands), m) for m in range(1, depth + 1))
    if cost > budget:
        raise OracleInfeasible(f"{cost} subsets exceed budget {budget}")
    for m in range(1, depth + 1):
        for subset in itertools.combinations(cands, m):
            for u, v in subset:
                base.adj[u].discard(v)
                base.adj[v].discard(u)
            hit = not in_kcore(base, target, k)
            for u, v in subset:
                base.adj[u].add(v)
                base.adj[v].add(u)
            if hit:
                res = CollapseResult(target, f"oracle-{candidate_mode}", k, list(subset))
                res.wall_time = time.perf_counter() - t0
                return res
    raise OracleInfeasible(f"no collapse set of size <= {depth}; core strength is {cs}")
