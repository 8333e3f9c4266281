"""Comparison methods: random edge deletion, random neighbor disconnection,
greedy k-core minimization (KNM) and Shapley-weighted deletion (SV).

KNM and SV pick edges without looking at the target, so their removal order
for a given core level is shared by every target at that level. The
``*_sequence`` helpers expose that order so a sweep can compute it once per
level; the per-target functions stop as soon as the target collapses.
"""

from __future__ import annotations

import itertools
import math
import random
import time

from .corona import candidate_edges
from .cores import CoreIndex, collapse_set, compute_cores
from .graph import Edge, Graph, GraphView
from .solvers import CollapseResult, Session, SolverTimeout


def _lazy_remove(view: GraphView, core: list[int], e: Edge, floor: int) -> set[int]:
    """Remove ``e`` keeping core values exact only for levels >= ``floor``.

    An edge whose endpoint core minimum is below ``floor`` cannot change any
    value at or above ``floor``; such edges are dropped without maintenance,
    which leaves lower core values as upper bounds.
    """
    u, v = e
    if min(core[u], core[v]) >= floor:
        dropped = collapse_set(view, core, u, v)
        for x in dropped:
            core[x] -= 1
    else:
        dropped = set()
    view.adj[u].discard(v)
    view.adj[v].discard(u)
    view.deleted.add(e)
    return dropped


def _run_order(s: Session, order: list[Edge], skip_inactive: bool = False) -> CollapseResult:
    core = s.index.core
    k = s.k
    for e in order:
        if not s.alive():
            break
        if s.deadline is not None and time.monotonic() > s.deadline:
            raise SolverTimeout(f"deadline exceeded collapsing node {s.target}")
        if not s.view.has_edge(*e):
            continue
        if skip_inactive and min(core[e[0]], core[e[1]]) < k:
            continue
        _lazy_remove(s.view, core, e, k)
        s.result.removed.append(e)
        s.result.trace.append(s.support())
    return s.finish()


def red(graph: Graph, target: int, seed: int = 0, deadline: float | None = None) -> CollapseResult:
    """Delete uniformly random edges of the whole graph until the target collapses."""
    s = Session(graph, target, "red", deadline)
    order = graph.edges()
    random.Random(f"red:{seed}:{target}").shuffle(order)
    return _run_order(s, order)


def rnd(graph: Graph, target: int, seed: int = 0, deadline: float | None = None) -> CollapseResult:
    """Delete uniformly random edges incident to the target until it collapses."""
    s = Session(graph, target, "rnd", deadline)
    order = [(min(target, j), max(target, j)) for j in graph.adjacency[target]]
    random.Random(f"rnd:{seed}:{target}").shuffle(order)
    return _run_order(s, order)


# -- KNM ---------------------------------------------------------------------


def _knm_pick(view: GraphView, index: CoreIndex, k: int) -> Edge | None:
    best: Edge | None = None
    best_n = -1
    for e in sorted(candidate_edges(view, index, k)):
        n = len(collapse_set(view, index.core, *e))
        if n > best_n:
            best, best_n = e, n
    return best


def knm(graph: Graph, target: int, deadline: float | None = None) -> CollapseResult:
    s = Session(graph, target, "knm", deadline)
    while s.alive():
        s.remove(_knm_pick(s.view, s.index, s.k))
    return s.finish()


def knm_sequence(graph: Graph, k: int, deadline: float | None = None) -> tuple[list[Edge], dict[int, int]]:
    """Greedy removal order at level ``k`` run until no node of core ``k`` remains.

    Returns the removed edges and, per node of original core ``k``, the
    number of removals after which it left the k-core.
    """
    view = GraphView(graph)
    index = compute_cores(view)
    order: list[Edge] = []
    fell: dict[int, int] = {}
    while True:
        if deadline is not None and time.monotonic() > deadline:
            raise SolverTimeout(f"deadline exceeded in KNM sequence at level {k}")
        e = _knm_pick(view, index, k)
        if e is None:
            break
        dropped = _lazy_remove(view, index.core, e, k)
        order.append(e)
        for x in dropped:
            fell[x] = len(order)
    return order, fell


# -- SV ----------------------------------------------------------------------


def sample_count(n_candidates: int, eps2: float = 0.1) -> int:
    """Hoeffding-style permutation count for the Monte-Carlo Shapley estimate."""
    return max(1, math.ceil(math.log(2 * max(n_candidates, 1)) / (2 * eps2)))


def _marginals(view: GraphView, core: list[int], k: int, perm: list[Edge], acc: dict[Edge, float]) -> None:
    v2 = view.copy()
    c2 = list(core)
    remaining = sum(1 for c in c2 if c == k)
    for e in perm:
        if remaining == 0:
            break
        if min(c2[e[0]], c2[e[1]]) != k:
            continue
        gain = len(_lazy_remove(v2, c2, e, k))
        remaining -= gain
        acc[e] += gain


def shapley_weights(
    view: GraphView,
    index: CoreIndex,
    k: int,
    eps2: float = 0.1,
    rng: random.Random | None = None,
    samples: int | None = None,
) -> dict[Edge, float]:
    """Monte-Carlo Shapley weight of every candidate edge at level ``k``.

    The value of a coalition of removed edges is the number of nodes it
    ejects from the k-core; an edge's weight is its average marginal gain
    over random removal orders.
    """
    rng = rng or random.Random(0)
    cands = sorted(candidate_edges(view, index, k))
    acc = {e: 0.0 for e in cands}
    if not cands:
        return acc
    n = samples if samples is not None else sample_count(len(cands), eps2)
    for _ in range(n):
        perm = list(cands)
        rng.shuffle(perm)
        _marginals(view, index.core, k, perm, acc)
    return {e: w / n for e, w in acc.items()}


def exact_shapley_weights(view: GraphView, index: CoreIndex, k: int) -> dict[Edge, float]:
    """Shapley weights by enumerating every removal order; small candidate sets only."""
    cands = sorted(candidate_edges(view, index, k))
    if len(cands) > 8:
        raise ValueError("exact Shapley enumeration is limited to 8 candidates")
    acc = {e: 0.0 for e in cands}
    n = 0
    for perm in itertools.permutations(cands):
        _marginals(view, index.core, k, list(perm), acc)
        n += 1
    return {e: w / max(n, 1) for e, w in acc.items()}


def sv_order(weights: dict[Edge, float]) -> list[Edge]:
    return sorted(weights, key=lambda e: (-weights[e], e))


def sv(
    graph: Graph,
    target: int,
    eps2: float = 0.1,
    seed: int = 0,
    refresh: bool = False,
    deadline: float | None = None,
) -> CollapseResult:
    """Remove candidate edges in descending Shapley weight until the target collapses.

    Weights are estimated once on the input graph; with ``refresh`` they are
    re-estimated on the current graph before every removal. Edges that have
    left the candidate set by the time their turn comes are skipped.
    """
    s = Session(graph, target, "sv", deadline)
    k = s.k
    rng = random.Random(f"sv:{seed}:{k}")
    if not refresh:
        order = sv_order(shapley_weights(s.view, s.index, k, eps2, rng))
        return _run_order(s, order, skip_inactive=True)
    while s.alive():
        w = shapley_weights(s.view, s.index, k, eps2, rng)
        s.remove(sv_order(w)[0])
    return s.finish()


def sv_sequence(graph: Graph, k: int, eps2: float = 0.1, seed: int = 0) -> tuple[list[Edge], dict[int, int]]:
    """SV removal order at level ``k`` and the step at which each core-``k`` node fell."""
    view = GraphView(graph)
    index = compute_cores(view)
    order = sv_order(shapley_weights(view, index, k, eps2, random.Random(f"sv:{seed}:{k}")))
    removed: list[Edge] = []
    fell: dict[int, int] = {}
    core = index.core
    for e in order:
        if min(core[e[0]], core[e[1]]) < k:
            continue
        dropped = _lazy_remove(view, core, e, k)
        removed.append(e)
        for x in dropped:
            fell[x] = len(removed)
    return removed, fell
