"""Targeted node collapse: the TNC and ATNC heuristics."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .corona import CoronaPedigree, _pedigree_from, core_strength, corona_nodes, support_count
from .cores import CoreIndex, cascade_after_removal, compute_cores
from .graph import Edge, Graph, GraphError, GraphView, canonical
from .impact import calculate_impact


class SolverTimeout(RuntimeError):
    pass


@dataclass
class CollapseResult:
    target: int
    method: str
    k: int
    removed: list[Edge] = field(default_factory=list)
    trace: list[int] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def nr(self) -> int:
        return len(self.removed)

    def as_dict(self, graph: Graph | None = None) -> dict:
        lab = (lambda x: graph.labels[x]) if graph is not None else (lambda x: x)
        return {
            "target": lab(self.target),
            "method": self.method,
            "k": self.k,
            "nr": self.nr,
            "removed": [[lab(u), lab(v)] for u, v in self.removed],
            "trace": list(self.trace),
            "wall_time": self.wall_time,
        }


class Session:
    """Single-owner working state of one collapse run on a fresh view."""

    def __init__(self, graph: Graph, target: int, method: str, deadline: float | None = None) -> None:
        if not 0 <= target < graph.node_count:
            raise GraphError(f"target {target} out of range")
        self.view = GraphView(graph)
        self.index = compute_cores(self.view)
        self.target = target
        self.k = self.index.core[target]
        if self.k < 1:
            raise GraphError(f"target {target} has core value 0; nothing to collapse")
        self.deadline = deadline
        self.t0 = time.perf_counter()
        self.result = CollapseResult(target, method, self.k, trace=[self.support()])

    def support(self) -> int:
        return support_count(self.view, self.index.core, self.target, self.k)

    def alive(self) -> bool:
        return self.index.core[self.target] >= self.k

    def remove(self, e: Edge) -> set[int]:
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise SolverTimeout(f"deadline exceeded collapsing node {self.target}")
        rep = cascade_after_removal(self.view, self.index, canonical(*e))
        self.result.removed.append(rep.edge)
        self.result.trace.append(self.support())
        return rep.collapsed

    def finish(self) -> CollapseResult:
        self.result.wall_time = time.perf_counter() - self.t0
        return self.result


def _score(view: GraphView, index: CoreIndex, target: int, seeds: list[int], coronas: set[int]):
    """Score one representative per pedigree; return (best node, its F, its pedigree)."""
    best: tuple[int, int, int] | None = None
    best_ped: CoronaPedigree | None = None
    covered: set[int] = set()
    for u in seeds:
        if u in covered:
            continue
        ped = _pedigree_from(view, index.core, u, coronas)
        covered.update(ped.members)
        rep = calculate_impact(view, index, target, u)
        key = (-rep.followed_in_nbhd, -rep.influenced_in_nbhd, u)
        if best is None or key < best:
            best, best_ped = key, ped
    if best is None:
        return None, 0, None
    return best[2], -best[0], best_ped


def _weakest_supporter(s: Session) -> int:
    core = s.index.core
    sn = [j for j in s.view.adj[s.target] if core[j] >= s.k]
    return min(sn, key=lambda j: (core_strength(s.view, s.index, j), j))


def tnc(graph: Graph, target: int, deadline: float | None = None) -> CollapseResult:
    s = Session(graph, target, "tnc", deadline)
    k = s.k
    while s.alive():
        coronas = corona_nodes(s.view, s.index, k)
        v, f, ped = _score(s.view, s.index, target, sorted(coronas), coronas)
        if v is None or f == 0:
            s.remove((target, _weakest_supporter(s)))
        else:
            s.remove(ped.incident_edges[0])
    return s.finish()


def atnc(
    graph: Graph,
    target: int,
    seed: int = 0,
    fallback: str = "min_cs",
    deadline: float | None = None,
) -> CollapseResult:
    """Adjacent variant: only corona neighbors of the target are candidates.

    ``fallback`` picks which supportive neighbors are cut once no corona
    neighbor is left: ``"min_cs"`` (weakest first, deterministic) or
    ``"random"`` (uniform sample drawn from ``seed``).
    """
    if fallback not in ("min_cs", "random"):
        raise ValueError(f"unknown fallback {fallback!r}")
    s = Session(graph, target, "atnc", deadline)
    k = s.k
    view, index = s.view, s.index

    def corona_neighbors() -> list[int]:
        core = index.core
        return sorted(
            u for u in view.adj[target]
            if core[u] == k and support_count(view, core, u, k) == k
        )

    nbrs = corona_neighbors()
    while nbrs and s.alive():
        coronas = corona_nodes(view, index, k)
        v, _, _ = _score(view, index, target, nbrs, coronas)
        s.remove((target, v))
        nbrs = corona_neighbors()
    if s.alive():
        sn = sorted(j for j in view.adj[target] if index.core[j] >= k)
        budget = core_strength(view, index, target)
        if fallback == "random":
            rng = random.Random(f"atnc:{seed}:{target}")
            picks = rng.sample(sn, budget)
        else:
            picks = sorted(sn, key=lambda j: (core_strength(view, index, j), j))[:budget]
        for j in picks:
            if not s.alive():
                break
            s.remove((target, j))
    return s.finish()
