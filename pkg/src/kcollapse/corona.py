"""Supportive neighbors, core strength, corona nodes and corona pedigrees."""

from __future__ import annotations

from dataclasses import dataclass

from .cores import CoreIndex
from .graph import Edge, GraphError, GraphView, canonical


@dataclass(frozen=True)
class CoronaPedigree:
    """Maximal connected group of corona nodes sharing core value ``k``.

    ``incident_edges`` are the live edges joining a member to a node of the
    k-core (another member or a supportive neighbor). Removing any one of
    them ejects every member from the k-core.
    """

    k: int
    members: tuple[int, ...]
    incident_edges: tuple[Edge, ...]

    @property
    def representative(self) -> int:
        return self.members[0]


def supportive_neighbors(view: GraphView, index: CoreIndex, i: int, k: int) -> set[int]:
    core = index.core
    return {j for j in view.adj[i] if core[j] >= k}


def support_count(view: GraphView, core: list[int], i: int, k: int) -> int:
    c = 0
    for j in view.adj[i]:
        if core[j] >= k:
            c += 1
    return c


def core_strength(view: GraphView, index: CoreIndex, i: int) -> int:
    k = index.core[i]
    if k == 0:
        raise GraphError(f"core strength is undefined for node {i} with core value 0")
    return support_count(view, index.core, i, k) - k + 1


def corona_nodes(view: GraphView, index: CoreIndex, k: int) -> set[int]:
    core = index.core
    return {
        u
        for u in range(view.node_count)
        if core[u] == k and support_count(view, core, u, k) == k
    }


def is_corona(view: GraphView, index: CoreIndex, u: int) -> bool:
    k = index.core[u]
    return k >= 1 and support_count(view, index.core, u, k) == k


def _pedigree_from(view: GraphView, core: list[int], seed: int, coronas: set[int]) -> CoronaPedigree:
    k = core[seed]
    seen = {seed}
    stack = [seed]
    while stack:
        u = stack.pop()
        for w in view.adj[u]:
            if w in coronas and w not in seen:
                seen.add(w)
                stack.append(w)
    edges = {canonical(u, w) for u in seen for w in view.adj[u] if core[w] >= k}
    return CoronaPedigree(k, tuple(sorted(seen)), tuple(sorted(edges)))


def corona_pedigree(view: GraphView, index: CoreIndex, i: int) -> CoronaPedigree:
    if not is_corona(view, index, i):
        raise GraphError(f"node {i} is not a corona node")
    k = index.core[i]
    return _pedigree_from(view, index.core, i, corona_nodes(view, index, k))


def corona_pedigrees(view: GraphView, index: CoreIndex, k: int) -> list[CoronaPedigree]:
    """All pedigrees at core value ``k``, ordered by smallest member."""
    coronas = corona_nodes(view, index, k)
    out: list[CoronaPedigree] = []
    covered: set[int] = set()
    for u in sorted(coronas):
        if u in covered:
            continue
        p = _pedigree_from(view, index.core, u, coronas)
        covered.update(p.members)
        out.append(p)
    return out


def candidate_edges(view: GraphView, index: CoreIndex, k: int) -> set[Edge]:
    """Live edges whose endpoint core minimum equals ``k``."""
    core = index.core
    return {
        (u, w)
        for u in range(view.node_count)
        if core[u] >= k
        for w in view.adj[u]
        if u < w and min(core[u], core[w]) == k
    }


def single_edge_collapse_check(view: GraphView, index: CoreIndex, e: Edge) -> bool:
    """Whether removing live edge ``e`` by itself drops some node's core value."""
    i, j = e
    if not view.has_edge(i, j):
        raise GraphError(f"edge {e} is not live")
    cs_i = core_strength(view, index, i)
    cs_j = core_strength(view, index, j)
    if min(cs_i, cs_j) != 1:
        return False
    return (cs_i - cs_j) * (index.core[i] - index.core[j]) >= 0
