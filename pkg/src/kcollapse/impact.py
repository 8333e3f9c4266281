"""Estimate how far the collapse of one corona node reaches a target's neighborhood."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from .corona import support_count
from .cores import CoreIndex
from .graph import GraphError, GraphView


@dataclass(frozen=True)
class ImpactReport:
    followed_in_nbhd: int
    influenced_in_nbhd: int
    followed: frozenset[int]
    influenced: frozenset[int]

    def as_dict(self) -> dict:
        return {
            "followed_in_nbhd": self.followed_in_nbhd,
            "influenced_in_nbhd": self.influenced_in_nbhd,
            "followed": sorted(self.followed),
            "influenced": sorted(self.influenced),
        }


def calculate_impact(view: GraphView, index: CoreIndex, target: int, seed: int) -> ImpactReport:
    """Stack propagation from corona node ``seed`` over same-core neighbors.

    A popped node gains one lost supporter; it is *influenced* once popped and
    *followed* once its lost supporters reach its core strength, at which
    point its same-core neighbors that can still absorb a loss are pushed in
    ascending id order. Followed nodes are skipped when popped again. The
    view and index are only read.
    """
    core = index.core
    adj = view.adj
    cs_cache: dict[int, int] = {}

    def cs(u: int) -> int:
        c = cs_cache.get(u)
        if c is None:
            c = support_count(view, core, u, core[u]) - core[u] + 1
            cs_cache[u] = c
        return c

    if core[seed] < 1 or cs(seed) != 1:
        raise GraphError(f"seed {seed} is not a corona node")

    tally: defaultdict[int, int] = defaultdict(int)
    followed: set[int] = set()
    influenced: set[int] = set()
    stack = [seed]
    while stack:
        u = stack.pop()
        if u in followed:
            continue
        tally[u] += 1
        influenced.add(u)
        if cs(u) <= tally[u]:
            followed.add(u)
            k = core[u]
            stack.extend(sorted(v for v in adj[u] if core[v] == k and cs(v) > tally[v]))
    nbhd = adj[target]
    return ImpactReport(
        followed_in_nbhd=len(nbhd & followed),
        influenced_in_nbhd=len(nbhd & influenced),
        followed=frozenset(followed),
        influenced=frozenset(influenced),
    )
