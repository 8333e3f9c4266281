"""Simple undirected graphs, edge-list ingestion, and the deletion overlay."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for malformed input or invalid graph operations."""


def canonical(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"self-loop ({u}, {v}) is not an edge")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ParseStats:
    lines: int = 0
    comments: int = 0
    self_loops: int = 0
    duplicates: int = 0


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph over dense ids ``0..node_count-1``.

    ``labels[i]`` is the original token of node ``i`` as read from the input.
    """

    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    edge_count: int
    stats: ParseStats = field(default_factory=ParseStats)

    @property
    def node_count(self) -> int:
        return len(self.adjacency)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adjacency == other.adjacency and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.adjacency, self.labels))

    def edges(self) -> list[Edge]:
        """All edges in canonical sorted order."""
        return [(u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.node_count and 0 <= v < self.node_count) or u == v:
            return False
        nbrs = self.adjacency[u]
        lo, hi = 0, len(nbrs)
        while lo < hi:
            mid = (lo + hi) // 2
            if nbrs[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(nbrs) and nbrs[lo] == v

    def degree(self, i: int) -> int:
        return len(self.adjacency[i])

    def index_of(self, label: str) -> int:
        try:
            return self._label_index()[label]
        except KeyError:
            raise GraphError(f"unknown node label {label!r}") from None

    def _label_index(self) -> dict[str, int]:
        cache = self.__dict__.get("_label_cache")
        if cache is None:
            cache = {lab: i for i, lab in enumerate(self.labels)}
            object.__setattr__(self, "_label_cache", cache)
        return cache

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[object, object]],
        stats: ParseStats | None = None,
    ) -> "Graph":
        """Build a graph from label pairs.

        Self-loops and duplicate/reverse edges are dropped. Dense ids follow
        the sorted order of labels (numerically when every label is an integer)
        so that ingestion is insensitive to line order.
        """
        pairs: set[tuple[str, str]] = set()
        loops = dups = 0
        for a, b in edges:
            a, b = str(a), str(b)
            if a == b:
                loops += 1
                continue
            key = (a, b) if a < b else (b, a)
            if key in pairs:
                dups += 1
                continue
            pairs.add(key)
        names = {x for p in pairs for x in p}
        if not pairs:
            raise GraphError("graph has no edges")
        labels = tuple(sorted(names, key=_label_key))
        index = {lab: i for i, lab in enumerate(labels)}
        adj: list[list[int]] = [[] for _ in labels]
        for a, b in pairs:
            ia, ib = index[a], index[b]
            adj[ia].append(ib)
            adj[ib].append(ia)
        base = stats or ParseStats()
        stats = ParseStats(base.lines, base.comments, base.self_loops + loops, base.duplicates + dups)
        return cls(tuple(tuple(sorted(n)) for n in adj), labels, len(pairs), stats)

    @classmethod
    def from_int_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Graph on ids ``0..n-1`` with labels equal to the ids; isolated nodes allowed.

        Meant for constructing fixtures and random instances, not for ingestion.
        """
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                continue
            adj[u].add(v)
            adj[v].add(u)
        m = sum(len(s) for s in adj) // 2
        return cls(tuple(tuple(sorted(s)) for s in adj), tuple(str(i) for i in range(n)), m)


def _label_key(label: str) -> tuple[int, int, str]:
    try:
        return (0, int(label), "")
    except ValueError:
        return (1, 0, label)


def parse_edge_list(text: str | bytes, skip_header: bool = False) -> Graph:
    """Parse whitespace-separated edge-list text.

    Lines starting with ``#`` or ``%`` are comments. With ``skip_header`` the
    first non-comment line is ignored. Raises :class:`GraphError` with the
    line number on any data line that does not hold exactly two tokens.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    pairs: list[tuple[str, str]] = []
    lines = comments = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line[0] in "#%":
            comments += 1
            continue
        lines += 1
        if skip_header and lines == 1:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphError(f"line {lineno}: expected 2 tokens, got {len(tokens)}")
        pairs.append((tokens[0], tokens[1]))
    return Graph.from_edges(pairs, ParseStats(lines=lines, comments=comments))


def read_edge_list(path: str, skip_header: bool = False) -> Graph:
    with open(path, "rb") as fh:
        return parse_edge_list(fh.read(), skip_header=skip_header)


def to_edge_list(graph: Graph) -> str:
    """Canonical text form: one ``u v`` line per edge, labels, sorted by id."""
    lab = graph.labels
    return "".join(f"{lab[u]} {lab[v]}\n" for u, v in graph.edges())


class GraphView:
    """Deletion overlay on a shared :class:`Graph`.

    The base graph is never mutated; ``adj`` holds the live neighbor sets.
    """

    __slots__ = ("base", "adj", "deleted")

    def __init__(self, base: Graph, deleted: Iterable[Edge] = ()) -> None:
        self.base = base
        self.adj: list[set[int]] = [set(n) for n in base.adjacency]
        self.deleted: set[Edge] = set()
        for e in deleted:
            self.delete_edge(e)

    @property
    def node_count(self) -> int:
        return self.base.node_count

    def copy(self) -> "GraphView":
        other = GraphView.__new__(GraphView)
        other.base = self.base
        other.adj = [set(s) for s in self.adj]
        other.deleted = set(self.deleted)
        return other

    def live_degree(self, i: int) -> int:
        return len(self.adj[i])

    def neighbors(self, i: int) -> list[int]:
        if not 0 <= i < self.node_count:
            raise GraphError(f"node id {i} out of range")
        return sorted(self.adj[i])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.node_count and v in self.adj[u]

    def delete_edge(self, e: Edge) -> "GraphView":
        u, v = canonical(*e)
        if not self.base.has_edge(u, v):
            raise GraphError(f"edge {(u, v)} is not in the base graph")
        if (u, v) in self.deleted:
            raise GraphError(f"edge {(u, v)} already deleted")
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.deleted.add((u, v))
        return self

    def live_edges(self) -> list[Edge]:
        return [(u, v) for u, nbrs in enumerate(self.adj) for v in sorted(nbrs) if u < v]
