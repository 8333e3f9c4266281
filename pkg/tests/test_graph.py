import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kcollapse.graph import Graph, GraphError, GraphView, parse_edge_list, to_edge_list

from conftest import complete, make, small_graphs


def test_parse_triangle():
    g = parse_edge_list("0 1\n1 2\n2 0\n")
    assert g.node_count == 3
    assert g.edge_count == 3
    assert g.adjacency == ((1, 2), (0, 2), (0, 1))


def test_parse_drops_loops_and_duplicates():
    g = parse_edge_list(b"0 1\n1 0\n0 0\n")
    assert g.edges() == [(0, 1)]
    assert g.stats.self_loops == 1
    assert g.stats.duplicates == 1


def test_parse_comments_header_and_string_labels():
    text = "# comment\n% other\nsrc dst\nb a\na c\n"
    g = parse_edge_list(text, skip_header=True)
    assert g.labels == ("a", "b", "c")
    assert g.edges() == [(0, 1), (0, 2)]
    assert g.stats.comments == 2


def test_integer_labels_sort_numerically():
    g = parse_edge_list("10 2\n2 9\n")
    assert g.labels == ("2", "9", "10")


@pytest.mark.parametrize("text, where", [("0 1\n1 2 3\n", "line 2"), ("0\n", "line 1")])
def test_parse_malformed_line(text, where):
    with pytest.raises(GraphError, match=where):
        parse_edge_list(text)


def test_parse_empty_graph_rejected():
    with pytest.raises(GraphError):
        parse_edge_list("# nothing\n3 3\n")


def test_neighbors(triangle, k4):
    assert GraphView(triangle).neighbors(0) == [1, 2]
    assert GraphView(triangle, [(0, 1)]).neighbors(0) == [2]
    assert GraphView(k4, [(0, 1), (2, 0)]).neighbors(0) == [3]
    with pytest.raises(GraphError):
        GraphView(triangle).neighbors(3)


def test_delete_edge(k4, triangle):
    v = GraphView(k4).delete_edge((1, 0))
    assert v.live_degree(0) == 2 and v.live_degree(1) == 2
    v = GraphView(triangle)
    for e in triangle.edges():
        v.delete_edge(e)
    assert [v.live_degree(i) for i in range(3)] == [0, 0, 0]
    path = make(3, [(0, 1), (1, 2)])
    assert GraphView(path, [(0, 1)]).neighbors(0) == []


def test_delete_edge_errors(k4, triangle):
    v = GraphView(k4, [(0, 1)])
    with pytest.raises(GraphError):
        v.delete_edge((0, 1))
    with pytest.raises(GraphError):
        GraphView(triangle).delete_edge((0, 5))


def test_base_graph_untouched(k4):
    before = k4.adjacency
    GraphView(k4, [(0, 1), (2, 3)])
    assert k4.adjacency == before


@settings(max_examples=60, deadline=None)
@given(small_graphs())
def test_canonical_round_trip(g):
    h = parse_edge_list(to_edge_list(g))
    # isolated nodes are not representable in an edge list
    live = [i for i in range(g.node_count) if g.adjacency[i]]
    assert h.labels == tuple(g.labels[i] for i in live)
    assert parse_edge_list(to_edge_list(h)) == h


@settings(max_examples=60, deadline=None)
@given(small_graphs(), st.randoms(use_true_random=False))
def test_live_degree_tracks_deletions(g, rnd):
    v = GraphView(g)
    edges = g.edges()
    rnd.shuffle(edges)
    for e in edges[: rnd.randint(0, len(edges))]:
        v.delete_edge(e)
        for i in range(g.node_count):
            expected = sum(1 for j in g.adjacency[i] if (min(i, j), max(i, j)) not in v.deleted)
            assert v.live_degree(i) == expected


@settings(max_examples=40, deadline=None)
@given(small_graphs(), st.randoms(use_true_random=False))
def test_parse_order_insensitive(g, rnd):
    lines = to_edge_list(g).splitlines()
    flipped = [" ".join(reversed(l.split())) if rnd.random() < 0.5 else l for l in lines]
    rnd.shuffle(flipped)
    assert parse_edge_list("\n".join(flipped)) == parse_edge_list("\n".join(lines))


def test_from_int_edges_keeps_isolated():
    g = Graph.from_int_edges(4, complete(3))
    assert g.node_count == 4 and g.adjacency[3] == ()
