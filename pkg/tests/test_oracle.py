import itertools

import pytest
from hypothesis import given, settings

from kcollapse.cores import compute_cores
from kcollapse.corona import core_strength
from kcollapse.graph import GraphError, GraphView
from kcollapse.oracle import OracleInfeasible, exact_nr, oracle_candidates, verify_collapse
from kcollapse.solvers import atnc, tnc

from conftest import brute_nr, er_edges, graph_cores, make, small_graphs


def test_k4_first_witness(k4):
    res = exact_nr(k4, 0)
    assert res.nr == 1 and res.removed == [(0, 1)]


def test_path_center_must_be_isolated():
    g = make(3, [(0, 1), (1, 2)])
    assert exact_nr(g, 1).nr == 2
    assert exact_nr(g, 1, "full").removed == [(0, 1), (1, 2)]


def test_wheel_hub_is_a_bubble(wheel5):
    res = exact_nr(wheel5, 0)
    assert res.nr == 1
    v = GraphView(wheel5)
    assert core_strength(v, compute_cores(v), 0) == 3


def test_verify_collapse(k4):
    assert verify_collapse(k4, 0, [(0, 1)])
    assert not verify_collapse(k4, 0, [])
    with pytest.raises(GraphError):
        verify_collapse(k4, 0, [(0, 9)])


def test_solver_outputs_verify():
    g = make(10, er_edges(10, 0.5, 7))
    for i in range(10):
        if graph_cores(g)[i]:
            assert verify_collapse(g, i, tnc(g, i).removed)
            assert verify_collapse(g, i, atnc(g, i).removed)


def test_budget_exceeded_is_explicit():
    g = make(12, er_edges(12, 0.9, 1))
    with pytest.raises(OracleInfeasible):
        exact_nr(g, 0, "full", size_cap=6, budget=100)


def test_size_cap_below_answer_is_explicit():
    g = make(3, [(0, 1), (1, 2)])
    with pytest.raises(OracleInfeasible):
        exact_nr(g, 1, size_cap=1)


def test_unknown_mode(k4):
    with pytest.raises(ValueError):
        oracle_candidates(k4, 0, "partial")


@pytest.mark.parametrize("seed", range(10))
def test_agrees_with_independent_search(seed):
    g = make(9, er_edges(9, 0.45, seed))
    core = graph_cores(g)
    for i in range(9):
        if core[i]:
            assert exact_nr(g, i, "full", size_cap=20).nr == brute_nr(g, i)


def no_smaller_set(g, target, m):
    k = graph_cores(g)[target]
    return all(
        graph_cores(g, sub)[target] >= k
        for sub in itertools.combinations(g.edges(), m - 1)
    )


@settings(max_examples=40, deadline=None)
@given(small_graphs(max_n=9))
def test_minimality_and_modes(g):
    v = GraphView(g)
    idx = compute_cores(v)
    for i in range(g.node_count):
        if idx.core[i] < 1:
            continue
        red_ = exact_nr(g, i, "reduced", size_cap=99)
        full = exact_nr(g, i, "full", size_cap=99)
        assert red_.nr == full.nr
        assert 1 <= full.nr <= core_strength(v, idx, i)
        assert verify_collapse(g, i, red_.removed) and verify_collapse(g, i, full.removed)
        if full.nr <= 3:
            assert no_smaller_set(g, i, full.nr)
