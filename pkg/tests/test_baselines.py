import itertools
import random

import pytest
from hypothesis import given, settings

from kcollapse.baselines import (
    exact_shapley_weights,
    knm,
    knm_sequence,
    red,
    rnd,
    sample_count,
    shapley_weights,
    sv,
    sv_sequence,
)
from kcollapse.cores import compute_cores
from kcollapse.graph import GraphView
from kcollapse.oracle import verify_collapse

from conftest import brute_nr, er_edges, graph_cores, make, small_graphs

# K4 on {0,2,3,4} with the tail 4-6-5-1; node 1 hangs off a single edge
TAIL = make(7, [(0, 2), (0, 3), (0, 4), (1, 5), (2, 3), (2, 4), (3, 4), (4, 6), (5, 6)])


def test_red_single_edge():
    g = make(2, [(0, 1)])
    assert red(g, 0, seed=1).nr == 1 and red(g, 1, seed=1).nr == 1


def test_red_triangle_every_edge_breaks_it(triangle):
    for e in triangle.edges():
        assert graph_cores(triangle, [e])[0] < 2
    for s in range(5):
        assert red(triangle, 0, seed=s).nr == 1


def test_red_deterministic(k4):
    assert red(k4, 0, seed=4).removed == red(k4, 0, seed=4).removed
    assert red(k4, 0, seed=4).nr >= 1


def test_rnd_k4(k4):
    assert all(rnd(k4, 0, seed=s).nr == 1 for s in range(5))


def test_rnd_star_center_needs_every_spoke(star3):
    for s in range(5):
        res = rnd(star3, 0, seed=s)
        assert res.nr == 3
        assert res.trace == [3, 2, 1, 0]


def test_knm_k4(k4):
    assert knm(k4, 0).nr == 1


def test_knm_bowtie():
    # triangles {0,1,2} and {2,3,4} share node 2
    g = make(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    level = graph_cores(g)
    assert level == [2] * 5
    counts = {}
    for e in g.edges():
        after = graph_cores(g, [e])
        counts[e] = sum(1 for x in range(5) if after[x] < 2)
    assert set(counts.values()) == {2}
    res = knm(g, 0)
    assert res.removed == [(0, 1)] and res.nr == 1


def value(g, k, removed, base):
    after = graph_cores(g, removed)
    return sum(1 for x in range(g.node_count) if base[x] == k and after[x] < k)


def enumerated_shapley(g, k):
    base = graph_cores(g)
    cands = [e for e in g.edges() if min(base[e[0]], base[e[1]]) == k]
    w = dict.fromkeys(cands, 0.0)
    perms = list(itertools.permutations(cands))
    for p in perms:
        prev = 0
        for j, e in enumerate(p):
            cur = value(g, k, p[: j + 1], base)
            w[e] += cur - prev
            prev = cur
    return {e: x / len(perms) for e, x in w.items()}


def test_exact_shapley_matches_enumeration():
    v = GraphView(TAIL)
    idx = compute_cores(v)
    ref = enumerated_shapley(TAIL, 1)
    assert ref == {(1, 5): 1.5, (4, 6): 0.5, (5, 6): 1.0}
    assert exact_shapley_weights(v, idx, 1) == pytest.approx(ref)


def test_sv_removes_bridge_first():
    res = sv(TAIL, 1, seed=0)
    assert res.removed == [(1, 5)] and res.nr == 1


@pytest.mark.parametrize("seed", range(4))
def test_shapley_estimate_converges(seed):
    g = make(8, er_edges(8, 0.45, seed + 20))
    v = GraphView(g)
    idx = compute_cores(v)
    for k in set(idx.core) - {0}:
        cands = [e for e in g.edges() if min(idx.core[e[0]], idx.core[e[1]]) == k]
        if len(cands) > 6:
            continue
        ref = enumerated_shapley(g, k)
        est = shapley_weights(v, idx, k, rng=random.Random(seed), samples=4000)
        for e in ref:
            assert est[e] == pytest.approx(ref[e], abs=0.1)


def test_sample_count():
    assert sample_count(10) == 15
    assert sample_count(1, eps2=0.5) == 1


def test_sv_deterministic_and_refresh(k4):
    assert sv(k4, 0).nr == 1
    g = make(11, er_edges(11, 0.5, 5))
    assert sv(g, 3, seed=2).removed == sv(g, 3, seed=2).removed
    res = sv(g, 3, seed=2, refresh=True)
    assert verify_collapse(g, 3, res.removed)


@pytest.mark.parametrize("seed", range(5))
def test_knm_not_below_exact(seed):
    g = make(10, er_edges(10, 0.5, seed))
    core = graph_cores(g)
    for i in range(10):
        if core[i]:
            assert knm(g, i).nr >= brute_nr(g, i)


@settings(max_examples=50, deadline=None)
@given(small_graphs(max_n=11))
def test_shared_sequences_match_per_target(g):
    core = compute_cores(GraphView(g)).core
    for k in set(core) - {0}:
        _, fell_knm = knm_sequence(g, k)
        _, fell_sv = sv_sequence(g, k, seed=1)
        for i in range(g.node_count):
            if core[i] == k:
                assert knm(g, i).nr == fell_knm[i]
                assert sv(g, i, seed=1).nr == fell_sv[i]


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=11))
def test_baselines_always_valid(g):
    core = compute_cores(GraphView(g)).core
    for i in range(g.node_count):
        if not core[i]:
            continue
        for res in (red(g, i, seed=0), rnd(g, i, seed=0), knm(g, i), sv(g, i)):
            assert verify_collapse(g, i, res.removed), res.method
            assert len(set(res.removed)) == res.nr
        assert rnd(g, i, seed=3).nr <= len(g.adjacency[i])
        assert red(g, i, seed=3).nr <= g.edge_count
