import random
from fractions import Fraction

import pytest

from mincostflow import (INF, Network, PathNotFoundError, backward, bf_init,
                         bf_run, detect_negative_cycle, dfs_forest_path,
                         extract_path, find_negative_cycle, forward, opt_walk_dp,
                         project_residual, relax, residual_cost,
                         vertex_path_to_residual)

from .helpers import (cycle_weight, random_weighted_digraph, reachable,
                      simple_cycles)


def line_graph_table():
    weights = {(0, 1): Fraction(2), (1, 2): Fraction(5)}
    return bf_init([0, 1, 2], weights.keys(), weights, 0)


def test_bf_init():
    table = line_graph_table()
    assert table.dist[0] == 0 and table.pred[0] is None
    assert table.dist[1] == INF and table.dist[2] == INF
    assert table.pred[1] is None


def test_bf_init_unknown_source():
    with pytest.raises(ValueError):
        bf_init([0, 1], [], {}, 5)


def test_relax():
    table = line_graph_table()
    relaxed = relax(table, 0, 1)
    assert relaxed.dist[1] == 2 and relaxed.pred[1] == 0
    assert table.dist[1] == INF, "relax must not mutate its input"
    again = relax(relaxed, 0, 1)
    assert again.dist[1] == 2
    untouched = relax(table, 1, 2)  # infinite source distance
    assert untouched.dist[2] == INF


def test_bf_run_line_graph():
    table = line_graph_table()
    assert bf_run(table, 0).dist == table.dist
    done = bf_run(table, 2)
    assert [done.dist[v] for v in (0, 1, 2)] == [0, 2, 7]
    assert extract_path(done, 2) == [0, 1, 2]
    assert extract_path(done, 0) == [0]


def test_bf_dist_equals_bounded_walk_optimum():
    rng = random.Random(5)
    done = 0
    while done < 200:
        n, weights = random_weighted_digraph(rng)
        if find_negative_cycle(range(n), weights) is not None:
            continue
        src = rng.randrange(n)
        table = bf_init(range(n), weights.keys(), weights, src)
        for rounds in range(n):
            ran = bf_run(table, rounds)
            expected = opt_walk_dp(range(n), weights, src, rounds)
            assert all(ran.dist[v] == expected[v] for v in range(n))
        done += 1


def test_extract_path_weight_matches_distance():
    rng = random.Random(6)
    done = 0
    while done < 150:
        n, weights = random_weighted_digraph(rng)
        if find_negative_cycle(range(n), weights) is not None:
            continue
        src = rng.randrange(n)
        table = bf_run(bf_init(range(n), weights.keys(), weights, src), n - 1)
        for v in range(n):
            if table.dist[v] == INF:
                with pytest.raises(PathNotFoundError):
                    extract_path(table, v)
                continue
            path = extract_path(table, v)
            total = sum(weights[(a, b)] for a, b in zip(path, path[1:]))
            assert total == table.dist[v]
        done += 1


def test_table_invariants_after_each_pass():
    rng = random.Random(7)
    for _ in range(150):
        n, weights = random_weighted_digraph(rng)
        conservative = find_negative_cycle(range(n), weights) is None
        src = rng.randrange(n)
        table = bf_init(range(n), weights.keys(), weights, src)
        for _ in range(n):
            table = bf_run(table, 1)
            for v in range(n):
                # reachability vs. predecessor definedness
                assert (table.dist[v] != INF) == (table.pred[v] is not None or v == src)
                u = table.pred[v]
                if u is not None:
                    assert table.pred[u] is not None or u == src
                    assert table.dist[v] >= table.dist[u] + weights[(u, v)]
            if table.dist[src] == 0 and conservative:
                assert table.pred[src] is None
        if conservative:
            assert _pred_graph_acyclic(table)


def _pred_graph_acyclic(table):
    for start in table.vertices:
        seen = set()
        cur = start
        while table.pred[cur] is not None:
            if cur in seen:
                return False
            seen.add(cur)
            cur = table.pred[cur]
    return True


def test_detect_negative_cycle_none_when_conservative():
    table = bf_run(line_graph_table(), 2)
    assert detect_negative_cycle(table) is None


def test_detect_negative_cycle_requires_convergence():
    with pytest.raises(ValueError):
        detect_negative_cycle(line_graph_table())


def test_detect_negative_cycle_f2_projection(f2_network, f2_flow):
    projection = project_residual(f2_network, f2_flow)
    assert projection.weights[(0, 1)] == -3
    assert projection.weights[(1, 0)] == -2
    cycle = find_negative_cycle(f2_network.vertices, projection.weights)
    assert cycle is not None
    assert cycle_weight(projection.weights, cycle) == -5


def test_detect_agrees_with_cycle_enumeration():
    rng = random.Random(9)
    for _ in range(250):
        n, weights = random_weighted_digraph(rng, low=-4)
        src = rng.randrange(n)
        table = bf_run(bf_init(range(n), weights.keys(), weights, src), n - 1)
        got = detect_negative_cycle(table)
        seen = reachable(weights, src)
        exists = any(cycle_weight(weights, c) < 0 and c[0] in seen
                     for c in simple_cycles(weights))
        assert (got is not None) == exists
        if got is not None:
            assert cycle_weight(weights, got) < 0
            assert got[0] == got[-1]


def test_find_negative_cycle_is_global():
    weights = {(1, 2): Fraction(-1), (2, 1): Fraction(-1)}
    assert find_negative_cycle([0, 1, 2], weights) is not None
    weights = {(1, 2): Fraction(1), (2, 1): Fraction(-1)}
    assert find_negative_cycle([0, 1, 2], weights) is None


def test_projection_f2(f2_network, f2_flow):
    projection = project_residual(f2_network, f2_flow)
    assert projection.realizer[(0, 1)] == backward(1)
    assert projection.realizer[(1, 0)] == backward(0)
    assert vertex_path_to_residual(projection, [0, 1]) == [backward(1)]
    assert vertex_path_to_residual(projection, [0]) == []


def test_projection_saturated_and_empty():
    net = Network(2, [(0, 1, 5, 2)])
    projection = project_residual(net, [Fraction(5)])
    assert projection.weight(0, 1) == INF
    assert projection.weight(1, 0) == -2
    with pytest.raises(PathNotFoundError):
        vertex_path_to_residual(projection, [0, 1])


def test_projection_dominance(f2_network):
    rng = random.Random(13)
    for _ in range(100):
        f = [Fraction(rng.randint(0, 8)), Fraction(rng.randint(0, 6))]
        projection = project_residual(f2_network, f)
        for e in range(2):
            for r in (forward(e), backward(e)):
                cap = f2_network.capacity[e] - f[e] if r.is_forward else f[e]
                if cap > 0:
                    u, v = (f2_network.edges[e].src, f2_network.edges[e].dst)
                    if not r.is_forward:
                        u, v = v, u
                    assert projection.weight(u, v) <= residual_cost(f2_network, r)


def test_projection_reverse(f2_network, f2_flow):
    fwd = project_residual(f2_network, f2_flow)
    rev = project_residual(f2_network, f2_flow, reverse=True)
    assert rev.weights == {(v, u): w for (u, v), w in fwd.weights.items()}


def test_projection_min_capacity(f2_network, f2_flow):
    wide = project_residual(f2_network, f2_flow, min_capacity=4)
    # only B0 (cap 5) and B1 (cap 4) survive
    assert set(wide.realizer.values()) == {backward(0), backward(1)}


def test_projection_not_blocked(f2_network, f2_flow):
    only_first = project_residual(f2_network, f2_flow, not_blocked=lambda e: e == 0)
    assert set(only_first.realizer.values()) == {forward(0), backward(0)}


def test_dfs_forest_path():
    adjacency = {0: {1}, 1: {0, 2}, 2: {1}}
    assert dfs_forest_path(adjacency, 0, 2) == [0, 1, 2]
    assert dfs_forest_path(adjacency, 2, 0) == [2, 1, 0]
    assert dfs_forest_path(adjacency, 1, 1) == [1]
    assert dfs_forest_path({0: set(), 3: set()}, 0, 3) is None
    assert dfs_forest_path({}, 4, 4) == [4]
