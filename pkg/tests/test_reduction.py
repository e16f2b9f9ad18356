import random
from fractions import Fraction

import pytest

from mincostflow import (INF, Network, PreconditionError, flow_cost,
                         has_neg_infty_cycle, is_feasible, lift_flow,
                         reduce_to_uncapacitated, restore_flow, solve_orlins,
                         verify_optimal)
from mincostflow.errors import InputError
from mincostflow.oracle import brute_force_min_cost_flow, generate_corpus
from mincostflow.validation import cost_cycle

from .helpers import random_feasible_instance


def test_all_infinite_network_passes_through():
    net = Network(3, [(0, 1, INF, 2), (1, 2, INF, -1)])
    inst = reduce_to_uncapacitated(net, [1, 0, -1])
    assert inst.network.num_vertices == 3
    assert inst.network.num_edges == 2
    assert list(inst.balances) == [1, 0, -1]
    assert [(e.src, e.dst) for e in inst.network.edges] \
        == [(e.src, e.dst) for e in net.edges]


def test_finite_edge_becomes_gadget(f2_network):
    inst = reduce_to_uncapacitated(f2_network, [1, -1])
    # e0=(0,1) cap 8: vertex 2 with supply 8, out-edge to 0 at cost 0,
    # in-edge to 1 at cost 2; source balance drops by 8
    assert inst.edge_vertex[0] == 2
    assert inst.balances[inst.edge_vertex[0]] == 8
    out = inst.network.edges[inst.out_edge[0]]
    assert (out.src, out.dst) == (2, 0)
    assert inst.network.cost[out.id] == 0
    into = inst.network.edges[inst.in_edge[0]]
    assert (into.src, into.dst) == (2, 1)
    assert inst.network.cost[into.id] == 2
    assert inst.balances[0] == 1 - 8
    assert inst.network.is_uncapacitated
    assert sum(inst.balances) == 0


def test_lift_flow_f2(f2_network, f2_flow):
    inst = reduce_to_uncapacitated(f2_network, [1, -1])
    lifted = lift_flow(inst, f2_flow)
    assert lifted[inst.out_edge[0]] == 3  # u(e0) - f(e0)
    assert lifted[inst.in_edge[0]] == 5
    assert is_feasible(inst.network, lifted, inst.balances)
    assert flow_cost(inst.network, lifted) == flow_cost(f2_network, f2_flow)
    assert restore_flow(inst, lifted) == f2_flow


def test_lift_rejects_infeasible(f2_network):
    inst = reduce_to_uncapacitated(f2_network, [1, -1])
    with pytest.raises(PreconditionError):
        lift_flow(inst, [9, 4])
    with pytest.raises(PreconditionError):
        restore_flow(inst, [0] * inst.network.num_edges)


def test_reduce_requires_zero_sum(f2_network):
    with pytest.raises(InputError):
        reduce_to_uncapacitated(f2_network, [1, 0])


def test_round_trip_and_cost_preservation():
    rng = random.Random(3)
    for _ in range(200):
        net, f, b = random_feasible_instance(rng)
        inst = reduce_to_uncapacitated(net, b)
        lifted = lift_flow(inst, f)
        assert is_feasible(inst.network, lifted, inst.balances)
        assert flow_cost(inst.network, lifted) == flow_cost(net, f)
        assert restore_flow(inst, lifted) == [Fraction(x) for x in f]


def test_size_bound():
    rng = random.Random(4)
    for _ in range(200):
        net, _, b = random_feasible_instance(rng)
        inst = reduce_to_uncapacitated(net, b)
        n2, m2 = inst.network.num_vertices, inst.network.num_edges
        finite = sum(1 for c in net.capacity if c != INF)
        assert n2 == net.num_vertices + finite
        assert m2 == 2 * finite + (net.num_edges - finite)
        assert n2 + m2 <= net.num_vertices + 3 * net.num_edges


def test_neg_infty_cycle_examples():
    net = Network(2, [(0, 1, INF, 1), (1, 0, INF, -3)])
    assert has_neg_infty_cycle(net)
    capped = Network(2, [(0, 1, 5, 1), (1, 0, 5, -3)])
    assert not has_neg_infty_cycle(capped)
    nonneg = Network(2, [(0, 1, INF, 1), (1, 0, INF, 3)])
    assert not has_neg_infty_cycle(nonneg)


def test_neg_cycle_correspondence():
    rng = random.Random(5)
    for _ in range(200):
        net, _, b = random_feasible_instance(rng)
        inst = reduce_to_uncapacitated(net, b)
        reduced_has = cost_cycle(inst.network) is not None
        assert has_neg_infty_cycle(net) == reduced_has


def test_reduced_optimum_restores_to_oracle_optimum():
    instances, _ = generate_corpus(150, 99)
    for net, b in instances:
        expected = brute_force_min_cost_flow(net, b)
        inst = reduce_to_uncapacitated(net, b)
        inner = solve_orlins(inst.network, list(inst.balances))
        assert inner.success == expected.optimal
        if inner.success:
            restored = restore_flow(inst, inner.flow)
            assert flow_cost(net, restored) == expected.cost
            assert verify_optimal(net, restored, b)
