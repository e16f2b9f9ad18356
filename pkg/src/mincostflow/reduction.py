"""Reduction of finite/mixed-capacity instances to uncapacitated ones.

Each finite-capacity edge e = (x, y) becomes a fresh vertex carrying supply
u(e) plus two infinite-capacity edges: one back to x at cost 0 and one on to
y at the original cost.  Sending u(e) - f(e) back and f(e) on reproduces any
original flow exactly, balances at x shrink by u(e), and costs are
preserved, so optima transfer in both directions.  Infinite-capacity edges
survive unchanged, which is why the reduced network has a negative cycle
exactly when the original has a negative cycle of infinite capacity.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .network import Network, as_balances, is_feasible
from .rational import INF
from .validation import cost_cycle, require_zero_sum

OUT_EDGE = "out"
IN_EDGE = "in"
V_TO_V_EDGE = "vtov"


@dataclass(frozen=True)
class ReducedInstance:
    """An uncapacitated twin of a capacitated instance plus the id book-keeping.

    New vertex ids: originals keep 0..n-1, then one vertex per finite-capacity
    edge in edge-id order.  New edge ids: all out-edges (to the original
    source, cost 0) in edge-id order, then all in-edges (to the original
    target, original cost), then all surviving infinite-capacity edges.
    """

    original: Network
    original_balances: tuple
    network: Network
    balances: tuple
    edge_vertex: dict
    out_edge: dict
    in_edge: dict
    vtov_edge: dict
    back_map: tuple


def reduce_to_uncapacitated(net: Network, b) -> ReducedInstance:
    b = as_balances(net, b)
    require_zero_sum(b)

    finite = [e.id for e in net.edges if net.capacity[e.id] != INF]
    infinite = [e.id for e in net.edges if net.capacity[e.id] == INF]
    n = net.num_vertices

    edge_vertex = {e: n + i for i, e in enumerate(finite)}
    new_edges = []
    back_map = []
    out_edge = {}
    in_edge = {}
    vtov_edge = {}
    for e in finite:
        out_edge[e] = len(new_edges)
        back_map.append((OUT_EDGE, e))
        new_edges.append((edge_vertex[e], net.edges[e].src, INF, Fraction(0)))
    for e in finite:
        in_edge[e] = len(new_edges)
        back_map.append((IN_EDGE, e))
        new_edges.append((edge_vertex[e], net.edges[e].dst, INF, net.cost[e]))
    for e in infinite:
        vtov_edge[e] = len(new_edges)
        back_map.append((V_TO_V_EDGE, e))
        new_edges.append((net.edges[e].src, net.edges[e].dst, INF, net.cost[e]))

    new_balances = list(b) + [Fraction(0)] * len(finite)
    for e in finite:
        new_balances[edge_vertex[e]] = net.capacity[e]
        new_balances[net.edges[e].src] -= net.capacity[e]

    return ReducedInstance(
        original=net,
        original_balances=tuple(b),
        network=Network(n + len(finite), new_edges),
        balances=tuple(new_balances),
        edge_vertex=edge_vertex,
        out_edge=out_edge,
        in_edge=in_edge,
        vtov_edge=vtov_edge,
        back_map=tuple(back_map),
    )


def lift_flow(inst: ReducedInstance, f) -> list:
    """Map a feasible original flow to the reduced network, preserving cost."""
    if not is_feasible(inst.original, f, inst.original_balances):
        raise PreconditionError("flow is not feasible for the original instance")
    net = inst.original
    lifted = [Fraction(0)] * inst.network.num_edges
    for e, new_id in inst.out_edge.items():
        lifted[new_id] = net.capacity[e] - f[e]
    for e, new_id in inst.in_edge.items():
        lifted[new_id] = Fraction(f[e])
    for e, new_id in inst.vtov_edge.items():
        lifted[new_id] = Fraction(f[e])
    return lifted


def restore_flow(inst: ReducedInstance, lifted) -> list:
    """Map a feasible reduced flow back to the original network."""
    if not is_feasible(inst.network, lifted, inst.balances):
        raise PreconditionError("flow is not feasible for the reduced instance")
    restored = [Fraction(0)] * inst.original.num_edges
    for e in range(inst.original.num_edges):
        if e in inst.in_edge:
            restored[e] = Fraction(lifted[inst.in_edge[e]])
        else:
            restored[e] = Fraction(lifted[inst.vtov_edge[e]])
    return restored


def has_neg_infty_cycle(net: Network) -> bool:
    """True iff some directed cycle of infinite-capacity edges has negative cost."""
    return cost_cycle(net, only_infinite_capacity=True) is not None
