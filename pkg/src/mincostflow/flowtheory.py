"""Cuts, residual cuts, circulation decomposition and the optimality certifier.

A flow is optimal for its balances exactly when the residual graph carries no
augmenting cycle (negative total cost, positive capacity everywhere), so
optimality can be *certified* at runtime by one negative-cycle search over
the residual projection.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .network import Network, is_feasible, excess, zero_flow
from .paths import find_negative_cycle, project_residual, vertex_path_to_residual
from .rational import INF


@dataclass(frozen=True)
class Cut:
    """An ordered vertex bipartition (inside, rest) of a network."""

    net: Network
    inside: frozenset

    def out_edges(self) -> list:
        return [e.id for e in self.net.edges
                if e.src in self.inside and e.dst not in self.inside]

    def in_edges(self) -> list:
        return [e.id for e in self.net.edges
                if e.dst in self.inside and e.src not in self.inside]

    def capacity(self):
        return sum((self.net.capacity[e] for e in self.out_edges()), Fraction(0))

    def reverse_capacity(self):
        return sum((self.net.capacity[e] for e in self.in_edges()), Fraction(0))


def cut_flow_balance(net: Network, f, b, inside) -> tuple:
    """(sum of balances inside, net flow leaving the cut); equal for feasible flows."""
    if not is_feasible(net, f, b):
        raise PreconditionError("flow is not feasible for the given balances")
    cut = Cut(net, frozenset(inside))
    lhs = sum((b[v] for v in cut.inside), Fraction(0))
    rhs = (sum((f[e] for e in cut.out_edges()), Fraction(0))
           - sum((f[e] for e in cut.in_edges()), Fraction(0)))
    return lhs, rhs


def rescut(net: Network, f, v: int) -> frozenset:
    """Vertices reachable from v via residual edges of positive capacity."""
    net.check_vertex(v)
    seen = {v}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        for e in net.out_edges[u]:
            cap = net.capacity[e]
            head = net.edges[e].dst
            if (cap == INF or f[e] < cap) and head not in seen:
                seen.add(head)
                queue.append(head)
        for e in net.in_edges[u]:
            tail = net.edges[e].src
            if f[e] > 0 and tail not in seen:
                seen.add(tail)
                queue.append(tail)
    return frozenset(seen)


def decompose_circulation(net: Network, g) -> list:
    """Split a circulation into weighted directed cycles.

    Returns ``[(cycle_edge_ids, weight), ...]`` with positive weights such
    that every edge's flow is the sum of the weights of the cycles that use
    it.  The greedy walk always leaves a vertex through its lowest usable
    edge id, which makes the decomposition deterministic; integral input
    yields integral weights.
    """
    if any(g[e] < 0 for e in range(net.num_edges)):
        raise PreconditionError("circulation must be nonnegative")
    if any(excess(net, g, v) != 0 for v in net.vertices):
        raise PreconditionError("flow is not a circulation (nonzero excess)")
    g = list(g)
    cycles = []
    while True:
        start = next((net.edges[e].src for e in range(net.num_edges) if g[e] > 0), None)
        if start is None:
            break
        seen = {start: 0}
        walk_edges = []
        cur = start
        while True:
            e = min(eid for eid in net.out_edges[cur] if g[eid] > 0)
            walk_edges.append(e)
            cur = net.edges[e].dst
            if cur in seen:
                cycle = walk_edges[seen[cur]:]
                break
            seen[cur] = len(walk_edges)
        weight = min(g[e] for e in cycle)
        for e in cycle:
            g[e] -= weight
        cycles.append((cycle, weight))
    return cycles


def recompose(net: Network, decomposition) -> list:
    """Flow whose value on each edge is the sum of the covering cycle weights."""
    g = zero_flow(net)
    for cycle, weight in decomposition:
        for e in cycle:
            g[e] += weight
    return g


def find_augmenting_cycle(net: Network, f):
    """A residual cycle of negative total cost and positive capacity, or None."""
    projection = project_residual(net, f)
    vcycle = find_negative_cycle(net.vertices, projection.weights)
    if vcycle is None:
        return None
    return vertex_path_to_residual(projection, vcycle)


def verify_optimal(net: Network, f, b) -> bool:
    """Certify minimality: feasible for b and free of augmenting cycles."""
    if not is_feasible(net, f, b):
        return False
    return find_augmenting_cycle(net, f) is None
