"""Directed multigraph flow networks, residual edges and flow arithmetic.

Conventions used across the package:

* vertices are dense ints ``0..n-1``; edges carry dense int ids ``0..m-1``,
* a flow is a list of Fractions indexed by edge id,
* balances are a list of Fractions indexed by vertex id
  (positive = supply, negative = demand),
* every operation is pure: inputs are never mutated, results are fresh.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InstanceError, PreconditionError
from .rational import INF, rational


@dataclass(frozen=True)
class Edge:
    id: int
    src: int
    dst: int


@dataclass(frozen=True)
class ResidualEdge:
    """A forward or backward copy of a network edge in the residual graph."""

    edge: int
    is_forward: bool

    def reverse(self) -> "ResidualEdge":
        return ResidualEdge(self.edge, not self.is_forward)

    def __repr__(self):
        return f"{'F' if self.is_forward else 'B'}{self.edge}"


def forward(edge_id: int) -> ResidualEdge:
    return ResidualEdge(edge_id, True)


def backward(edge_id: int) -> ResidualEdge:
    return ResidualEdge(edge_id, False)


def reverse_path(path) -> list:
    """Reverse a residual path: each edge flipped, in reversed order."""
    return [r.reverse() for r in reversed(path)]


class Network:
    """A finite directed multigraph with per-edge capacity and cost.

    ``edges`` is an iterable of ``(src, dst, capacity, cost)`` where capacity
    is a nonnegative rational or ``INF`` and cost an arbitrary rational.
    Instances are immutable after construction; two distinct edge ids may
    share both endpoints (parallel edges), and self-loops are permitted.
    """

    __slots__ = ("num_vertices", "edges", "capacity", "cost",
                 "out_edges", "in_edges", "_uncapacitated")

    def __init__(self, num_vertices: int, edges):
        if num_vertices < 1:
            raise InstanceError("a network needs at least one vertex")
        edge_objs = []
        caps = []
        costs = []
        for src, dst, cap, cost in edges:
            eid = len(edge_objs)
            if not (0 <= src < num_vertices and 0 <= dst < num_vertices):
                raise InstanceError(f"edge {eid}: endpoint outside 0..{num_vertices - 1}")
            cap = cap if cap == INF else rational(cap)
            if cap != INF and cap < 0:
                raise InstanceError(f"edge {eid}: negative capacity {cap}")
            edge_objs.append(Edge(eid, src, dst))
            caps.append(cap)
            costs.append(rational(cost))
        if not edge_objs:
            raise InstanceError("a network needs at least one edge")
        self.num_vertices = num_vertices
        self.edges = tuple(edge_objs)
        self.capacity = tuple(caps)
        self.cost = tuple(costs)
        out_lists = [[] for _ in range(num_vertices)]
        in_lists = [[] for _ in range(num_vertices)]
        for e in edge_objs:
            out_lists[e.src].append(e.id)
            in_lists[e.dst].append(e.id)
        self.out_edges = tuple(tuple(l) for l in out_lists)
        self.in_edges = tuple(tuple(l) for l in in_lists)
        self._uncapacitated = all(c == INF for c in caps)

    @property
    def vertices(self) -> range:
        return range(self.num_vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def is_uncapacitated(self) -> bool:
        return self._uncapacitated

    def edge(self, edge_id: int) -> Edge:
        if not 0 <= edge_id < len(self.edges):
            raise InstanceError(f"unknown edge id {edge_id}")
        return self.edges[edge_id]

    def check_vertex(self, v: int) -> int:
        if not 0 <= v < self.num_vertices:
            raise InstanceError(f"unknown vertex id {v}")
        return v

    def __repr__(self):
        return f"Network(n={self.num_vertices}, m={self.num_edges})"


def zero_flow(net: Network) -> list:
    return [Fraction(0)] * net.num_edges


def as_balances(net: Network, values) -> list:
    """Coerce a balance sequence to Fractions, checking its length."""
    values = list(values)
    if len(values) != net.num_vertices:
        raise InstanceError(
            f"expected {net.num_vertices} balances, got {len(values)}")
    return [rational(x) for x in values]


def residual_endpoints(net: Network, r: ResidualEdge) -> tuple:
    """(tail, head) of a residual edge: forward follows the edge, backward opposes it."""
    e = net.edge(r.edge)
    return (e.src, e.dst) if r.is_forward else (e.dst, e.src)


def residual_capacity(net: Network, f, r: ResidualEdge):
    """u(e) - f(e) on a forward copy, f(e) on a backward copy."""
    e = net.edge(r.edge)
    if r.is_forward:
        cap = net.capacity[e.id]
        return INF if cap == INF else cap - f[e.id]
    return f[e.id]


def residual_cost(net: Network, r: ResidualEdge) -> Fraction:
    """c(e) on a forward copy, -c(e) on a backward copy."""
    c = net.cost[net.edge(r.edge).id]
    return c if r.is_forward else -c


def path_residual_capacity(net: Network, f, path):
    """Minimum residual capacity along a nonempty residual path."""
    if not path:
        raise ValueError("residual path must be nonempty")
    return min(residual_capacity(net, f, r) for r in path)


def path_residual_cost(net: Network, path) -> Fraction:
    """Total residual cost of a nonempty residual path."""
    if not path:
        raise ValueError("residual path must be nonempty")
    return sum(residual_cost(net, r) for r in path)


def excess(net: Network, f, v: int) -> Fraction:
    """Inflow minus outflow of f at v."""
    net.check_vertex(v)
    return sum(f[e] for e in net.in_edges[v]) - sum(f[e] for e in net.out_edges[v])


def is_feasible(net: Network, f, b) -> bool:
    """True iff 0 <= f <= u edge-wise and -excess(v) = b(v) at every vertex."""
    for e in range(net.num_edges):
        if f[e] < 0:
            return False
        cap = net.capacity[e]
        if cap != INF and f[e] > cap:
            return False
    return all(-excess(net, f, v) == b[v] for v in net.vertices)


def flow_cost(net: Network, f) -> Fraction:
    return sum((f[e] * net.cost[e] for e in range(net.num_edges)), Fraction(0))


def augment(net: Network, f, gamma, path) -> list:
    """Push gamma along a residual path: forward edges gain, backward edges lose.

    Requires 0 <= gamma <= path residual capacity and pairwise-distinct
    residual edges (the same underlying edge may appear once forward and
    once backward).
    """
    if gamma < 0:
        raise ValueError(f"augmentation amount must be nonnegative, got {gamma}")
    if len(set(path)) != len(path):
        raise ValueError("residual path repeats a residual edge")
    if path and gamma > path_residual_capacity(net, f, path):
        raise PreconditionError(
            f"augmentation amount {gamma} exceeds path capacity "
            f"{path_residual_capacity(net, f, path)}")
    g = list(f)
    for r in path:
        if r.is_forward:
            g[r.edge] = g[r.edge] + gamma
        else:
            g[r.edge] = g[r.edge] - gamma
    return g
