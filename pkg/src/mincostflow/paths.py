"""Bellman-Ford with predecessor extraction, negative-cycle detection,
the residual-multigraph-to-weighted-simple-graph projection, and DFS paths.

The solvers never search the residual multigraph directly.  They project it
onto a simple weighted digraph keeping, per ordered vertex pair, the cheapest
usable residual edge ("realizer"), run Bellman-Ford there, and map vertex
paths back to residual paths.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InternalInvariantError, PathNotFoundError
from .network import Network, ResidualEdge, backward, forward
from .rational import INF


@dataclass
class BellmanFordTable:
    """Distance/predecessor state of a Bellman-Ford run.

    ``weights`` holds the finite entries only; absent pairs weigh +inf.
    ``edge_list`` fixes the relax order of one pass (ascending pairs).
    """

    source: object
    vertices: tuple
    edge_list: tuple
    weights: dict
    dist: dict = field(default_factory=dict)
    pred: dict = field(default_factory=dict)
    rounds_run: int = 0

    def copy(self) -> "BellmanFordTable":
        return BellmanFordTable(self.source, self.vertices, self.edge_list,
                                self.weights, dict(self.dist), dict(self.pred),
                                self.rounds_run)


def bf_init(vertices, edge_list, weights, source) -> BellmanFordTable:
    """Fresh table: source at distance 0, everything else unreachable."""
    vertices = tuple(vertices)
    if source not in set(vertices):
        raise ValueError(f"source {source} not among the vertices")
    weights = dict(weights)
    pairs = tuple(sorted(p for p in set(edge_list) if weights.get(p, INF) != INF))
    table = BellmanFordTable(source=source,
                             vertices=vertices,
                             edge_list=pairs,
                             weights=weights)
    for v in vertices:
        table.dist[v] = INF
        table.pred[v] = None
    table.dist[source] = Fraction(0)
    return table


def relax(table: BellmanFordTable, u, v) -> BellmanFordTable:
    """Single relaxation step on a copy of the table."""
    table = table.copy()
    w = table.weights.get((u, v), INF)
    if w != INF and table.dist[u] != INF and table.dist[u] + w < table.dist[v]:
        table.dist[v] = table.dist[u] + w
        table.pred[v] = u
    return table


def bf_run(table: BellmanFordTable, rounds: int) -> BellmanFordTable:
    """Run full relaxation passes over the fixed edge list.

    Each pass evaluates improvements against the distances from the end of
    the previous pass, so after l passes dist(v) is exactly the cheapest
    walk from the source to v using at most l edges.
    """
    if rounds < 0:
        raise ValueError("rounds must be nonnegative")
    table = table.copy()
    for _ in range(rounds):
        _one_pass(table)
        table.rounds_run += 1
    return table


def _one_pass(table: BellmanFordTable) -> bool:
    """One snapshot-based pass, mutating the table. Returns True on any improvement."""
    snap = dict(table.dist)
    dist, pred, weights = table.dist, table.pred, table.weights
    improved = False
    for u, v in table.edge_list:
        du = snap[u]
        if du == INF:
            continue
        cand = du + weights[(u, v)]
        if cand < dist[v]:
            dist[v] = cand
            pred[v] = u
            improved = True
    return improved


def extract_path(table: BellmanFordTable, v) -> list:
    """Vertex path from the source to v through the predecessor graph."""
    if table.pred[v] is None and v != table.source:
        raise PathNotFoundError(f"vertex {v} is unreachable from {table.source}")
    path = [v]
    cur = v
    steps = 0
    while not (cur == table.source and table.pred[cur] is None):
        cur = table.pred[cur]
        if cur is None:
            raise InternalInvariantError("broken predecessor chain")
        path.append(cur)
        steps += 1
        if steps > len(table.vertices):
            raise InternalInvariantError("predecessor chain did not reach the source")
    path.reverse()
    return path


def detect_negative_cycle(table: BellmanFordTable):
    """After n-1 rounds: a vertex cycle of negative total weight, or None.

    The returned cycle is a closed vertex list (first == last).  Works on a
    private copy; the input table is left untouched.
    """
    n = len(table.vertices)
    if table.rounds_run < n - 1:
        raise ValueError("table must be run n-1 rounds before cycle detection")
    table = table.copy()
    for _ in range(n):
        improved = _improving_vertices(table)
        if not improved:
            return None
        cycle = _pred_cycle(table, improved[-1])
        if cycle is not None and _cycle_weight(table, cycle) < 0:
            return cycle
    raise InternalInvariantError("failed to extract a negative cycle")


def _improving_vertices(table) -> list:
    snap = dict(table.dist)
    out = []
    for u, v in table.edge_list:
        du = snap[u]
        if du == INF:
            continue
        cand = du + table.weights[(u, v)]
        if cand < table.dist[v]:
            table.dist[v] = cand
            table.pred[v] = u
            out.append(v)
    return out


def _pred_cycle(table, start):
    """Walk predecessors from a vertex known to sit behind a negative cycle."""
    n = len(table.vertices)
    cur = start
    for _ in range(n):
        nxt = table.pred[cur]
        if nxt is None:
            return None
        cur = nxt
    cycle = [cur]
    node = table.pred[cur]
    steps = 0
    while node != cur:
        if node is None or steps > n:
            return None
        cycle.append(node)
        node = table.pred[node]
        steps += 1
    cycle.append(cur)
    cycle.reverse()
    return cycle


def _cycle_weight(table, cycle) -> Fraction:
    return sum(table.weights[(cycle[i], cycle[i + 1])] for i in range(len(cycle) - 1))


def find_negative_cycle(vertices, weights):
    """Global negative-cycle search: hook every vertex to a virtual source.

    Returns a closed vertex cycle of negative total weight, or None.
    """
    vertices = list(vertices)
    if not vertices:
        return None
    virtual = max(vertices) + 1
    full = dict(weights)
    for v in vertices:
        full[(virtual, v)] = Fraction(0)
    table = bf_init(vertices + [virtual], full.keys(), full, virtual)
    table = bf_run(table, len(vertices))
    return detect_negative_cycle(table)


@dataclass
class ResidualProjection:
    """Cheapest-residual-edge view of a residual multigraph as a simple digraph.

    ``weights[(u, v)]`` is the least residual cost of any usable residual
    edge from u to v; ``realizer[(u, v)]`` is one edge attaining it.  Only
    pairs with at least one usable edge appear.
    """

    vertices: tuple
    weights: dict
    realizer: dict

    def weight(self, u, v):
        return self.weights.get((u, v), INF)

    def edge_list(self):
        return sorted(self.weights)


def project_residual(net: Network, f, not_blocked=None, reverse: bool = False,
                     min_capacity=None) -> ResidualProjection:
    """Project usable residual edges onto ordered vertex pairs.

    A residual edge is usable when its underlying edge passes ``not_blocked``
    (default: everything) and its residual capacity is positive (at least
    ``min_capacity`` when given).  With ``reverse=True`` all directions are
    flipped, which turns a single-target search into a single-source one.
    """
    weights = {}
    realizer = {}

    def offer(tail, head, cost, redge):
        pair = (head, tail) if reverse else (tail, head)
        if cost < weights.get(pair, INF):
            weights[pair] = cost
            realizer[pair] = redge

    floor = min_capacity if min_capacity is not None else 0
    for e in net.edges:
        if not_blocked is not None and not not_blocked(e.id):
            continue
        cap = net.capacity[e.id]
        fwd_cap = INF if cap == INF else cap - f[e.id]
        if fwd_cap > 0 and fwd_cap >= floor:
            offer(e.src, e.dst, net.cost[e.id], forward(e.id))
        if f[e.id] > 0 and f[e.id] >= floor:
            offer(e.dst, e.src, -net.cost[e.id], backward(e.id))
    return ResidualProjection(tuple(net.vertices), weights, realizer)


def vertex_path_to_residual(projection: ResidualProjection, vertex_path) -> list:
    """Realize each consecutive pair of a vertex path by its cheapest residual edge."""
    path = []
    for u, v in zip(vertex_path, vertex_path[1:]):
        redge = projection.realizer.get((u, v))
        if redge is None:
            raise PathNotFoundError(f"no usable residual edge from {u} to {v}")
        path.append(redge)
    return path


def shortest_path_table(net: Network, projection: ResidualProjection,
                        source) -> BellmanFordTable:
    """Converged Bellman-Ford run (n-1 passes) over a projection."""
    table = bf_init(net.vertices, projection.edge_list(), projection.weights, source)
    return bf_run(table, net.num_vertices - 1)


def dfs_forest_path(adjacency, s, t):
    """Simple path from s to t in an undirected acyclic adjacency, or None.

    Stack-based DFS expanding neighbours in ascending order; in a forest the
    returned path is the unique one.
    """
    if s == t:
        return [s]
    parent = {s: None}
    stack = [s]
    while stack:
        u = stack.pop()
        if u == t:
            break
        for w in sorted(adjacency.get(u, ()), reverse=True):
            if w not in parent:
                parent[w] = u
                stack.append(w)
    if t not in parent:
        return None
    path = [t]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    return path
