"""Orlin's strongly polynomial minimum-cost flow solver (uncapacitated inputs).

Structure: an outer loop halves a threshold gamma; ``send_flow`` routes
gamma-sized augmentations between vertices whose remaining balance is large
relative to gamma; ``maintain_forest`` absorbs edges whose flow grew past
8*n*gamma into a spanning forest, concentrating each component's remaining
balance at a single representative.  Deactivated edges (both endpoints in
one forest component) are never routed over directly; forest paths simulate
them at equal or better cost, so path searches run on active and forest
edges only.

The execution order mirrors the recursive formulation: one send_flow on the
initial state, then rounds of (halve gamma, maintain_forest, send_flow)
until the flag leaves the not-yet-terminated state.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import InternalInvariantError, PreconditionError
from .flowtheory import verify_optimal
from .network import (Network, as_balances, augment, backward, forward,
                      path_residual_cost, reverse_path, zero_flow)
from .paths import (dfs_forest_path, extract_path, project_residual,
                    shortest_path_table, vertex_path_to_residual)
from .rational import INF, ceil_log2
from .result import SolveResult, Status, certified_success
from .validation import (require_uncapacitated, require_weight_conservative,
                         require_zero_sum)


class Flag(Enum):
    SUCCESS = "success"
    INFEASIBLE = "infeasible"
    NOT_YET_TERM = "notyetterm"


@dataclass(frozen=True)
class OrlinsConfig:
    """Solver knobs: the slack constant and optional exact invariant checking.

    ``epsilon`` must lie in (0, 1/n]; None picks the canonical 1/n.
    """

    epsilon: Fraction | None = None
    check_invariants: bool = False

    def resolve(self, num_vertices: int) -> "OrlinsConfig":
        eps = Fraction(self.epsilon) if self.epsilon is not None \
            else Fraction(1, num_vertices)
        if not 0 < eps <= Fraction(1, num_vertices):
            raise ValueError(
                f"epsilon must lie in (0, 1/{num_vertices}], got {eps}")
        return OrlinsConfig(eps, self.check_invariants)


class Forest:
    """Growing spanning forest: undirected adjacency plus vertex-pair -> edge id."""

    __slots__ = ("adjacency", "edge_of", "edge_ids")

    def __init__(self):
        self.adjacency = {}
        self.edge_of = {}
        self.edge_ids = set()

    def copy(self) -> "Forest":
        other = Forest.__new__(Forest)
        other.adjacency = {v: set(ns) for v, ns in self.adjacency.items()}
        other.edge_of = dict(self.edge_of)
        other.edge_ids = set(self.edge_ids)
        return other

    def add_edge(self, u: int, v: int, edge_id: int):
        key = (u, v) if u <= v else (v, u)
        if u == v or key in self.edge_of:
            raise InternalInvariantError("forest edge addition would create a cycle")
        self.adjacency.setdefault(u, set()).add(v)
        self.adjacency.setdefault(v, set()).add(u)
        self.edge_of[key] = edge_id
        self.edge_ids.add(edge_id)

    def edge_between(self, u: int, v: int) -> int:
        return self.edge_of[(u, v) if u <= v else (v, u)]

    def __len__(self):
        return len(self.edge_ids)


@dataclass
class RepInfo:
    """Per-vertex component representative and component cardinality."""

    rep: list
    size: list

    @classmethod
    def singletons(cls, n: int) -> "RepInfo":
        return cls(list(range(n)), [1] * n)

    def copy(self) -> "RepInfo":
        return RepInfo(list(self.rep), list(self.size))

    def rep_of(self, v: int) -> int:
        return self.rep[v]

    def size_of(self, v: int) -> int:
        return self.size[v]

    def component(self, v: int) -> frozenset:
        r = self.rep[v]
        return frozenset(u for u in range(len(self.rep)) if self.rep[u] == r)

    def reassign(self, old_reps, new_rep: int, new_size: int):
        for v in range(len(self.rep)):
            if self.rep[v] in old_reps:
                self.rep[v] = new_rep
                self.size[v] = new_size


@dataclass
class OrlinsCounters:
    outer_iterations: int = 0
    augmentations: int = 0
    merges: int = 0
    comps_log: list = field(default_factory=list)

    def copy(self) -> "OrlinsCounters":
        return OrlinsCounters(self.outer_iterations, self.augmentations,
                              self.merges, list(self.comps_log))


@dataclass
class OrlinsState:
    """Full solver state; subprocedures take and return copies."""

    flow: list
    balance: list
    forest: Forest
    rep: RepInfo
    actives: set
    gamma: Fraction
    flag: Flag
    counters: OrlinsCounters

    def copy(self) -> "OrlinsState":
        return OrlinsState(list(self.flow), list(self.balance),
                           self.forest.copy(), self.rep.copy(),
                           set(self.actives), self.gamma, self.flag,
                           self.counters.copy())

    def not_blocked(self, edge_id: int) -> bool:
        return edge_id in self.actives or edge_id in self.forest.edge_ids


def initial_state(net: Network, b) -> OrlinsState:
    """All edges active, singleton components, zero flow, gamma = max |b|."""
    b = as_balances(net, b)
    return OrlinsState(
        flow=zero_flow(net),
        balance=list(b),
        forest=Forest(),
        rep=RepInfo.singletons(net.num_vertices),
        actives=set(range(net.num_edges)),
        gamma=max(abs(x) for x in b),
        flag=Flag.NOT_YET_TERM,
        counters=OrlinsCounters(),
    )


def phi(balance, gamma, epsilon) -> int:
    """Balance potential: sum over vertices of ceil(|b(v)|/gamma - (1-eps))."""
    gamma = Fraction(gamma)
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    slack = 1 - Fraction(epsilon)
    return sum(math.ceil(abs(Fraction(x)) / gamma - slack) for x in balance)


def new_gamma(net: Network, state: OrlinsState) -> Fraction:
    """Halve gamma; drop straight to max |b'| when no active edge carries flow."""
    if all(state.flow[e] == 0 for e in state.actives):
        return min(state.gamma / 2, max(abs(x) for x in state.balance))
    return state.gamma / 2


def send_flow(net: Network, state: OrlinsState, cfg: OrlinsConfig) -> OrlinsState:
    """Route gamma-sized augmentations until balances settle under the threshold.

    Returns a state whose flag is SUCCESS (all balances zero), INFEASIBLE
    (a large supply or demand cannot reach any counterpart), or
    NOT_YET_TERM (all balances within (1-eps)*gamma, outer loop continues).
    Paths use active and forest edges only and are minimum-cost.
    """
    state = state.copy()
    eps = cfg.epsilon
    gamma = state.gamma
    n = net.num_vertices
    checking = cfg.check_invariants
    entry_flow = list(state.flow)
    entry_phi = None
    premise_6n = None
    if any(x != 0 for x in state.balance):
        if gamma <= 0:
            raise ValueError("positive gamma required while balances remain")
        entry_phi = phi(state.balance, gamma, eps)
        premise_6n = all(state.flow[e] > 6 * n * gamma
                         for e in state.forest.edge_ids)
    augmentations = 0

    while True:
        if all(x == 0 for x in state.balance):
            state.flag = Flag.SUCCESS
            break
        high = (1 - eps) * gamma
        low = eps * gamma
        s = next((v for v in net.vertices if state.balance[v] > high), None)
        if s is not None:
            projection = project_residual(net, state.flow, state.not_blocked)
            table = shortest_path_table(net, projection, s)
            t = next((v for v in net.vertices
                      if state.balance[v] < -low and table.dist[v] != INF), None)
            if t is None:
                state.flag = Flag.INFEASIBLE
                break
            path = vertex_path_to_residual(projection, extract_path(table, t))
        else:
            t = next((v for v in net.vertices if state.balance[v] < -high), None)
            if t is None:
                state.flag = Flag.NOT_YET_TERM
                break
            rev = project_residual(net, state.flow, state.not_blocked, reverse=True)
            table = shortest_path_table(net, rev, t)
            s = next((v for v in net.vertices
                      if state.balance[v] > low and table.dist[v] != INF), None)
            if s is None:
                state.flag = Flag.INFEASIBLE
                break
            projection = project_residual(net, state.flow, state.not_blocked)
            path = vertex_path_to_residual(projection, extract_path(table, s)[::-1])

        phi_before = phi(state.balance, gamma, eps) if checking else None
        state.flow = augment(net, state.flow, gamma, path)
        state.balance[s] -= gamma
        state.balance[t] += gamma
        augmentations += 1
        state.counters.augmentations += 1
        if augmentations > entry_phi:
            raise InternalInvariantError("send-flow exceeded its potential bound")
        if checking and premise_6n:
            if phi_before - phi(state.balance, gamma, eps) < 1:
                raise InternalInvariantError(
                    "augmentation failed to lower the balance potential")

    if checking:
        _check_send_flow_post(net, state, cfg, entry_flow)
    return state


def maintain_forest(net: Network, state: OrlinsState, cfg: OrlinsConfig) -> OrlinsState:
    """Absorb every active edge with flow above 8*n*gamma into the forest.

    Each absorbed edge merges two components: the smaller side's remaining
    balance moves to the larger side's representative along the (unique,
    minimum-cost) forest path, representatives and sizes are rewritten, and
    active edges now internal to the merged component are deactivated.
    Requires an uncapacitated network.
    """
    if not net.is_uncapacitated:
        raise PreconditionError("maintain-forest requires an uncapacitated network")
    state = state.copy()
    n = net.num_vertices
    gamma = state.gamma
    checking = cfg.check_invariants
    entry_flow = list(state.flow)
    entry_phi = phi(state.balance, gamma, cfg.epsilon) if checking and gamma > 0 else None
    beta = max(abs(x) for x in state.balance)
    threshold = 8 * n * gamma

    while True:
        eid = next((e for e in sorted(state.actives)
                    if e not in state.forest.edge_ids
                    and state.flow[e] > threshold), None)
        if eid is None:
            break
        edge = net.edges[eid]
        x, y = edge.src, edge.dst
        if x == y or state.rep.rep_of(x) == state.rep.rep_of(y):
            raise InternalInvariantError(
                "high-flow active edge already lies inside one forest component")
        if state.rep.size_of(y) < state.rep.size_of(x):
            x, y = y, x
        x_rep = state.rep.rep_of(x)
        y_rep = state.rep.rep_of(y)
        state.forest.add_edge(edge.src, edge.dst, eid)
        q_vertices = dfs_forest_path(state.forest.adjacency, x_rep, y_rep)
        q_path = _forest_residual_path(net, state.forest, q_vertices)
        phi_step = phi(state.balance, gamma, cfg.epsilon) if checking and gamma > 0 else None
        if checking:
            _check_forest_path_optimal(net, state, q_path, x_rep, y_rep)

        amount = state.balance[x_rep]
        if amount > 0:
            state.flow = augment(net, state.flow, amount, q_path)
        elif amount < 0:
            state.flow = augment(net, state.flow, -amount, reverse_path(q_path))
        state.balance[y_rep] += amount
        state.balance[x_rep] = Fraction(0)

        new_size = state.rep.size_of(x_rep) + state.rep.size_of(y_rep)
        state.rep.reassign({x_rep, y_rep}, y_rep, new_size)
        state.actives = {d for d in state.actives
                         if not (state.rep.rep_of(net.edges[d].src) == y_rep
                                 and state.rep.rep_of(net.edges[d].dst) == y_rep)}
        state.counters.merges += 1
        if state.counters.merges > n - 1:
            raise InternalInvariantError("more component merges than vertices allow")
        if phi_step is not None:
            if phi(state.balance, gamma, cfg.epsilon) > phi_step + 1:
                raise InternalInvariantError(
                    "merge raised the balance potential by more than 1")

    if checking:
        _check_maintain_forest_post(net, state, entry_flow, entry_phi, beta, cfg)
    return state


def iteration_bounds(n: int, m: int, epsilon) -> tuple:
    """(k, l, outer bound) with k = ceil(log2 n) + 3,
    l = ceil(log2(4mn + (1-eps)) - log2 eps) + 1, bound = n*(k + l + 2)."""
    if n < 1:
        raise ValueError("need at least one vertex")
    epsilon = Fraction(epsilon)
    if not 0 < epsilon <= Fraction(1, n):
        raise ValueError(f"epsilon must lie in (0, 1/{n}], got {epsilon}")
    k = ceil_log2(n) + 3
    l = ceil_log2((4 * m * n + 1 - epsilon) / epsilon) + 1
    return k, l, n * (k + l + 2)


def solve_orlins(net: Network, b, cfg: OrlinsConfig | None = None) -> SolveResult:
    """Strongly polynomial minimum-cost flow on an uncapacitated network.

    Balances and costs may be arbitrary rationals.  Capacitated instances
    must first go through ``reduction.reduce_to_uncapacitated``.
    """
    b = as_balances(net, b)
    require_uncapacitated(net)
    require_zero_sum(b)
    require_weight_conservative(net)
    cfg = (cfg or OrlinsConfig()).resolve(net.num_vertices)
    k, l, outer_bound = iteration_bounds(net.num_vertices, net.num_edges, cfg.epsilon)

    state = initial_state(net, b)
    _record_important_components(state, cfg)
    state = send_flow(net, state, cfg)
    if cfg.check_invariants:
        _check_state_invariants(net, b, state, cfg)

    while state.flag is Flag.NOT_YET_TERM:
        if state.counters.outer_iterations >= outer_bound:
            raise InternalInvariantError("outer iteration bound exceeded")
        state.gamma = new_gamma(net, state)
        _record_important_components(state, cfg)
        if cfg.check_invariants:
            _check_forest_flows(net, state, factor=8)
        state = maintain_forest(net, state, cfg)
        if cfg.check_invariants:
            _check_forest_flows(net, state, factor=6)
        state = send_flow(net, state, cfg)
        state.counters.outer_iterations += 1
        if cfg.check_invariants:
            _check_state_invariants(net, b, state, cfg)

    stats = {
        "outer_iterations": state.counters.outer_iterations,
        "augmentations": state.counters.augmentations,
        "merges": state.counters.merges,
        "comps_log": tuple(state.counters.comps_log),
        "epsilon": cfg.epsilon,
        "bound_k": k,
        "bound_l": l,
        "outer_bound": outer_bound,
    }
    if state.flag is Flag.SUCCESS:
        return certified_success(net, b, state.flow, stats)
    return SolveResult(Status.INFEASIBLE, stats=stats)


def _forest_residual_path(net, forest, vertices) -> list:
    path = []
    for u, v in zip(vertices, vertices[1:]):
        eid = forest.edge_between(u, v)
        e = net.edges[eid]
        path.append(forward(eid) if (e.src, e.dst) == (u, v) else backward(eid))
    return path


def _record_important_components(state: OrlinsState, cfg: OrlinsConfig):
    """Log the forest component of every vertex whose balance exceeds (1-eps)*gamma."""
    if state.gamma <= 0:
        state.counters.comps_log.append(())
        return
    cut = (1 - cfg.epsilon) * state.gamma
    comps = []
    seen = set()
    for v in range(len(state.balance)):
        if abs(state.balance[v]) > cut:
            comp = state.rep.component(v)
            if comp not in seen:
                seen.add(comp)
                comps.append(comp)
    state.counters.comps_log.append(tuple(comps))


# ---------------------------------------------------------------------------
# exact invariant checking (enabled via OrlinsConfig.check_invariants)

def _fail(message):
    raise InternalInvariantError(message)


def _check_forest_flows(net, state, factor):
    if state.gamma <= 0:
        return
    bound = factor * net.num_vertices * state.gamma
    for e in state.forest.edge_ids:
        if not state.flow[e] > bound:
            _fail(f"forest edge {e} flow {state.flow[e]} not above {factor}n*gamma")


def _check_send_flow_post(net, state, cfg, entry_flow):
    gamma = state.gamma
    if gamma > 0:
        for e in range(net.num_edges):
            if (Fraction(state.flow[e] - entry_flow[e]) / gamma).denominator != 1:
                _fail("flow change is not an integer multiple of gamma")
    if state.flag is Flag.SUCCESS:
        if any(x != 0 for x in state.balance):
            _fail("success flag with nonzero balances")
    elif state.flag is Flag.NOT_YET_TERM:
        limit = (1 - cfg.epsilon) * gamma
        if any(abs(x) > limit for x in state.balance):
            _fail("balance above (1-eps)*gamma after send-flow")
        if not any(x > 0 for x in state.balance):
            _fail("not-yet-terminated state without a positive balance")
    else:
        if not any(x > 0 for x in state.balance):
            _fail("infeasible state without a positive balance")


def _check_forest_path_optimal(net, state, q_path, x_rep, y_rep):
    full = project_residual(net, state.flow)
    table = shortest_path_table(net, full, x_rep)
    if path_residual_cost(net, q_path) != table.dist[y_rep]:
        _fail("forest path is not a minimum-cost residual path")
    back = shortest_path_table(net, full, y_rep)
    if path_residual_cost(net, reverse_path(q_path)) != back.dist[x_rep]:
        _fail("reversed forest path is not a minimum-cost residual path")


def _check_maintain_forest_post(net, state, entry_flow, entry_phi, beta, cfg):
    n = net.num_vertices
    for e in range(net.num_edges):
        if e in state.forest.edge_ids:
            if entry_flow[e] - state.flow[e] > n * beta:
                _fail("forest edge lost more than n*beta flow during maintenance")
        elif state.flow[e] != entry_flow[e]:
            _fail("maintain-forest changed a non-forest edge")
    if entry_phi is not None:
        if phi(state.balance, state.gamma, cfg.epsilon) > entry_phi + n:
            _fail("maintain-forest raised the balance potential by more than n")
    _check_rep_and_activation(net, state)


def _check_rep_and_activation(net, state):
    """IO-3/IO-4 plus representative book-keeping consistency."""
    rep = state.rep
    for v in net.vertices:
        if rep.rep_of(rep.rep_of(v)) != rep.rep_of(v):
            _fail("representative function is not idempotent")
        expected = sum(1 for u in net.vertices if rep.rep_of(u) == rep.rep_of(v))
        if rep.size_of(v) != expected:
            _fail("component cardinality out of sync")
        if rep.rep_of(v) != v and state.balance[v] != 0:
            _fail("non-representative vertex carries balance")
    components = len({rep.rep_of(v) for v in net.vertices})
    if len(state.forest.edge_ids) + components != net.num_vertices:
        _fail("forest edge count inconsistent with component count")
    for e in net.edges:
        deactivated = e.id not in state.actives and e.id not in state.forest.edge_ids
        if deactivated and rep.rep_of(e.src) != rep.rep_of(e.dst):
            _fail("deactivated edge spans two forest components")


def _check_state_invariants(net, b, state, cfg):
    """IO-1..IO-6 (IO-5 with the 4*n*gamma call-site threshold)."""
    gamma = state.gamma
    if gamma <= 0 and any(x != 0 for x in b):
        _fail("gamma must stay positive while the problem is unsolved")
    if sum(state.balance) != 0:
        _fail("remaining balances do not sum to zero")
    if gamma > 0:
        for e in state.actives:
            ratio = Fraction(state.flow[e]) / gamma
            if ratio < 0 or ratio.denominator != 1:
                _fail("active edge flow is not a nonnegative multiple of gamma")
    _check_rep_and_activation(net, state)
    _check_forest_flows(net, state, factor=4)
    consumed = [b[v] - state.balance[v] for v in net.vertices]
    if not verify_optimal(net, state.flow, consumed):
        _fail("flow lost optimality for the consumed balance")
