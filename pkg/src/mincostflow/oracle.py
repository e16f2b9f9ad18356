"""Brute-force ground truth for desk-scale instances.

Nothing here shares logic with the solvers: the minimum-cost oracle
enumerates integral flows outright (with sound pruning that cannot change
the answer), the shortest-walk oracle evaluates the defining recurrence,
and cycle search enumerates simple cycles.  Agreement between solvers and
this module is therefore evidence, not tautology.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, SearchSpaceError
from .network import Network, ResidualEdge, backward, forward
from .rational import INF

DEFAULT_CANDIDATE_LIMIT = 10_000_000


@dataclass(frozen=True)
class OracleResult:
    optimal: bool
    cost: Fraction | None
    flow: tuple | None
    search_space: int


def brute_force_min_cost_flow(net: Network, b, cap_bound=None,
                              limit: int = DEFAULT_CANDIDATE_LIMIT) -> OracleResult:
    """Exhaustively enumerate integral flows and keep the cheapest feasible one.

    Each edge ranges over 0..min(u(e), cap_bound); all bounds must come out
    finite and integral.  Ties are broken towards the lexicographically
    smallest flow vector.  Enumeration order is depth-first by edge id with
    ascending values; subtrees are skipped only when provably either
    infeasible (a settled vertex with wrong excess, or an unreachable excess
    correction) or no better than the incumbent.
    """
    m = net.num_edges
    n = net.num_vertices
    b = [Fraction(x) for x in b]
    if any(x.denominator != 1 for x in b):
        raise PreconditionError("oracle requires integral balances")

    bounds = []
    for e in range(m):
        eff = net.capacity[e]
        if cap_bound is not None:
            eff = min(eff, Fraction(cap_bound))
        if eff == INF:
            raise PreconditionError(
                f"edge {e} has no finite enumeration bound; pass cap_bound")
        if Fraction(eff).denominator != 1:
            raise PreconditionError(f"edge {e} enumeration bound {eff} not integral")
        bounds.append(int(eff))

    search_space = 1
    for bound in bounds:
        search_space *= bound + 1
        if search_space > limit:
            raise SearchSpaceError(
                f"search space exceeds the configured limit of {limit}")

    target = [int(-x) for x in b]  # required excess per vertex
    costs = net.cost
    srcs = [e.src for e in net.edges]
    dsts = [e.dst for e in net.edges]

    # Remaining in/out enumeration headroom per vertex, used to prune
    # branches whose excess can no longer be corrected.
    rem_in = [0] * n
    rem_out = [0] * n
    for e in range(m):
        rem_out[srcs[e]] += bounds[e]
        rem_in[dsts[e]] += bounds[e]

    # Suffix lower bound on the cost still addable from edge e onwards.
    suffix_lb = [Fraction(0)] * (m + 1)
    for e in range(m - 1, -1, -1):
        lb = costs[e] * bounds[e] if costs[e] < 0 else Fraction(0)
        suffix_lb[e] = suffix_lb[e + 1] + lb

    ex = [0] * n  # inflow - outflow of the partial assignment
    assignment = [0] * m
    best_cost = None
    best_flow = None

    def still_satisfiable(v) -> bool:
        # Future edges can still add up to rem_in[v] inflow and rem_out[v]
        # outflow at v, so the missing excess must fit that interval.
        need = target[v] - ex[v]
        return -rem_out[v] <= need <= rem_in[v]

    def descend(e, cost_so_far):
        nonlocal best_cost, best_flow
        if best_cost is not None and cost_so_far + suffix_lb[e] >= best_cost:
            return
        if e == m:
            if all(ex[v] == target[v] for v in range(n)):
                best_cost = cost_so_far
                best_flow = tuple(assignment)
            return
        s, d, c = srcs[e], dsts[e], costs[e]
        rem_out[s] -= bounds[e]
        rem_in[d] -= bounds[e]
        for value in range(bounds[e] + 1):
            assignment[e] = value
            ex[s] -= value
            ex[d] += value
            if still_satisfiable(s) and still_satisfiable(d):
                descend(e + 1, cost_so_far + c * value)
            ex[s] += value
            ex[d] -= value
        assignment[e] = 0
        rem_out[s] += bounds[e]
        rem_in[d] += bounds[e]

    descend(0, Fraction(0))
    if best_flow is None:
        return OracleResult(False, None, None, search_space)
    return OracleResult(True, best_cost, best_flow, search_space)


def feasible_flows(net: Network, b, cap_bound=None,
                   limit: int = DEFAULT_CANDIDATE_LIMIT):
    """Yield every integral feasible flow (same bounds as the min-cost oracle)."""
    m = net.num_edges
    bounds = []
    for e in range(m):
        eff = net.capacity[e]
        if cap_bound is not None:
            eff = min(eff, Fraction(cap_bound))
        if eff == INF:
            raise PreconditionError(
                f"edge {e} has no finite enumeration bound; pass cap_bound")
        bounds.append(int(eff))
    search_space = 1
    for bound in bounds:
        search_space *= bound + 1
    if search_space > limit:
        raise SearchSpaceError(f"search space exceeds the configured limit of {limit}")
    target = [-Fraction(x) for x in b]
    for candidate in itertools.product(*(range(bound + 1) for bound in bounds)):
        ok = True
        for v in net.vertices:
            ex = sum(candidate[e] for e in net.in_edges[v]) \
                - sum(candidate[e] for e in net.out_edges[v])
            if ex != target[v]:
                ok = False
                break
        if ok:
            yield candidate


def opt_walk_dp(vertices, weights, source, rounds: int) -> dict:
    """Cheapest walk weights with at most ``rounds`` edges, by the recurrence
    OPT(l+1, v) = min(OPT(l, v), min_u OPT(l, u) + w(u, v))."""
    if rounds < 0:
        raise ValueError("rounds must be nonnegative")
    vertices = list(vertices)
    opt = {v: INF for v in vertices}
    opt[source] = Fraction(0)
    for _ in range(rounds):
        nxt = dict(opt)
        for (u, v), w in weights.items():
            if w != INF and opt[u] != INF and opt[u] + w < nxt[v]:
                nxt[v] = opt[u] + w
        opt = nxt
    return opt


def enumerate_augcycles(net: Network, f, max_vertices: int = 8) -> list:
    """All simple residual cycles with positive capacity and negative cost.

    Cycles are vertex-simple; per hop, every positive-capacity residual edge
    between the two vertices is a separate choice.  Refuses networks with
    more than ``max_vertices`` vertices.
    """
    if net.num_vertices > max_vertices:
        raise SearchSpaceError(
            f"cycle enumeration limited to {max_vertices} vertices")
    hops = {}
    for e in net.edges:
        cap = net.capacity[e.id]
        if cap == INF or f[e.id] < cap:
            hops.setdefault((e.src, e.dst), []).append(forward(e.id))
        if f[e.id] > 0:
            hops.setdefault((e.dst, e.src), []).append(backward(e.id))

    result = []
    for vcycle in simple_vertex_cycles(hops.keys()):
        pairs = list(zip(vcycle, vcycle[1:]))
        for combo in itertools.product(*(hops[p] for p in pairs)):
            cost = sum(_residual_cost(net, r) for r in combo)
            if cost < 0:
                result.append(list(combo))
    return result


def _residual_cost(net, r: ResidualEdge) -> Fraction:
    c = net.cost[r.edge]
    return c if r.is_forward else -c


def simple_vertex_cycles(pairs):
    """All directed vertex-simple cycles of a digraph given as ordered pairs.

    Yields closed vertex lists (first == last), each cycle once, rotated so
    the smallest vertex leads.  Includes self-loops as [v, v].
    """
    adjacency = {}
    for u, v in pairs:
        adjacency.setdefault(u, set()).add(v)
    vertices = sorted(set(adjacency) | {v for vs in adjacency.values() for v in vs})

    def walk(start, current, path):
        for nxt in sorted(adjacency.get(current, ())):
            if nxt == start:
                yield path + [start]
            elif nxt > start and nxt not in path:
                yield from walk(start, nxt, path + [nxt])

    for start in vertices:
        yield from walk(start, start, [start])


@dataclass
class CorpusStats:
    attempted: int = 0
    rejected_balance: int = 0
    rejected_negative_cycle: int = 0
    accepted: int = 0


def generate_corpus(count: int, seed: int, *, max_vertices: int = 4,
                    max_edges: int = 6, max_capacity: int = 3,
                    min_cost: int = -3, max_cost: int = 3,
                    max_balance: int = 3, uncapacitated: bool = False,
                    infinite_share: float = 0.0,
                    require_conservative: bool = True):
    """Seeded random tiny instances: ``(instances, stats)``.

    Instances are zero-sum and (by default) weight-conservative; rejected
    draws are tallied in the stats.  ``uncapacitated`` forces every capacity
    to infinity; otherwise ``infinite_share`` is the probability of an
    individual edge being uncapacitated.
    """
    rng = random.Random(seed)
    stats = CorpusStats()
    instances = []
    while stats.accepted < count:
        stats.attempted += 1
        n = rng.randint(1, max_vertices)
        m = rng.randint(1, max_edges)
        edges = []
        for _ in range(m):
            src = rng.randrange(n)
            dst = rng.randrange(n)
            if uncapacitated:
                cap = INF
            elif infinite_share and rng.random() < infinite_share:
                cap = INF
            else:
                cap = rng.randint(0, max_capacity)
            cost = rng.randint(min_cost, max_cost)
            edges.append((src, dst, cap, cost))
        balances = [rng.randint(-max_balance, max_balance) for _ in range(n - 1)]
        last = -sum(balances)
        if abs(last) > max_balance:
            stats.rejected_balance += 1
            continue
        balances.append(last)
        net = Network(n, edges)
        if require_conservative and _has_negative_cost_cycle(net):
            stats.rejected_negative_cycle += 1
            continue
        stats.accepted += 1
        instances.append((net, [Fraction(x) for x in balances]))
    return instances, stats


def _has_negative_cost_cycle(net: Network) -> bool:
    """Exhaustive check on the original costs, capacities ignored."""
    cheapest = {}
    for e in net.edges:
        pair = (e.src, e.dst)
        if pair not in cheapest or net.cost[e.id] < cheapest[pair]:
            cheapest[pair] = net.cost[e.id]
    for vcycle in simple_vertex_cycles(cheapest.keys()):
        total = sum(cheapest[(vcycle[i], vcycle[i + 1])]
                    for i in range(len(vcycle) - 1))
        if total < 0:
            return True
    return False
