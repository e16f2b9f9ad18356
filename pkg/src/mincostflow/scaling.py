"""Capacity scaling solver.

Same augmentation engine as the successive-shortest-path solver, but a phase
with threshold gamma only routes triples whose supply, demand and path
capacity all clear gamma, and gamma halves between phases.  A path qualifies
only if it is minimum-cost among *all* residual paths for its endpoints and
still has capacity >= gamma; requiring mere minimality within the
gamma-restricted residual graph can augment along globally non-optimal
paths and lose the optimality invariant.
"""

from fractions import Fraction

from .errors import InternalInvariantError
from .flowtheory import rescut
from .network import Network, as_balances, augment, zero_flow
from .paths import extract_path, project_residual, shortest_path_table, \
    vertex_path_to_residual
from .rational import INF
from .result import SolveResult, Status, certified_success
from .ssp import _check_loop_invariants
from .validation import require_integral, require_weight_conservative, \
    require_zero_sum


def solve_scaling(net: Network, b, *, check_invariants: bool = False) -> SolveResult:
    """Minimum-cost flow by capacity scaling (same contract as solve_ssp).

    The starting threshold is the largest power of two not exceeding
    max(1, half the total absolute balance); every augmentation in a phase
    moves exactly the phase threshold.
    """
    b = as_balances(net, b)
    require_zero_sum(b)
    require_integral(net, b)
    require_weight_conservative(net)

    f = zero_flow(net)
    remaining = list(b)
    big = max(1, int(sum(abs(x) for x in b)) // 2)
    gamma = 1 << (big.bit_length() - 1)
    phases = []
    total_augmentations = 0
    max_augmentations = int(sum(abs(x) for x in b)) + 1

    while True:
        count = 0
        solved = False
        while True:
            if all(x == 0 for x in remaining):
                solved = True
                break
            triple = _qualifying_triple(net, f, remaining, gamma)
            if triple is None:
                break
            s, t, path = triple
            f = augment(net, f, gamma, path)
            remaining[s] -= gamma
            remaining[t] += gamma
            count += 1
            total_augmentations += 1
            if total_augmentations > max_augmentations:
                raise InternalInvariantError("termination measure exhausted")
            if check_invariants:
                _check_loop_invariants(net, b, f, remaining)
        phases.append((gamma, count))
        stats = {"phases": tuple(phases), "iterations": total_augmentations}
        if solved:
            return certified_success(net, b, f, stats)
        if gamma == 1:
            s = next(v for v in net.vertices if remaining[v] > 0)
            stats["witness_source"] = s
            stats["witness_rescut"] = tuple(sorted(rescut(net, f, s)))
            return SolveResult(Status.INFEASIBLE, stats=stats)
        gamma //= 2


def _qualifying_triple(net, f, remaining, gamma):
    """Lowest-id (s, t) with supply >= gamma, demand <= -gamma, joined by a
    globally minimum-cost residual path of capacity >= gamma; None if no
    such triple exists."""
    full = project_residual(net, f)
    wide = project_residual(net, f, min_capacity=gamma)
    for s in net.vertices:
        if remaining[s] < gamma:
            continue
        full_table = shortest_path_table(net, full, s)
        wide_table = shortest_path_table(net, wide, s)
        for t in net.vertices:
            if remaining[t] > -gamma:
                continue
            if wide_table.dist[t] == INF:
                continue
            if wide_table.dist[t] != full_table.dist[t]:
                continue
            path = vertex_path_to_residual(wide, extract_path(wide_table, t))
            return s, t, path
    return None
