"""Successive shortest paths solver.

Repeatedly routes as much as possible from the lowest-id vertex with
remaining supply to the lowest-id reachable vertex with remaining demand,
along a minimum-cost residual path.  Every intermediate flow stays a
minimum-cost flow for the balance already consumed; if the chosen supply
vertex cannot reach any demand vertex, its residual cut proves the instance
infeasible.
"""

from fractions import Fraction

from .errors import InternalInvariantError
from .flowtheory import rescut, verify_optimal
from .network import (Network, as_balances, augment, path_residual_capacity,
                      zero_flow)
from .paths import extract_path, project_residual, shortest_path_table, \
    vertex_path_to_residual
from .rational import INF
from .result import SolveResult, Status, certified_success
from .validation import require_integral, require_weight_conservative, \
    require_zero_sum


def solve_ssp(net: Network, b, *, check_invariants: bool = False) -> SolveResult:
    """Minimum-cost flow by successive shortest augmenting paths.

    Requires a zero-sum integral balance vector, integral finite capacities
    and no negative-cost cycle.  With ``check_invariants`` every iteration
    additionally asserts the loop invariants (exact arithmetic, zero
    tolerance), raising InternalInvariantError on violation.
    """
    b = as_balances(net, b)
    require_zero_sum(b)
    require_integral(net, b)
    require_weight_conservative(net)

    f = zero_flow(net)
    remaining = list(b)
    iterations = 0
    max_iterations = int(sum(abs(x) for x in b)) + 1

    while any(x != 0 for x in remaining):
        if iterations >= max_iterations:
            raise InternalInvariantError("termination measure exhausted")
        s = next(v for v in net.vertices if remaining[v] > 0)
        projection = project_residual(net, f)
        table = shortest_path_table(net, projection, s)
        t = next((v for v in net.vertices
                  if remaining[v] < 0 and table.dist[v] != INF), None)
        if t is None:
            return _infeasible(net, f, b, remaining, s, iterations)
        path = vertex_path_to_residual(projection, extract_path(table, t))
        gamma = min(remaining[s], -remaining[t],
                    path_residual_capacity(net, f, path))
        f = augment(net, f, gamma, path)
        remaining[s] -= gamma
        remaining[t] += gamma
        iterations += 1
        if check_invariants:
            _check_loop_invariants(net, b, f, remaining)

    return certified_success(net, b, f, {"iterations": iterations})


def _infeasible(net, f, b, remaining, s, iterations) -> SolveResult:
    cut = rescut(net, f, s)
    stats = {
        "iterations": iterations,
        "witness_source": s,
        "witness_rescut": tuple(sorted(cut)),
    }
    return SolveResult(Status.INFEASIBLE, stats=stats)


def _check_loop_invariants(net, b, f, remaining):
    """ISSP invariants: optimality for the consumed balance, integrality, zero sum."""
    if sum(remaining) != 0:
        raise InternalInvariantError("remaining balances do not sum to zero")
    consumed = [b[v] - remaining[v] for v in net.vertices]
    if not verify_optimal(net, f, consumed):
        raise InternalInvariantError("intermediate flow lost optimality")
    if any(Fraction(x).denominator != 1 for x in f):
        raise InternalInvariantError("intermediate flow not integral")
    if any(Fraction(x).denominator != 1 for x in remaining):
        raise InternalInvariantError("remaining balances not integral")
