"""Input validation shared by the solvers."""

from fractions import Fraction

from .errors import InputError, NegativeCycleError
from .network import Network
from .paths import find_negative_cycle
from .rational import INF


def require_zero_sum(b):
    total = sum(b)
    if total != 0:
        raise InputError(f"balances must sum to zero, got {total}")


def require_integral(net: Network, b):
    """Balances and finite capacities must be integers (solver termination)."""
    for v, x in enumerate(b):
        if Fraction(x).denominator != 1:
            raise InputError(f"balance of vertex {v} is not integral: {x}")
    for e, cap in enumerate(net.capacity):
        if cap != INF and cap.denominator != 1:
            raise InputError(f"capacity of edge {e} is not integral: {cap}")


def require_uncapacitated(net: Network):
    if not net.is_uncapacitated:
        raise InputError("every edge capacity must be infinite for this solver")


def cost_cycle(net: Network, only_infinite_capacity: bool = False):
    """A negative-total-cost vertex cycle over the original costs, or None.

    With ``only_infinite_capacity`` the search is restricted to edges of
    infinite capacity.
    """
    weights = {}
    for e in net.edges:
        if only_infinite_capacity and net.capacity[e.id] != INF:
            continue
        pair = (e.src, e.dst)
        c = net.cost[e.id]
        if c < weights.get(pair, INF):
            weights[pair] = c
    return find_negative_cycle(net.vertices, weights)


def require_weight_conservative(net: Network):
    cycle = cost_cycle(net)
    if cycle is not None:
        raise NegativeCycleError(
            f"network has a negative-cost cycle through vertices {cycle}")
