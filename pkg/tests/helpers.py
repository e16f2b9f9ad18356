"""Shared test-side oracles and generators, independent of the solver code."""

import random
from fractions import Fraction

from mincostflow import INF, Network, excess


def random_weighted_digraph(rng: random.Random, max_vertices=7, max_arcs=12,
                            low=-3, high=6):
    """(n, weights) with weights a dict over ordered pairs."""
    n = rng.randint(2, max_vertices)
    weights = {}
    for _ in range(rng.randint(1, max_arcs)):
        u, v = rng.randrange(n), rng.randrange(n)
        w = Fraction(rng.randint(low, high))
        if (u, v) not in weights or w < weights[(u, v)]:
            weights[(u, v)] = w
    return n, weights


def simple_cycles(weights):
    """All directed vertex-simple cycles over the pair keys, as closed lists."""
    adjacency = {}
    for u, v in weights:
        adjacency.setdefault(u, set()).add(v)

    def walk(start, current, path):
        for nxt in sorted(adjacency.get(current, ())):
            if nxt == start:
                yield path + [start]
            elif nxt > start and nxt not in path:
                yield from walk(start, nxt, path + [nxt])

    for start in sorted(adjacency):
        yield from walk(start, start, [start])


def cycle_weight(weights, cycle):
    return sum(weights[(cycle[i], cycle[i + 1])] for i in range(len(cycle) - 1))


def reachable(weights, source):
    seen = {source}
    frontier = [source]
    while frontier:
        u = frontier.pop()
        for (a, b) in weights:
            if a == u and b not in seen:
                seen.add(b)
                frontier.append(b)
    return seen


def random_circulation(rng: random.Random, integral=True):
    """A network made of random simple cycles plus the flow summing them."""
    n = rng.randint(2, 6)
    edges = []
    flow = []
    for _ in range(rng.randint(1, 4)):
        length = rng.randint(1, n)
        cycle = rng.sample(range(n), length)
        if integral:
            weight = Fraction(rng.randint(1, 3))
        else:
            weight = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        for i in range(length):
            edges.append((cycle[i], cycle[(i + 1) % length], INF, 0))
            flow.append(weight)
    net = Network(n, edges)
    return net, flow


def random_feasible_instance(rng: random.Random, infinite_share=0.4):
    """Mixed-capacity network plus a flow feasible for the implied balances."""
    n = rng.randint(1, 4)
    m = rng.randint(1, 6)
    edges = []
    flow = []
    for _ in range(m):
        u, v = rng.randrange(n), rng.randrange(n)
        if rng.random() < infinite_share:
            cap = INF
            f = Fraction(rng.randint(0, 3))
        else:
            cap = rng.randint(0, 3)
            f = Fraction(rng.randint(0, cap))
        edges.append((u, v, cap, rng.randint(-3, 3)))
        flow.append(f)
    net = Network(n, edges)
    balances = [-excess(net, flow, v) for v in net.vertices]
    return net, flow, balances
