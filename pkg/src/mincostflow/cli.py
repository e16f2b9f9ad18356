"""Instance file format, solver dispatch and the command-line front end.

File format (one directive per line, '#' or 'c' starts a comment):

    p min <n> <m>            exactly once, before any n/a line
    n <vertex> <balance>     optional; vertices are 1-based; default balance 0
    a <src> <dst> <cap> <cost>   exactly m times; cap is 'inf' or a rational

Balances, capacities and costs accept integers, decimals or 'p/q'.

Exit codes: 0 success, 2 infeasible, 3 unbounded, 4 parse error,
5 precondition/input error.
"""

import argparse
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (FlowError, InputError, InstanceError, NegativeCycleError,
                     ParseError, PreconditionError, SearchSpaceError)
from .flowtheory import verify_optimal
from .network import Network, flow_cost
from .oracle import brute_force_min_cost_flow, generate_corpus
from .orlins import OrlinsConfig, solve_orlins
from .rational import INF, format_extended, parse_extended
from .reduction import reduce_to_uncapacitated, restore_flow
from .result import SolveResult, Status
from .scaling import solve_scaling
from .ssp import solve_ssp

EXIT_SUCCESS = 0
EXIT_INFEASIBLE = 2
EXIT_UNBOUNDED = 3
EXIT_PARSE = 4
EXIT_PRECONDITION = 5

SOLVERS = ("ssp", "scaling", "orlins")


@dataclass
class InstanceFile:
    """A parsed problem instance; render/parse round-trip exactly."""

    network: Network
    balances: tuple
    comments: tuple = ()
    name: str = field(default="", compare=False)

    def __eq__(self, other):
        if not isinstance(other, InstanceFile):
            return NotImplemented
        return (self.network.num_vertices == other.network.num_vertices
                and [(e.src, e.dst) for e in self.network.edges]
                == [(e.src, e.dst) for e in other.network.edges]
                and self.network.capacity == other.network.capacity
                and self.network.cost == other.network.cost
                and tuple(self.balances) == tuple(other.balances)
                and tuple(self.comments) == tuple(other.comments))


def parse_instance(text: str, name: str = "") -> InstanceFile:
    """Parse the line-oriented format above; diagnostics carry line numbers."""
    num_vertices = None
    num_edges = None
    balances = []
    balance_seen = set()
    edges = []
    comments = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#") or line.split(maxsplit=1)[0] == "c":
            comments.append(line[1:].strip())
            continue
        fields = line.split()
        tag = fields[0]
        if tag == "p":
            if num_vertices is not None:
                raise ParseError(lineno, "duplicate problem line")
            if len(fields) != 4 or fields[1] != "min":
                raise ParseError(lineno, "problem line must read 'p min <n> <m>'")
            try:
                num_vertices, num_edges = int(fields[2]), int(fields[3])
            except ValueError:
                raise ParseError(lineno, "vertex and edge counts must be integers")
            if num_vertices < 1 or num_edges < 1:
                raise ParseError(lineno, "need at least one vertex and one edge")
            balances = [Fraction(0)] * num_vertices
        elif tag == "n":
            if num_vertices is None:
                raise ParseError(lineno, "balance line before the problem line")
            if len(fields) != 3:
                raise ParseError(lineno, "balance line must read 'n <vertex> <balance>'")
            v = _parse_vertex(lineno, fields[1], num_vertices)
            if v in balance_seen:
                raise ParseError(lineno, f"duplicate balance for vertex {fields[1]}")
            balance_seen.add(v)
            balances[v] = _parse_rational(lineno, fields[2])
        elif tag == "a":
            if num_vertices is None:
                raise ParseError(lineno, "arc line before the problem line")
            if len(fields) != 5:
                raise ParseError(lineno, "arc line must read 'a <src> <dst> <cap> <cost>'")
            if len(edges) == num_edges:
                raise ParseError(lineno, f"more than {num_edges} arc lines")
            src = _parse_vertex(lineno, fields[1], num_vertices)
            dst = _parse_vertex(lineno, fields[2], num_vertices)
            try:
                cap = parse_extended(fields[3])
            except ValueError:
                raise ParseError(lineno, f"bad capacity {fields[3]!r}")
            if cap != INF and cap < 0:
                raise ParseError(lineno, f"negative capacity {fields[3]}")
            cost = _parse_rational(lineno, fields[4])
            edges.append((src, dst, cap, cost))
        else:
            raise ParseError(lineno, f"unknown line tag {tag!r}")

    last = text.count("\n") + 1
    if num_vertices is None:
        raise ParseError(last, "missing problem line")
    if len(edges) != num_edges:
        raise ParseError(last, f"expected {num_edges} arc lines, found {len(edges)}")
    return InstanceFile(Network(num_vertices, edges), tuple(balances),
                        tuple(comments), name)


def _parse_vertex(lineno, token, n):
    try:
        v = int(token)
    except ValueError:
        raise ParseError(lineno, f"vertex must be an integer, got {token!r}")
    if not 1 <= v <= n:
        raise ParseError(lineno, f"vertex {v} outside 1..{n}")
    return v - 1


def _parse_rational(lineno, token) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(lineno, f"bad rational {token!r}")


def render_instance(inst: InstanceFile) -> str:
    net = inst.network
    lines = [f"# {comment}" if comment else "#" for comment in inst.comments]
    lines.append(f"p min {net.num_vertices} {net.num_edges}")
    for v in net.vertices:
        if inst.balances[v] != 0:
            lines.append(f"n {v + 1} {inst.balances[v]}")
    for e in net.edges:
        lines.append(f"a {e.src + 1} {e.dst + 1} "
                     f"{format_extended(net.capacity[e.id])} {net.cost[e.id]}")
    return "\n".join(lines) + "\n"


def run(instance: InstanceFile, solver: str = "orlins", *, check: bool = True,
        stats: bool = False, oracle: bool = False, epsilon=None) -> tuple:
    """Solve an instance and return (exit_code, report_text).

    Every success is re-certified against the optimality criterion before
    anything is printed.  The orlins solver transparently reduces
    capacitated instances to uncapacitated ones and maps the flow back.
    """
    net, b = instance.network, instance.balances
    try:
        if oracle:
            return _run_oracle(net, b, stats)
        result, extra = _dispatch(net, b, solver, epsilon)
        if result.status is Status.SUCCESS:
            if check and not verify_optimal(net, result.flow, b):
                raise FlowError("certification of the reported flow failed")
            lines = ["status success", f"cost {result.cost}"]
            lines += [f"flow {e + 1} {result.flow[e]}" for e in range(net.num_edges)]
            if stats:
                lines += _stat_lines(result.stats | extra)
            return EXIT_SUCCESS, "\n".join(lines) + "\n"
        lines = ["status infeasible"]
        if stats:
            lines += _stat_lines(result.stats | extra)
        return EXIT_INFEASIBLE, "\n".join(lines) + "\n"
    except NegativeCycleError as exc:
        if solver == "orlins":
            return EXIT_UNBOUNDED, "status unbounded\n"
        return EXIT_PRECONDITION, f"error {exc}\n"
    except SearchSpaceError as exc:
        return EXIT_PRECONDITION, f"error {exc}\n"
    except (InputError, PreconditionError, InstanceError, ValueError) as exc:
        return EXIT_PRECONDITION, f"error {exc}\n"


def _dispatch(net, b, solver, epsilon):
    if solver == "ssp":
        return solve_ssp(net, b), {}
    if solver == "scaling":
        return solve_scaling(net, b), {}
    if solver != "orlins":
        raise InputError(f"unknown solver {solver!r}")
    cfg = OrlinsConfig(epsilon=Fraction(epsilon)) if epsilon is not None \
        else OrlinsConfig()
    if net.is_uncapacitated:
        return solve_orlins(net, b, cfg), {}
    reduced = reduce_to_uncapacitated(net, b)
    inner = solve_orlins(reduced.network, list(reduced.balances), cfg)
    if inner.status is Status.INFEASIBLE:
        return inner, {"reduced_vertices": reduced.network.num_vertices,
                       "reduced_edges": reduced.network.num_edges}
    restored = restore_flow(reduced, inner.flow)
    result = SolveResult(Status.SUCCESS, flow=restored,
                         cost=flow_cost(net, restored), stats=inner.stats)
    return result, {"reduced_vertices": reduced.network.num_vertices,
                    "reduced_edges": reduced.network.num_edges}


def _run_oracle(net, b, stats):
    cap_bound = None
    if any(c == INF for c in net.capacity):
        cap_bound = sum((x for x in b if x > 0), Fraction(0))
    result = brute_force_min_cost_flow(net, b, cap_bound=cap_bound)
    if not result.optimal:
        lines = ["status infeasible"]
        if stats:
            lines.append(f"stat search_space {result.search_space}")
        return EXIT_INFEASIBLE, "\n".join(lines) + "\n"
    lines = ["status success", f"cost {result.cost}"]
    lines += [f"flow {e + 1} {Fraction(result.flow[e])}" for e in range(net.num_edges)]
    if stats:
        lines.append(f"stat search_space {result.search_space}")
    return EXIT_SUCCESS, "\n".join(lines) + "\n"


def _stat_lines(stats: dict) -> list:
    lines = []
    for key in sorted(stats):
        value = stats[key]
        if key == "comps_log":
            value = sum(len(entry) for entry in value)
            key = "important_components"
        elif key == "phases":
            value = ",".join(f"{g}:{c}" for g, c in value)
        elif isinstance(value, (tuple, list)):
            value = ",".join(str(x) for x in value)
        lines.append(f"stat {key} {value}")
    return lines


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mincostflow",
        description="Exact minimum-cost flow solvers over rational data.",
        exit_on_error=False)
    parser.add_argument("instance", nargs="?",
                        help="instance file path, or '-' for stdin")
    parser.add_argument("--solver", choices=SOLVERS, default="orlins")
    parser.add_argument("--check", action=argparse.BooleanOptionalAction,
                        default=True,
                        help="re-certify optimality before printing (default on)")
    parser.add_argument("--stats", action="store_true",
                        help="emit solver counters as 'stat <key> <value>' lines")
    parser.add_argument("--oracle", action="store_true",
                        help="solve by brute force instead (tiny instances only)")
    parser.add_argument("--epsilon", metavar="P/Q",
                        help="slack constant for the orlins solver, in (0, 1/n]")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for --generate")
    parser.add_argument("--generate", type=int, metavar="COUNT",
                        help="emit COUNT random corpus instances and exit")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except argparse.ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SystemExit as exc:  # --help, or argparse paths that still exit
        return 0 if exc.code == 0 else EXIT_PARSE

    if args.generate is not None:
        instances, corpus_stats = generate_corpus(args.generate, args.seed,
                                                  infinite_share=0.2)
        chunks = []
        for i, (net, b) in enumerate(instances):
            inst = InstanceFile(net, tuple(b), (f"instance {i}",))
            chunks.append(render_instance(inst))
        sys.stdout.write("\n".join(chunks))
        if args.stats:
            print(f"stat attempted {corpus_stats.attempted}", file=sys.stderr)
            print(f"stat rejected_balance {corpus_stats.rejected_balance}",
                  file=sys.stderr)
            print("stat rejected_negative_cycle "
                  f"{corpus_stats.rejected_negative_cycle}", file=sys.stderr)
        return EXIT_SUCCESS

    if args.instance is None:
        print("error: no instance file given", file=sys.stderr)
        return EXIT_PARSE
    try:
        if args.instance == "-":
            text = sys.stdin.read()
            name = "<stdin>"
        else:
            with open(args.instance, "r", encoding="utf-8") as handle:
                text = handle.read()
            name = args.instance
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    try:
        instance = parse_instance(text, name)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    try:
        epsilon = Fraction(args.epsilon) if args.epsilon is not None else None
    except (ValueError, ZeroDivisionError):
        print(f"error: bad epsilon {args.epsilon!r}", file=sys.stderr)
        return EXIT_PRECONDITION

    code, report = run(instance, args.solver, check=args.check,
                       stats=args.stats, oracle=args.oracle, epsilon=epsilon)
    stream = sys.stderr if report.startswith("error") else sys.stdout
    stream.write(report)
    return code
