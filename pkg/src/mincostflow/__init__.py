"""Exact-arithmetic minimum-cost flow solvers and supporting flow theory.

Three solvers over one network model: successive shortest paths, capacity
scaling, and Orlin's strongly polynomial algorithm (uncapacitated inputs,
with a reduction for everything else).  All quantities are exact rationals;
results are certified optimal via the augmenting-cycle criterion.
"""

from .errors import (FlowError, InputError, InstanceError, InternalInvariantError,
                     NegativeCycleError, ParseError, PathNotFoundError,
                     PreconditionError, SearchSpaceError)
from .flowtheory import (Cut, cut_flow_balance, decompose_circulation,
                         find_augmenting_cycle, recompose, rescut, verify_optimal)
from .network import (Edge, Network, ResidualEdge, augment, backward, excess,
                      flow_cost, forward, is_feasible, path_residual_capacity,
                      path_residual_cost, residual_capacity, residual_cost,
                      residual_endpoints, reverse_path, zero_flow)
from .oracle import (OracleResult, brute_force_min_cost_flow, enumerate_augcycles,
                     generate_corpus, opt_walk_dp)
from .orlins import (Flag, Forest, OrlinsConfig, OrlinsState, RepInfo,
                     initial_state, iteration_bounds, maintain_forest, new_gamma,
                     phi, send_flow, solve_orlins)
from .paths import (BellmanFordTable, ResidualProjection, bf_init, bf_run,
                    detect_negative_cycle, dfs_forest_path, extract_path,
                    find_negative_cycle, project_residual, relax,
                    vertex_path_to_residual)
from .rational import INF, ceil_log2
from .reduction import (ReducedInstance, has_neg_infty_cycle, lift_flow,
                        reduce_to_uncapacitated, restore_flow)
from .result import SolveResult, Status
from .scaling import solve_scaling
from .ssp import solve_ssp
from .cli import InstanceFile, parse_instance, render_instance, run

__version__ = "0.1.0"

__all__ = [
    "INF", "ceil_log2",
    "Edge", "Network", "ResidualEdge", "forward", "backward", "reverse_path",
    "zero_flow", "residual_capacity", "residual_cost", "residual_endpoints",
    "path_residual_capacity", "path_residual_cost", "excess", "is_feasible",
    "flow_cost", "augment",
    "Cut", "cut_flow_balance", "rescut", "decompose_circulation", "recompose",
    "find_augmenting_cycle", "verify_optimal",
    "BellmanFordTable", "bf_init", "bf_run", "relax", "extract_path",
    "detect_negative_cycle", "find_negative_cycle", "ResidualProjection",
    "project_residual", "vertex_path_to_residual", "dfs_forest_path",
    "SolveResult", "Status", "solve_ssp", "solve_scaling",
    "Flag", "Forest", "RepInfo", "OrlinsConfig", "OrlinsState", "initial_state",
    "phi", "new_gamma", "send_flow", "maintain_forest", "iteration_bounds",
    "solve_orlins",
    "ReducedInstance", "reduce_to_uncapacitated", "lift_flow", "restore_flow",
    "has_neg_infty_cycle",
    "OracleResult", "brute_force_min_cost_flow", "opt_walk_dp",
    "enumerate_augcycles", "generate_corpus",
    "InstanceFile", "parse_instance", "render_instance", "run",
    "FlowError", "InstanceError", "PreconditionError", "InputError",
    "NegativeCycleError", "PathNotFoundError", "ParseError", "SearchSpaceError",
    "InternalInvariantError",
]
