"""Solver result type shared by all three algorithms."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import InternalInvariantError


class Status(Enum):
    SUCCESS = "success"
    INFEASIBLE = "infeasible"


@dataclass
class SolveResult:
    """Outcome of a solve: on SUCCESS the flow is feasible and certified optimal."""

    status: Status
    flow: list | None = None
    cost: Fraction | None = None
    stats: dict = field(default_factory=dict)

    @property
    def success(self) -> bool:
        return self.status is Status.SUCCESS


def certified_success(net, b, f, stats) -> SolveResult:
    """Build a SUCCESS result, re-deriving and certifying optimality first."""
    from .flowtheory import verify_optimal
    from .network import flow_cost

    if not verify_optimal(net, f, b):
        raise InternalInvariantError("solver produced a non-optimal or infeasible flow")
    return SolveResult(Status.SUCCESS, flow=f, cost=flow_cost(net, f), stats=stats)
