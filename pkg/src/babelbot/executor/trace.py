"""Execution outcome types: per-action statuses, traces, goal checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from babelbot.engine.types import ActionPrimitive
from babelbot.simulator.robot import TwistCommand, distance_between

DEFAULT_GOAL_TOLERANCE_M = 0.2


class NotApproved(Exception):
    """Attempt to execute a multistep plan before a positive confirmation."""


class AbortRequested(Exception):
    """Raised internally when the session abort signal is observed."""


class ActionStatus(Enum):
    SUCCESS = "success"
    FAILED = "failed"
    SKIPPED = "skipped"
    ABORTED = "aborted"


@dataclass
class ActionOutcome:
    primitive: ActionPrimitive
    started_at: float  # simulation seconds
    ended_at: float
    status: ActionStatus
    detail: str = ""


@dataclass
class ExecutionTrace:
    """Per-action record of one plan run, plus the emitted twist stream.

    ``s_n`` follows the logged-success rule: 1 iff every non-skipped
    action succeeded. A discarded plan has all actions skipped and an
    empty twist stream; the session logs its task success separately.
    """

    per_action: list[ActionOutcome] = field(default_factory=list)
    final_pose: tuple[float, float, float] = (0.0, 0.0, 0.0)
    snapshots: list[str] = field(default_factory=list)
    responses: list[str] = field(default_factory=list)
    twists: list[TwistCommand] = field(default_factory=list)
    executed: bool = False
    first_twist_time: Optional[float] = None

    @property
    def s_n(self) -> int:
        return int(
            all(
                outcome.status is ActionStatus.SUCCESS
                for outcome in self.per_action
                if outcome.status is not ActionStatus.SKIPPED
            )
        )

    def to_json(self) -> dict:
        return {
            "per_action": [
                {
                    "action": type(o.primitive).__name__,
                    "started_at": o.started_at,
                    "ended_at": o.ended_at,
                    "status": o.status.value,
                    "detail": o.detail,
                }
                for o in self.per_action
            ],
            "final_pose": list(self.final_pose),
            "snapshots": list(self.snapshots),
            "responses": list(self.responses),
            "twist_count": len(self.twists),
            "executed": self.executed,
            "success": self.s_n,
        }


Target = Union[tuple[float, float], tuple[float, float, float], str]


@dataclass(frozen=True)
class GoalSpec:
    """A navigation target with its acceptance tolerance."""

    target: tuple[float, float, float]
    tolerance: float = DEFAULT_GOAL_TOLERANCE_M

    def __post_init__(self) -> None:
        if self.tolerance <= 0:
            raise ValueError("goal tolerance must be > 0")


def goal_reached(pose, goal: GoalSpec) -> bool:
    """Planar Euclidean check against the goal tolerance."""
    return distance_between(pose, goal.target) <= goal.tolerance + 1e-12


def travel_time_s(pose, goal: tuple[float, float, float], speed_mps: float) -> float:
    """Straight-line travel time estimate used by timing conditions."""
    if speed_mps <= 0:
        return math.inf
    return distance_between(pose, goal) / speed_mps
