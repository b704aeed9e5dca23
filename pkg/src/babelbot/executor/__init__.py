"""Action-to-twist compilation and plan execution with success accounting."""

from babelbot.executor.compile import (
    DEFAULT_TURN_RATE_RAD,
    UnreachableObject,
    compile_primitive,
    rotate_then_drive,
)
from babelbot.executor.executor import (
    OBJECT_STANDOFF_M,
    ExecutionEnv,
    execute_plan,
    handle_query,
    skipped_trace,
)
from babelbot.executor.responses import FALLBACK_LANGUAGE, RenderedResponse, ResponseCatalog
from babelbot.executor.snapshots import draw_snapshot
from babelbot.executor.trace import (
    ActionOutcome,
    ActionStatus,
    ExecutionTrace,
    GoalSpec,
    NotApproved,
    goal_reached,
    travel_time_s,
)

__all__ = [name for name in dir() if not name.startswith("_")]
