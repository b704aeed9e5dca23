"""Plan execution against the simulator, with query handling and guards.

Approval is enforced here: a plan that requires confirmation and was not
approved raises before a single twist is issued. MoveLinear actions carry
an implicit obstacle guard (pause under 0.5 m clearance, resume on clear).
Guard conditions are evaluated against live perception and odometry when
the guarded action starts.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from babelbot.engine.types import (
    ActionPrimitive,
    CaptureImage,
    Condition,
    DescribeSurroundings,
    DetectionAbove,
    ElapsedOver,
    Guarded,
    MoveLinear,
    NavigateToCoords,
    NavigateToNamed,
    NavigateToObject,
    ObstacleCloser,
    ActionPlan,
    ReportPose,
    TravelTimeOver,
    Wait,
)
from babelbot.executor.compile import UnreachableObject, compile_primitive, rotate_then_drive
from babelbot.executor.responses import ResponseCatalog
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
from babelbot.engine.prompt import compass_facing
from babelbot.langid import LanguageTag
from babelbot.perception.geometry import camera_extrinsics
from babelbot.perception.kalman import TrackRegistry
from babelbot.perception.pipeline import process_frame, select_candidate
from babelbot.perception.scorer import LexicalScorer, SemanticScorer
from babelbot.perception.types import NoCandidates, PerceptionConfig, ScoredCandidate
from babelbot.simulator.planner import NoPath, plan_path
from babelbot.simulator.robot import TwistCommand
from babelbot.simulator.scene import CAMERA_HEIGHT_M
from babelbot.simulator.world import Simulator

OBJECT_STANDOFF_M = 0.45


@dataclass
class ExecutionEnv:
    """Everything a plan run needs besides the plan itself."""

    sim: Simulator
    catalog: ResponseCatalog
    language: LanguageTag
    perception_cfg: PerceptionConfig = field(default_factory=PerceptionConfig)
    registry: TrackRegistry = field(default_factory=TrackRegistry)
    scorer: SemanticScorer = field(default_factory=LexicalScorer)
    label_vocab: Optional[tuple[str, ...]] = None
    speed_ceiling: float = 1.0
    snapshot_dir: Optional[Path] = None
    session_id: str = "local"
    turn_index: int = 0
    telemetry: Optional[Callable[[dict], None]] = None
    abort_event: Optional[threading.Event] = None
    obstacle_pause_m: float = 0.5
    pause_timeout_s: float = 30.0

    def emit(self, kind: str, **fields) -> None:
        if self.telemetry is None:
            return
        event = {"kind": kind, "t": self.sim.time, "lang": self.language.code}
        event.update(fields)
        self.telemetry(event)

    def aborted(self) -> bool:
        return self.abort_event is not None and self.abort_event.is_set()


class _Run:
    def __init__(self, env: ExecutionEnv, plan: ActionPlan, command_text: str):
        self.env = env
        self.plan = plan
        self.command_text = command_text
        self.trace = ExecutionTrace(executed=True)
        self.plan_start = env.sim.time
        self.snapshot_index = 0

    # --- perception helpers --------------------------------------------

    def _candidates(self) -> list[ScoredCandidate]:
        env = self.env
        state = env.sim.state
        frame = env.sim.render(env.label_vocab)
        extr = camera_extrinsics(state.x, state.y, state.theta, CAMERA_HEIGHT_M)
        return process_frame(
            frame,
            env.perception_cfg,
            env.registry,
            extrinsics=extr,
            timestamp=env.sim.time,
        )

    def _best_per_mask(self, candidates: list[ScoredCandidate]) -> list[ScoredCandidate]:
        best: dict[int, ScoredCandidate] = {}
        for cand in candidates:
            cur = best.get(cand.mask.id)
            if cur is None or cand.p_prime > cur.p_prime:
                best[cand.mask.id] = cand
        return [best[mid] for mid in sorted(best)]

    # --- condition evaluation -------------------------------------------

    def _evaluate(self, condition: Condition) -> bool:
        env = self.env
        if isinstance(condition, DetectionAbove):
            candidates = self._best_per_mask(self._candidates())
            if condition.label:
                candidates = [c for c in candidates if c.label == condition.label]
            return any(c.p_prime >= condition.prob for c in candidates)
        if isinstance(condition, ObstacleCloser):
            return env.sim.obstacle_ahead(max_range=condition.distance_m + 1.0) < condition.distance_m
        if isinstance(condition, ElapsedOver):
            return (env.sim.time - self.plan_start) > condition.seconds
        if isinstance(condition, TravelTimeOver):
            return travel_time_s(env.sim.state.pose, condition.goal, condition.speed_mps) > condition.seconds
        raise TypeError(f"unknown condition: {condition!r}")

    # --- twist execution --------------------------------------------------

    def _run_twists(self, twists: list[TwistCommand], pause_guard: bool) -> tuple[ActionStatus, str]:
        env = self.env
        for twist in twists:
            self.trace.twists.append(twist)
            if self.trace.first_twist_time is None:
                self.trace.first_twist_time = env.sim.time
            remaining = twist.duration
            paused = 0.0
            while remaining > 1e-9:
                if env.aborted():
                    return ActionStatus.ABORTED, "abort requested"
                dt = min(env.sim.dt, remaining)
                if (
                    pause_guard
                    and twist.v > 0
                    and env.sim.obstacle_ahead(env.obstacle_pause_m + 1.0) < env.obstacle_pause_m
                ):
                    env.sim.tick(0.0, 0.0, dt)
                    paused += dt
                    if paused > env.pause_timeout_s:
                        return ActionStatus.FAILED, "blocked by obstacle"
                    continue
                state = env.sim.tick(twist.v, twist.omega, dt)
                env.emit(
                    "pose",
                    pose={"x": state.x, "y": state.y, "theta": state.theta},
                )
                if state.collided:
                    return ActionStatus.FAILED, "collision"
                remaining -= dt
        return ActionStatus.SUCCESS, ""

    # --- queries ---------------------------------------------------------

    def _handle_query(self, primitive: ActionPrimitive) -> str:
        env = self.env
        lang = env.language.code
        state = env.sim.state

        if isinstance(primitive, ReportPose):
            rendered = env.catalog.render(
                "pose_report",
                lang,
                x=round(state.x, 3),
                y=round(state.y, 3),
                yaw=round(state.yaw_deg, 1),
                compass=compass_facing(state.yaw_deg),
            )
            return rendered.text

        if isinstance(primitive, DescribeSurroundings):
            visible = self._best_per_mask(self._candidates())
            if not visible:
                return env.catalog.render("surroundings_none", lang).text
            items = ", ".join(
                f"{c.label} (p={c.p_prime:.2f}, "
                f"{math.hypot(c.point_base[0] - state.x, c.point_base[1] - state.y):.1f} m)"
                for c in visible
            )
            return env.catalog.render("surroundings_list", lang, items=items).text

        if isinstance(primitive, CaptureImage):
            ref = f"{env.session_id}/{env.turn_index}/{self.snapshot_index}.png"
            self.snapshot_index += 1
            if env.snapshot_dir is not None:
                draw_snapshot(env.sim, Path(env.snapshot_dir) / ref)
            self.trace.snapshots.append(ref)
            return env.catalog.render("snapshot_taken", lang, ref=ref).text

        raise TypeError(f"not a query primitive: {primitive!r}")

    # --- movement actions --------------------------------------------------

    def _resolve_object(self, primitive: NavigateToObject) -> tuple[float, float]:
        # a mask counts as a detection of its argmax label only; navigating
        # to a label the scene never detected must fail, not pick a stray
        # low-probability (mask, label) pair
        candidates = self._best_per_mask(self._candidates())
        if primitive.selector == "named" and primitive.label:
            candidates = [c for c in candidates if c.label == primitive.label]
        chosen = select_candidate(
            candidates,
            self.command_text or (primitive.label or ""),
            self.env.perception_cfg,
            self.env.scorer,
            self.env.language.code,
        )
        state = self.env.sim.state
        ox, oy = float(chosen.track.position[0]), float(chosen.track.position[1])
        dx, dy = state.x - ox, state.y - oy
        dist = math.hypot(dx, dy)
        if dist <= OBJECT_STANDOFF_M:
            return state.x, state.y
        scale = OBJECT_STANDOFF_M / dist
        return ox + dx * scale, oy + dy * scale

    def _run_movement(self, primitive: ActionPrimitive) -> tuple[ActionStatus, str]:
        env = self.env
        state = env.sim.state
        goal: Optional[GoalSpec] = None

        try:
            if isinstance(primitive, NavigateToObject):
                target = self._resolve_object(primitive)
                goal = GoalSpec(target=(target[0], target[1], 0.0))
                if goal_reached(state.pose, goal):
                    return ActionStatus.SUCCESS, "already at object"
                speed = min(0.5, env.speed_ceiling)
                waypoints = plan_path(env.sim.grid, (state.x, state.y), target, env.sim.robot_radius)
                twists = rotate_then_drive(state, waypoints, speed)
            else:
                twists = compile_primitive(
                    primitive, state, env.sim.grid, speed_ceiling=env.speed_ceiling
                )
                if isinstance(primitive, NavigateToCoords):
                    goal = GoalSpec(target=(primitive.x, primitive.y, primitive.z))
                elif isinstance(primitive, NavigateToNamed):
                    dest = env.sim.destination(primitive.destination)
                    if dest is None:
                        return ActionStatus.FAILED, f"unknown destination {primitive.destination!r}"
                    goal = GoalSpec(target=dest)
                elif isinstance(primitive, MoveLinear):
                    sign = 1.0 if primitive.direction == "fwd" else -1.0
                    goal = GoalSpec(
                        target=(
                            state.x + sign * primitive.distance_m * math.cos(state.theta),
                            state.y + sign * primitive.distance_m * math.sin(state.theta),
                            0.0,
                        )
                    )
        except (NoPath, UnreachableObject, NoCandidates) as exc:
            return ActionStatus.FAILED, str(exc)

        pause_guard = isinstance(primitive, MoveLinear)
        status, detail = self._run_twists(twists, pause_guard)
        if status is not ActionStatus.SUCCESS:
            return status, detail
        if goal is not None and not goal_reached(env.sim.state.pose, goal):
            return ActionStatus.FAILED, "missed goal tolerance"
        return ActionStatus.SUCCESS, detail

    # --- one primitive -----------------------------------------------------

    def _run_primitive(self, primitive: ActionPrimitive) -> tuple[ActionStatus, str]:
        env = self.env

        if isinstance(primitive, Guarded):
            taken = self._evaluate(primitive.condition)
            branch = primitive.then if taken else primitive.otherwise
            if branch is None:
                return ActionStatus.SUCCESS, "condition false, nothing to do"
            status, detail = self._run_primitive(branch)
            side = "then" if taken else "else"
            return status, f"{side}: {detail}" if detail else f"{side} branch"

        if isinstance(primitive, (ReportPose, DescribeSurroundings, CaptureImage)):
            text = self._handle_query(primitive)
            self.trace.responses.append(text)
            env.emit("message", message=text)
            return ActionStatus.SUCCESS, text

        if isinstance(primitive, Wait):
            return self._run_twists(
                [TwistCommand(v=0.0, omega=0.0, duration=primitive.seconds)], False
            )

        return self._run_movement(primitive)

    # --- plan loop ----------------------------------------------------------

    def run(self) -> ExecutionTrace:
        env = self.env
        aborted = False
        for index, primitive in enumerate(self.plan.actions):
            if aborted:
                self.trace.per_action.append(
                    ActionOutcome(primitive, env.sim.time, env.sim.time, ActionStatus.SKIPPED, "after abort")
                )
                continue
            started = env.sim.time
            if env.aborted():
                status, detail = ActionStatus.ABORTED, "abort requested"
            else:
                status, detail = self._run_primitive(primitive)
            self.trace.per_action.append(
                ActionOutcome(primitive, started, env.sim.time, status, detail)
            )
            env.emit("status", action_index=index, status=status.value, message=detail)
            if status is ActionStatus.ABORTED:
                aborted = True
        self.trace.final_pose = env.sim.state.pose
        return self.trace


def execute_plan(
    plan: ActionPlan,
    env: ExecutionEnv,
    command_text: str = "",
    approved: bool = False,
) -> ExecutionTrace:
    """Run an approved plan; raises NotApproved for unconfirmed multistep plans."""
    if plan.requires_confirmation and not approved:
        raise NotApproved("multistep plan requires a positive confirmation first")
    return _Run(env, plan, command_text).run()


def skipped_trace(plan: ActionPlan, env: ExecutionEnv) -> ExecutionTrace:
    """Trace for a discarded plan: every action skipped, no twists emitted."""
    now = env.sim.time
    trace = ExecutionTrace(executed=False, final_pose=env.sim.state.pose)
    for primitive in plan.actions:
        trace.per_action.append(
            ActionOutcome(primitive, now, now, ActionStatus.SKIPPED, "plan discarded")
        )
    return trace


def handle_query(primitive: ActionPrimitive, env: ExecutionEnv) -> str:
    """Answer a single query primitive outside of a plan run."""
    return _Run(env, ActionPlan((), env.language, False), "")._handle_query(primitive)
