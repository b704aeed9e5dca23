import math
import threading
from pathlib import Path

import pytest

from babelbot.engine.parse import parse_action_lines
from babelbot.engine.types import (
    CaptureImage,
    DescribeSurroundings,
    DetectionAbove,
    Guarded,
    MoveLinear,
    NavigateToCoords,
    NavigateToNamed,
    NavigateToObject,
    PatternMove,
    ReportPose,
    Rotate,
    TravelTimeOver,
    Wait,
)
from babelbot.executor.compile import UnreachableObject, compile_primitive
from babelbot.executor.executor import ExecutionEnv, execute_plan, skipped_trace
from babelbot.executor.trace import (
    ActionStatus,
    GoalSpec,
    NotApproved,
    goal_reached,
)
from babelbot.langid import LanguageTag
from babelbot.perception.scorer import LexicalScorer
from babelbot.simulator.robot import RobotState
from babelbot.simulator.world import Simulator

EN = LanguageTag("en")


def make_env(lab_sim, catalog, **kwargs) -> ExecutionEnv:
    return ExecutionEnv(
        sim=lab_sim,
        catalog=catalog,
        language=EN,
        scorer=LexicalScorer.bundled(),
        **kwargs,
    )


def plan_of(*lines):
    return parse_action_lines([f"Action {k}: {line}." for k, line in enumerate(lines, 1)])


# --- compile ------------------------------------------------------------------


def test_compile_move_linear(lab_sim):
    twists = compile_primitive(MoveLinear("fwd", 2.0, 0.2), lab_sim.state, lab_sim.grid)
    assert len(twists) == 1
    assert twists[0].v == pytest.approx(0.2)
    assert twists[0].omega == 0.0
    assert twists[0].duration == pytest.approx(10.0)


def test_compile_circle_kinematic_identity(lab_sim):
    twists = compile_primitive(
        PatternMove("circle", {"radius_m": 1.0}, 1.0), lab_sim.state, lab_sim.grid
    )
    assert len(twists) == 1
    assert twists[0].omega == pytest.approx(1.0)
    assert twists[0].duration == pytest.approx(2.0 * math.pi)


def test_compile_rectangle_segments(lab_sim):
    twists = compile_primitive(
        PatternMove("rectangle", {"length_m": 3.0, "breadth_m": 2.0}, 0.5),
        lab_sim.state,
        lab_sim.grid,
    )
    assert len(twists) == 8
    drive_time = sum(t.duration for t in twists if t.v > 0)
    assert drive_time == pytest.approx((2 * 3.0 + 2 * 2.0) / 0.5)


def test_compile_rotation_converts_degrees(lab_sim):
    twists = compile_primitive(Rotate("left", 90.0, 30.0), lab_sim.state, lab_sim.grid)
    assert twists[0].omega == pytest.approx(math.radians(30.0))
    assert twists[0].duration == pytest.approx(3.0)
    right = compile_primitive(Rotate("right", 90.0, 30.0), lab_sim.state, lab_sim.grid)
    assert right[0].omega == pytest.approx(-math.radians(30.0))


def test_compile_object_without_pose_unreachable(lab_sim):
    with pytest.raises(UnreachableObject):
        compile_primitive(NavigateToObject("chair", "named"), lab_sim.state, lab_sim.grid)


def test_compile_respects_speed_ceiling(lab_sim):
    twists = compile_primitive(
        MoveLinear("fwd", 2.0, 1.0), lab_sim.state, lab_sim.grid, speed_ceiling=0.5
    )
    assert twists[0].v == pytest.approx(0.5)


def test_all_twists_within_limits(lab_sim):
    primitives = [
        MoveLinear("fwd", 3.0, 1.0),
        Rotate("right", 180.0, 90.0),
        PatternMove("circle", {"radius_m": 0.4}, 1.0),  # would imply omega > limit
        PatternMove("lshape", {"horizontal_m": 2.0, "vertical_m": 1.0}, 0.8),
    ]
    for primitive in primitives:
        for twist in compile_primitive(primitive, lab_sim.state, lab_sim.grid):
            assert abs(twist.v) <= 1.0 + 1e-9
            assert abs(twist.omega) <= math.radians(90.0) + 1e-9


# --- execution ----------------------------------------------------------------


def test_single_move_executes_to_tolerance(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    plan = plan_of("Move forward 2 m at 0.2 m/s")
    trace = execute_plan(plan, env, approved=False)
    assert trace.s_n == 1
    assert trace.per_action[0].status is ActionStatus.SUCCESS
    assert math.hypot(lab_sim.state.x - 4.0, lab_sim.state.y - 1.0) <= 0.2


def test_multistep_without_approval_refused(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    plan = plan_of("Move forward 2 m at 0.2 m/s", "Turn right 90 deg at 30 deg/s")
    assert plan.requires_confirmation
    with pytest.raises(NotApproved):
        execute_plan(plan, env, approved=False)
    assert lab_sim.state.pose == (2.0, 1.0, 0.0)  # robot never moved


def test_rejected_plan_trace_is_all_skipped(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    plan = plan_of("Move forward 2 m at 0.2 m/s", "Turn right 90 deg at 30 deg/s")
    trace = skipped_trace(plan, env)
    assert not trace.executed
    assert trace.twists == []
    assert all(o.status is ActionStatus.SKIPPED for o in trace.per_action)
    assert len(trace.per_action) == len(plan.actions)


def test_circle_closure(lab_sim, catalog):
    lab_sim.teleport(4.0, 4.0, 0.0)
    env = make_env(lab_sim, catalog)
    plan = plan_of("Move in a circle of radius 1 m at 1 m/s")
    trace = execute_plan(plan, env, approved=False)
    assert trace.s_n == 1
    assert math.hypot(lab_sim.state.x - 4.0, lab_sim.state.y - 4.0) < 1e-6


def test_navigation_reaches_named_destination(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    plan = plan_of("Navigate to the kitchen at 0.5 m/s")
    trace = execute_plan(plan, env, approved=False)
    assert trace.s_n == 1
    dest = lab_sim.grid.named_destinations["kitchen"]
    assert math.hypot(lab_sim.state.x - dest[0], lab_sim.state.y - dest[1]) <= 0.2


def test_unknown_destination_fails(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    plan = plan_of("Navigate to the attic at 0.5 m/s")
    trace = execute_plan(plan, env, approved=False)
    assert trace.per_action[0].status is ActionStatus.FAILED
    assert trace.s_n == 0


def test_object_navigation_approaches_chair(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    plan = plan_of("Navigate to the detected chair")
    trace = execute_plan(plan, env, command_text="go to the chair", approved=False)
    assert trace.s_n == 1
    # chair is at (4, 1); robot stops at the stand-off ring around it
    assert math.hypot(lab_sim.state.x - 4.0, lab_sim.state.y - 1.0) < 0.8


def test_object_navigation_missing_object_fails(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    plan = plan_of("Navigate to the detected box")  # box is sealed off
    trace = execute_plan(plan, env, command_text="go to the box", approved=False)
    assert trace.per_action[0].status is ActionStatus.FAILED
    assert trace.s_n == 0


def test_report_pose_response(lab_sim, catalog):
    lab_sim.teleport(2.0, 3.0, math.pi / 2.0)
    env = make_env(lab_sim, catalog)
    plan = plan_of("Report pose")
    trace = execute_plan(plan, env, approved=False)
    assert trace.s_n == 1
    assert "x = 2, y = 3" in trace.responses[0]
    assert "90" in trace.responses[0]


def test_describe_surroundings_lists_objects(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    plan = plan_of("Describe surroundings")
    trace = execute_plan(plan, env, approved=False)
    assert trace.s_n == 1
    assert "chair" in trace.responses[0]


def test_describe_surroundings_empty_view(lab_sim, catalog):
    lab_sim.teleport(1.0, 7.0, math.pi)  # facing the west wall, nothing visible
    env = make_env(lab_sim, catalog)
    plan = plan_of("Describe surroundings")
    trace = execute_plan(plan, env, approved=False)
    assert "No objects" in trace.responses[0]


def test_capture_image_writes_snapshot(lab_sim, catalog, tmp_path):
    env = make_env(lab_sim, catalog, snapshot_dir=tmp_path, session_id="sess", turn_index=3)
    plan = plan_of("Capture image")
    trace = execute_plan(plan, env, approved=False)
    assert trace.snapshots == ["sess/3/0.png"]
    assert (tmp_path / "sess" / "3" / "0.png").exists()


def test_snapshot_reference_without_dir(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    trace = execute_plan(plan_of("Capture image"), env, approved=False)
    assert len(trace.snapshots) == 1


def test_guard_detection_takes_then_branch(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    plan = plan_of(
        "If you detect any object with probability >= 80%: Capture image "
        "else: Turn left 90 deg at 30 deg/s"
    )
    trace = execute_plan(plan, env, approved=False)
    assert trace.s_n == 1
    assert trace.per_action[0].detail.startswith("then")
    assert trace.snapshots  # the then-branch captured an image


def test_guard_detection_else_branch_when_no_detection(lab_sim, catalog):
    lab_sim.teleport(1.0, 7.0, math.pi)  # nothing in view
    env = make_env(lab_sim, catalog)
    plan = plan_of(
        "If you detect any object with probability >= 80%: Capture image "
        "else: Turn left 90 deg at 30 deg/s"
    )
    trace = execute_plan(plan, env, approved=False)
    assert trace.per_action[0].detail.startswith("else")
    assert trace.snapshots == []
    # left turn from pi wraps to -pi/2
    assert lab_sim.state.theta == pytest.approx(-math.pi / 2.0, abs=1e-6)


def test_guard_travel_time_condition(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    # from (2, 1) to (5, 5): 5 m at 1 m/s = 5 s, under the 10 s threshold
    plan = plan_of(
        "If travel time to x = 5, y = 5, z = 0 at 1 m/s exceeds 10 seconds: "
        "Report pose else: Navigate to the coordinates x = 5, y = 5, z = 0 at 1 m/s"
    )
    trace = execute_plan(plan, env, approved=False)
    assert trace.s_n == 1
    assert math.hypot(lab_sim.state.x - 5.0, lab_sim.state.y - 5.0) <= 0.2


def test_guard_without_else_is_noop(lab_sim, catalog):
    lab_sim.teleport(1.0, 7.0, math.pi)
    env = make_env(lab_sim, catalog)
    plan = plan_of("If you detect any object with probability >= 80%: Capture image")
    trace = execute_plan(plan, env, approved=False)
    assert trace.per_action[0].status is ActionStatus.SUCCESS
    assert trace.snapshots == []


def test_abort_mid_plan(lab_sim, catalog):
    abort = threading.Event()
    env = make_env(lab_sim, catalog, abort_event=abort)
    plan = plan_of(
        "Move forward 3 m at 0.2 m/s",
        "Turn right 90 deg at 30 deg/s",
        "Move forward 1 m at 0.2 m/s",
    )

    ticks = {"n": 0}
    original_tick = lab_sim.tick

    def counting_tick(v, omega, dt=None):
        ticks["n"] += 1
        if ticks["n"] == 10:
            abort.set()
        return original_tick(v, omega, dt)

    lab_sim.tick = counting_tick
    trace = execute_plan(plan, env, approved=True)
    statuses = [o.status for o in trace.per_action]
    assert statuses[0] is ActionStatus.ABORTED
    assert statuses[1] is ActionStatus.SKIPPED
    assert statuses[2] is ActionStatus.SKIPPED
    assert trace.s_n == 0


def test_trace_completeness(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    plan = plan_of(
        "Move forward 1 m at 0.2 m/s",
        "Report pose",
        "Wait 1 seconds",
    )
    trace = execute_plan(plan, env, approved=True)
    assert len(trace.per_action) == 3
    assert [type(o.primitive) for o in trace.per_action] == [MoveLinear, ReportPose, Wait]


def test_wait_advances_clock_without_motion(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    t0 = lab_sim.time
    pose0 = lab_sim.state.pose
    trace = execute_plan(plan_of("Wait 2 seconds"), env, approved=False)
    assert trace.s_n == 1
    assert lab_sim.time - t0 == pytest.approx(2.0, abs=1e-9)
    assert lab_sim.state.pose[:2] == pose0[:2]


def test_obstacle_pause_then_blocked(lab_sim, catalog):
    # drive straight at the east wall: the pause guard holds position and
    # eventually reports the action blocked, with no collision
    lab_sim.teleport(6.5, 4.0, 0.0)
    env = make_env(lab_sim, catalog, pause_timeout_s=2.0)
    trace = execute_plan(plan_of("Move forward 3 m at 0.5 m/s"), env, approved=False)
    assert trace.per_action[0].status is ActionStatus.FAILED
    assert "blocked" in trace.per_action[0].detail
    assert not lab_sim.state.collided


def test_goal_spec():
    goal = GoalSpec(target=(1.0, 1.0, 0.0))
    assert goal_reached((1.15, 1.0, 0.0), goal)  # 0.15 m off, within 0.2
    assert not goal_reached((1.25, 1.0, 0.0), goal)
    assert goal_reached((1.0, 1.0, 0.0), goal)
    with pytest.raises(ValueError):
        GoalSpec(target=(0, 0, 0), tolerance=0.0)


def test_speed_ceiling_respected_in_execution(lab_sim, catalog):
    env = make_env(lab_sim, catalog, speed_ceiling=0.25)
    trace = execute_plan(plan_of("Move forward 1 m at 1 m/s"), env, approved=False)
    assert trace.s_n == 1
    assert all(abs(t.v) <= 0.25 + 1e-9 for t in trace.twists if t.v)


def test_response_language_fallback(lab_sim, catalog):
    env = make_env(lab_sim, catalog)
    env.language = LanguageTag("sw")  # no Swahili catalog: English + flag
    rendered = catalog.render("pose_report", "sw", x=1, y=2, yaw=0, compass="east")
    assert rendered.fallback_used
    assert rendered.language == "en"
