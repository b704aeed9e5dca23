"""Compile action primitives into twist schedules."""

from __future__ import annotations

import math

from babelbot.engine.types import (
    ActionPrimitive,
    MoveLinear,
    NavigateToCoords,
    NavigateToNamed,
    NavigateToObject,
    PatternMove,
    Rotate,
    Wait,
)
from babelbot.simulator.grid import OccupancyGrid
from babelbot.simulator.planner import plan_path
from babelbot.simulator.robot import (
    DEFAULT_ROBOT_RADIUS,
    MAX_ANGULAR_SPEED_RAD,
    RobotState,
    TwistCommand,
    normalize_angle,
)

DEFAULT_TURN_RATE_RAD = math.radians(45.0)
MIN_SEGMENT_M = 1e-6
MIN_TURN_RAD = 1e-9


class UnreachableObject(Exception):
    """Object navigation was requested without a live resolved track."""


def _rotation_twist(delta_rad: float, rate_rad: float = DEFAULT_TURN_RATE_RAD) -> TwistCommand:
    sign = 1.0 if delta_rad >= 0 else -1.0
    return TwistCommand(v=0.0, omega=sign * rate_rad, duration=abs(delta_rad) / rate_rad)


def rotate_then_drive(
    start: RobotState,
    waypoints: list[tuple[float, float]],
    speed: float,
    turn_rate_rad: float = DEFAULT_TURN_RATE_RAD,
) -> list[TwistCommand]:
    """Per-segment rotate-in-place then straight-drive twists."""
    twists: list[TwistCommand] = []
    x, y, theta = start.x, start.y, start.theta
    for wx, wy in waypoints:
        dist = math.hypot(wx - x, wy - y)
        if dist < MIN_SEGMENT_M:
            continue
        heading = math.atan2(wy - y, wx - x)
        delta = normalize_angle(heading - theta)
        if abs(delta) > MIN_TURN_RAD:
            twists.append(_rotation_twist(delta, turn_rate_rad))
        twists.append(TwistCommand(v=speed, omega=0.0, duration=dist / speed))
        x, y, theta = wx, wy, heading
    return twists


def compile_primitive(
    primitive: ActionPrimitive,
    state: RobotState,
    grid: OccupancyGrid,
    speed_ceiling: float = 1.0,
    object_pose: tuple[float, float] | None = None,
    robot_radius: float = DEFAULT_ROBOT_RADIUS,
) -> list[TwistCommand]:
    """Twist schedule for one primitive from the given state.

    Query primitives compile to an empty schedule. Pattern speeds are
    reduced when the implied turn rate would exceed the angular limit,
    preserving the commanded geometry.
    """
    if isinstance(primitive, MoveLinear):
        speed = min(primitive.speed_mps, speed_ceiling)
        sign = 1.0 if primitive.direction == "fwd" else -1.0
        return [TwistCommand(v=sign * speed, omega=0.0, duration=primitive.distance_m / speed)]

    if isinstance(primitive, Rotate):
        omega = math.radians(primitive.angular_speed_degps)
        sign = 1.0 if primitive.direction == "left" else -1.0
        return [
            TwistCommand(
                v=0.0, omega=sign * omega, duration=math.radians(primitive.angle_deg) / omega
            )
        ]

    if isinstance(primitive, PatternMove):
        return _compile_pattern(primitive, min(primitive.speed_mps, speed_ceiling))

    if isinstance(primitive, (NavigateToCoords, NavigateToNamed)):
        if isinstance(primitive, NavigateToNamed):
            dest = grid.named_destinations.get(primitive.destination.strip().lower())
            if dest is None:
                raise UnreachableObject(f"unknown destination: {primitive.destination!r}")
            goal = (dest[0], dest[1])
        else:
            goal = (primitive.x, primitive.y)
        speed = min(primitive.speed_mps, speed_ceiling)
        waypoints = plan_path(grid, (state.x, state.y), goal, robot_radius)
        return rotate_then_drive(state, waypoints, speed)

    if isinstance(primitive, NavigateToObject):
        if object_pose is None:
            raise UnreachableObject(f"no live track for object: {primitive.label!r}")
        speed = min(0.5, speed_ceiling)
        waypoints = plan_path(grid, (state.x, state.y), object_pose, robot_radius)
        return rotate_then_drive(state, waypoints, speed)

    if isinstance(primitive, Wait):
        return [TwistCommand(v=0.0, omega=0.0, duration=primitive.seconds)]

    return []  # queries and guards carry no twists of their own


def _compile_pattern(primitive: PatternMove, speed: float) -> list[TwistCommand]:
    p = primitive.params

    if primitive.shape == "circle":
        radius = p["radius_m"]
        v = min(speed, radius * MAX_ANGULAR_SPEED_RAD)
        return [TwistCommand(v=v, omega=v / radius, duration=2.0 * math.pi * radius / v)]

    if primitive.shape == "arc":
        radius = p["radius_m"]
        angle = math.radians(p["angle_deg"])
        v = min(speed, radius * MAX_ANGULAR_SPEED_RAD)
        return [TwistCommand(v=v, omega=v / radius, duration=angle * radius / v)]

    if primitive.shape == "rectangle":
        length, breadth = p["length_m"], p["breadth_m"]
        twists: list[TwistCommand] = []
        for side in (length, breadth, length, breadth):
            twists.append(TwistCommand(v=speed, omega=0.0, duration=side / speed))
            twists.append(_rotation_twist(math.pi / 2.0))
        return twists

    if primitive.shape == "lshape":
        twists = [
            TwistCommand(v=speed, omega=0.0, duration=p["horizontal_m"] / speed),
            _rotation_twist(math.pi / 2.0),
            TwistCommand(v=speed, omega=0.0, duration=p["vertical_m"] / speed),
        ]
        return twists

    raise ValueError(f"unknown pattern shape: {primitive.shape}")
