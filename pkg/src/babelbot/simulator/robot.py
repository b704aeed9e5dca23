"""Differential-drive (unicycle) state and exact arc integration."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from babelbot.simulator.grid import OccupancyGrid

MAX_LINEAR_SPEED = 1.0
MAX_ANGULAR_SPEED_RAD = math.radians(90.0)
DEFAULT_ROBOT_RADIUS = 0.3
STRAIGHT_OMEGA_EPS = 1e-9


def normalize_angle(theta: float) -> float:
    """Wrap into (-pi, pi]."""
    wrapped = math.fmod(theta + math.pi, 2.0 * math.pi)
    if wrapped <= 0.0:
        wrapped += 2.0 * math.pi
    return wrapped - math.pi


@dataclass(frozen=True)
class TwistCommand:
    v: float  # m/s
    omega: float  # rad/s
    duration: float  # s

    def __post_init__(self) -> None:
        if self.duration <= 0:
            raise ValueError(f"twist duration must be > 0, got {self.duration}")
        if abs(self.v) > MAX_LINEAR_SPEED + 1e-9:
            raise ValueError(f"|v| exceeds {MAX_LINEAR_SPEED} m/s: {self.v}")
        if abs(self.omega) > MAX_ANGULAR_SPEED_RAD + 1e-9:
            raise ValueError(f"|omega| exceeds {MAX_ANGULAR_SPEED_RAD:.4f} rad/s: {self.omega}")


@dataclass(frozen=True)
class RobotState:
    x: float = 0.0
    y: float = 0.0
    theta: float = 0.0  # rad, normalized (-pi, pi]
    v: float = 0.0
    omega: float = 0.0
    odom_distance: float = 0.0
    collided: bool = False

    @property
    def pose(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.theta)

    @property
    def yaw_deg(self) -> float:
        return math.degrees(self.theta)


def step(
    state: RobotState,
    twist: TwistCommand,
    dt: float,
    grid: OccupancyGrid | None = None,
    robot_radius: float = DEFAULT_ROBOT_RADIUS,
) -> RobotState:
    """Advance one tick with the exact arc (ICC) update.

    On collision against the inflated grid the pose freezes and the
    collision flag is set; collision is state, not an error.
    """
    if dt <= 0:
        raise ValueError(f"dt must be > 0, got {dt}")
    v, omega = twist.v, twist.omega

    if abs(omega) < STRAIGHT_OMEGA_EPS:
        nx = state.x + v * dt * math.cos(state.theta)
        ny = state.y + v * dt * math.sin(state.theta)
        ntheta = state.theta
    else:
        radius = v / omega
        ntheta = state.theta + omega * dt
        nx = state.x + radius * (math.sin(ntheta) - math.sin(state.theta))
        ny = state.y - radius * (math.cos(ntheta) - math.cos(state.theta))

    if grid is not None and grid.occupied(nx, ny, inflation=robot_radius):
        return replace(state, v=0.0, omega=0.0, collided=True)

    return RobotState(
        x=nx,
        y=ny,
        theta=normalize_angle(ntheta),
        v=v,
        omega=omega,
        odom_distance=state.odom_distance + abs(v) * dt,
        collided=False,
    )


def distance_between(a, b) -> float:
    """Planar Euclidean distance; accepts poses, (x, y) or (x, y, z)."""
    ax, ay = float(a[0]), float(a[1])
    bx, by = float(b[0]), float(b[1])
    return math.hypot(ax - bx, ay - by)
