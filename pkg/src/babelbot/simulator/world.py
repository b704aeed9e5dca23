"""The Simulator: one robot in one grid world, driven tick by tick."""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from babelbot.perception.types import CameraIntrinsics, PerceptionFrame
from babelbot.simulator.grid import OccupancyGrid, load_map
from babelbot.simulator.robot import (
    DEFAULT_ROBOT_RADIUS,
    RobotState,
    TwistCommand,
    step,
)
from babelbot.simulator.scene import DEFAULT_INTRINSICS, SceneObject, render_observation

DEFAULT_DT = 0.05


class Simulator:
    """Owns the grid, scene, robot state, and simulation clock.

    One instance per session; a single writer advances the state while
    read-only pose snapshots may be taken at any time.
    """

    def __init__(
        self,
        grid: OccupancyGrid,
        scene: list[SceneObject] | None = None,
        state: RobotState | None = None,
        intrinsics: CameraIntrinsics = DEFAULT_INTRINSICS,
        dt: float = DEFAULT_DT,
        seed: int = 0,
        robot_radius: float = DEFAULT_ROBOT_RADIUS,
        pose_noise_sigma: float = 0.0,
    ):
        self.grid = grid
        self.scene = list(scene or [])
        self.intrinsics = intrinsics
        self.dt = dt
        self.seed = seed
        self.robot_radius = robot_radius
        # default 0: ground-truth localization; > 0 re-enables a seeded
        # random-walk pose perturbation standing in for estimator noise
        self.pose_noise_sigma = pose_noise_sigma
        self._noise_rng = np.random.default_rng(seed)
        self.time = 0.0
        self.state = state or self._default_spawn()
        self.trail: list[tuple[float, float, float]] = [self.state.pose]
        self._render_count = 0

    @classmethod
    def from_map_file(cls, path: Path, **kwargs) -> "Simulator":
        grid, raw_objects = load_map(path)
        scene = [SceneObject(**obj) for obj in raw_objects]
        return cls(grid=grid, scene=scene, **kwargs)

    def _default_spawn(self) -> RobotState:
        start = self.grid.named_destinations.get("start")
        if start is not None:
            return RobotState(x=start[0], y=start[1])
        free = np.argwhere(~self.grid.inflated(self.robot_radius))
        if len(free) == 0:
            raise ValueError("map has no free cell to spawn in")
        row, col = free[len(free) // 2]
        x, y = self.grid.cell_to_world(int(row), int(col))
        return RobotState(x=x, y=y)

    # --- kinematics ---------------------------------------------------

    def tick(self, v: float, omega: float, dt: float | None = None) -> RobotState:
        """Advance one integration step and record the trail."""
        dt = self.dt if dt is None else dt
        twist = TwistCommand(v=v, omega=omega, duration=dt)
        self.state = step(self.state, twist, dt, self.grid, self.robot_radius)
        if self.pose_noise_sigma > 0.0 and not self.state.collided:
            self.state = self._perturb(self.state, dt)
        self.time += dt
        self.trail.append(self.state.pose)
        return self.state

    def _perturb(self, state: RobotState, dt: float) -> RobotState:
        scale = self.pose_noise_sigma * math.sqrt(dt)
        nx = state.x + float(self._noise_rng.normal(0.0, scale))
        ny = state.y + float(self._noise_rng.normal(0.0, scale))
        if self.grid.occupied(nx, ny, inflation=self.robot_radius):
            return state  # never jitter into an obstacle
        return RobotState(
            x=nx,
            y=ny,
            theta=state.theta,
            v=state.v,
            omega=state.omega,
            odom_distance=state.odom_distance,
            collided=state.collided,
        )

    def teleport(self, x: float, y: float, theta: float = 0.0) -> None:
        self.state = RobotState(x=x, y=y, theta=theta, odom_distance=self.state.odom_distance)
        self.trail.append(self.state.pose)

    # --- sensing ------------------------------------------------------

    def render(self, label_vocab: tuple[str, ...] | None = None) -> PerceptionFrame:
        """Synthetic frame; deterministic for a fixed simulator seed."""
        vocab = label_vocab or tuple(sorted({obj.label for obj in self.scene})) or ("object",)
        frame = render_observation(
            state=self.state,
            scene=self.scene,
            intrinsics=self.intrinsics,
            label_vocab=vocab,
            grid=self.grid,
            seed=self.seed,
        )
        self._render_count += 1
        return frame

    def obstacle_ahead(self, max_range: float = 3.0) -> float:
        """Distance to the nearest inflated-occupied cell straight ahead."""
        step_len = self.grid.resolution * 0.5
        distance = step_len
        while distance <= max_range:
            x = self.state.x + distance * math.cos(self.state.theta)
            y = self.state.y + distance * math.sin(self.state.theta)
            if self.grid.occupied(x, y, inflation=self.robot_radius):
                return distance
            distance += step_len
        return math.inf

    def destination(self, name: str) -> tuple[float, float, float] | None:
        return self.grid.named_destinations.get(name.strip().lower())
