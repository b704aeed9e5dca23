"""Occupancy-grid world, unicycle kinematics, A* planning, synthetic sensing."""

from babelbot.simulator.grid import MapError, OccupancyGrid, load_map, save_map
from babelbot.simulator.robot import (
    DEFAULT_ROBOT_RADIUS,
    MAX_ANGULAR_SPEED_RAD,
    MAX_LINEAR_SPEED,
    RobotState,
    TwistCommand,
    distance_between,
    normalize_angle,
    step,
)
from babelbot.simulator.planner import (
    NoPath,
    astar_cells,
    line_of_sight,
    octile,
    plan_path,
    smooth_cells,
)
from babelbot.simulator.scene import (
    CAMERA_HEIGHT_M,
    DEFAULT_INTRINSICS,
    SceneObject,
    degradation_eta,
    label_affinity,
    render_observation,
    wall_blocked,
)
from babelbot.simulator.world import DEFAULT_DT, Simulator

__all__ = [name for name in dir() if not name.startswith("_")]
