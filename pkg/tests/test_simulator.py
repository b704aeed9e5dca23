import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from babelbot.simulator.grid import MapError, OccupancyGrid, load_map, save_map
from babelbot.simulator.planner import NoPath, astar_cells, plan_path, smooth_cells
from babelbot.simulator.robot import (
    RobotState,
    TwistCommand,
    distance_between,
    normalize_angle,
    step,
)
from babelbot.simulator.scene import SceneObject, render_observation, DEFAULT_INTRINSICS
from babelbot.simulator.world import Simulator

from oracles import dijkstra_cost


def open_grid(size=20, resolution=0.25):
    rows = ["#" * size] + ["#" + "." * (size - 2) + "#"] * (size - 2) + ["#" * size]
    return OccupancyGrid.from_rows(rows, resolution=resolution)


# --- kinematics --------------------------------------------------------------


def test_straight_step():
    state = step(RobotState(), TwistCommand(v=1.0, omega=0.0, duration=1.0), dt=1.0)
    assert (state.x, state.y, state.theta) == pytest.approx((1.0, 0.0, 0.0))


def test_icc_quarter_turn():
    state = step(RobotState(), TwistCommand(v=1.0, omega=1.0, duration=math.pi / 2), dt=math.pi / 2)
    assert state.x == pytest.approx(1.0, abs=1e-12)
    assert state.y == pytest.approx(1.0, abs=1e-12)
    assert state.theta == pytest.approx(math.pi / 2, abs=1e-12)


def test_full_circle_returns_to_start():
    state = RobotState(x=0.3, y=-0.2, theta=0.4)
    dt = 0.05
    total = 2.0 * math.pi
    steps = int(total / dt)
    for _ in range(steps):
        state = step(state, TwistCommand(v=1.0, omega=1.0, duration=dt), dt=dt)
    rem = total - steps * dt
    if rem > 1e-12:
        state = step(state, TwistCommand(v=1.0, omega=1.0, duration=rem), dt=rem)
    assert math.hypot(state.x - 0.3, state.y + 0.2) < 1e-9
    assert abs(normalize_angle(state.theta - 0.4)) < 1e-9


@given(
    st.floats(min_value=-1, max_value=1, allow_nan=False),
    st.floats(min_value=-1.5, max_value=1.5, allow_nan=False),
    st.floats(min_value=0.001, max_value=0.5, allow_nan=False),
)
def test_step_distance_bound(v, omega, dt):
    state = step(RobotState(), TwistCommand(v=v, omega=omega, duration=dt), dt=dt)
    assert math.hypot(state.x, state.y) <= abs(v) * dt + 1e-12


def test_odometry_accumulates():
    state = RobotState()
    for _ in range(10):
        state = step(state, TwistCommand(v=0.5, omega=0.0, duration=0.1), dt=0.1)
    assert state.odom_distance == pytest.approx(0.5)


def test_collision_freezes_pose():
    grid = open_grid()
    state = RobotState(x=1.0, y=1.0, theta=math.pi)  # heading straight at the west wall
    for _ in range(200):
        state = step(state, TwistCommand(v=1.0, omega=0.0, duration=0.05), dt=0.05, grid=grid)
        if state.collided:
            break
    assert state.collided
    assert not grid.occupied(state.x, state.y, inflation=0.3)


def test_theta_stays_normalized():
    state = RobotState()
    for _ in range(100):
        state = step(state, TwistCommand(v=0.0, omega=1.5, duration=0.2), dt=0.2)
        assert -math.pi < state.theta <= math.pi


def test_twist_bounds_validated():
    with pytest.raises(ValueError):
        TwistCommand(v=1.5, omega=0.0, duration=1.0)
    with pytest.raises(ValueError):
        TwistCommand(v=0.0, omega=3.0, duration=1.0)
    with pytest.raises(ValueError):
        TwistCommand(v=0.0, omega=0.0, duration=0.0)


def test_distance_between():
    assert distance_between((0, 0), (3, 4)) == pytest.approx(5.0)
    assert distance_between((0, 0, 0.3), (0, 0)) == 0.0
    # travel-time shape: (0,0) -> (5,5) at 1 m/s is about 7.07 s, under 10 s
    assert distance_between((0, 0), (5, 5)) / 1.0 < 10.0


# --- grid --------------------------------------------------------------------


def test_grid_world_cell_roundtrip():
    grid = open_grid()
    row, col = grid.world_to_cell(1.3, 2.2)
    x, y = grid.cell_to_world(row, col)
    assert abs(x - 1.3) <= grid.resolution
    assert abs(y - 2.2) <= grid.resolution


def test_grid_outside_is_occupied():
    grid = open_grid()
    assert grid.occupied(-1.0, 0.5)
    assert grid.occupied(0.1, 0.1)  # wall ring
    assert not grid.occupied(2.5, 2.5)


def test_inflation_grows_obstacles():
    grid = open_grid()
    assert not grid.occupied(0.6, 2.5)
    assert grid.occupied(0.6, 2.5, inflation=0.5)


def test_map_file_roundtrip(tmp_path, lab_map_path):
    grid, objects = load_map(lab_map_path)
    out = tmp_path / "copy.json"
    save_map(out, grid, objects)
    grid2, objects2 = load_map(out)
    assert np.array_equal(grid.occupancy, grid2.occupancy)
    assert grid.named_destinations == grid2.named_destinations
    assert objects == objects2


def test_destination_in_wall_rejected():
    rows = ["###", "#.#", "###"]
    with pytest.raises(MapError):
        OccupancyGrid.from_rows(rows, destinations={"bad": (0.0, 0.0, 0.0)})


# --- planner -----------------------------------------------------------------


def test_straight_corridor_is_collinear():
    grid = open_grid()
    waypoints = plan_path(grid, (1.0, 2.5), (4.0, 2.5), robot_radius=0.3)
    assert all(abs(y - 2.5) < grid.resolution for _x, y in waypoints)
    assert waypoints[-1] == pytest.approx((4.0, 2.5))


def test_goal_in_obstacle_raises():
    grid = open_grid()
    with pytest.raises(NoPath):
        plan_path(grid, (1.0, 1.0), (0.0, 0.0), robot_radius=0.3)


def test_detour_around_u_wall_matches_dijkstra():
    size = 30
    rows = []
    for r in range(size):
        row = ["."] * size
        if r in (0, size - 1):
            row = ["#"] * size
        else:
            row[0] = row[-1] = "#"
        rows.append("".join(row))
    grid_rows = [list(r) for r in rows]
    # U-shaped wall opening to the north
    for r in range(8, 20):
        grid_rows[r][10] = "#"
        grid_rows[r][20] = "#"
    for c in range(10, 21):
        grid_rows[19][c] = "#"
    grid = OccupancyGrid.from_rows(["".join(r) for r in grid_rows], resolution=0.25)

    occupied = grid.inflated(0.0)
    start = grid.world_to_cell(3.75, 3.75)
    goal = grid.world_to_cell(3.75, 1.25)
    _path, cost = astar_cells(occupied, start, goal)
    assert cost == pytest.approx(dijkstra_cost(occupied, start, goal), abs=1e-9)


def test_astar_equals_dijkstra_on_random_grids():
    rng = np.random.default_rng(2024)
    checked = 0
    while checked < 100:
        occupied = rng.random((50, 50)) < 0.25
        free = np.argwhere(~occupied)
        if len(free) < 2:
            continue
        start = tuple(free[rng.integers(len(free))])
        goal = tuple(free[rng.integers(len(free))])
        oracle = dijkstra_cost(occupied, start, goal)
        try:
            _path, cost = astar_cells(occupied, start, goal)
        except NoPath:
            assert math.isinf(oracle)
            checked += 1
            continue
        assert cost == pytest.approx(oracle, abs=1e-9)
        checked += 1


def test_smoothing_preserves_endpoints_and_safety():
    grid = open_grid(size=30)
    occupied = grid.inflated(0.3)
    start = grid.world_to_cell(1.0, 1.0)
    goal = grid.world_to_cell(6.0, 6.0)
    path, _cost = astar_cells(occupied, start, goal)
    smoothed = smooth_cells(occupied, path)
    assert smoothed[0] == path[0] and smoothed[-1] == path[-1]
    assert len(smoothed) <= len(path)
    assert all(not occupied[cell] for cell in smoothed)


# --- rendering ---------------------------------------------------------------


def test_object_dead_ahead_renders_centered():
    state = RobotState(x=0.0, y=0.0, theta=0.0)
    scene = [SceneObject(label="chair", x=2.0, y=0.0, z=0.3)]
    frame = render_observation(state, scene, DEFAULT_INTRINSICS, ("chair",), seed=0)
    assert len(frame.masks) == 1
    mask = frame.masks[0]
    centroid = mask.pixels.mean(axis=0)
    assert centroid[0] == pytest.approx(DEFAULT_INTRINSICS.cx, abs=1.0)
    assert centroid[1] == pytest.approx(DEFAULT_INTRINSICS.cy, abs=1.0)
    depths = frame.depth[mask.pixels[:, 1], mask.pixels[:, 0]]
    assert np.allclose(depths, 2.0, atol=1e-6)


def test_object_behind_robot_excluded():
    state = RobotState(x=0.0, y=0.0, theta=0.0)
    scene = [SceneObject(label="chair", x=-2.0, y=0.0, z=0.3)]
    frame = render_observation(state, scene, DEFAULT_INTRINSICS, ("chair",), seed=0)
    assert frame.masks == ()


def test_empty_scene_renders_empty_frame():
    frame = render_observation(RobotState(), [], DEFAULT_INTRINSICS, ("chair",), seed=0)
    assert frame.masks == ()
    assert float(frame.depth.max()) == 0.0


def test_wall_occlusion_excludes_object(lab_sim):
    # the box sits in the sealed-off corner pocket of the lab map
    lab_sim.teleport(6.0, 6.0, math.atan2(7.5 - 6.0, 7.5 - 6.0))
    frame = lab_sim.render(("box",))
    assert all("box" not in m.labels or max(m.scores) < 0.99 for m in frame.masks)
    labels_seen = {m.labels[int(np.argmax(m.scores))] for m in frame.masks}
    assert "box" not in labels_seen


def test_render_deterministic_for_fixed_seed(lab_sim):
    a = lab_sim.render()
    b = lab_sim.render()
    assert len(a.masks) == len(b.masks)
    for ma, mb in zip(a.masks, b.masks):
        assert np.array_equal(ma.pixels, mb.pixels)
        assert np.array_equal(ma.scores, mb.scores)
        assert np.array_equal(ma.eta, mb.eta)
    assert np.array_equal(a.depth, b.depth)


def test_simulator_spawns_at_start_destination(lab_sim):
    assert (lab_sim.state.x, lab_sim.state.y) == (2.0, 1.0)


def test_obstacle_ahead_distance(lab_sim):
    lab_sim.teleport(1.0, 1.0, math.pi)  # facing the west wall 0.75 m away
    distance = lab_sim.obstacle_ahead(max_range=3.0)
    assert distance < 1.0


def test_pose_noise_disabled_by_default(lab_sim):
    assert lab_sim.pose_noise_sigma == 0.0


def test_pose_noise_produces_drift():
    import json
    from pathlib import Path

    path = Path(__file__).parent.parent / "src" / "babelbot" / "data" / "maps" / "arena.json"
    noisy = Simulator.from_map_file(path, pose_noise_sigma=0.05, seed=3)
    clean = Simulator.from_map_file(path, seed=3)
    for _ in range(100):
        noisy.tick(0.3, 0.0)
        clean.tick(0.3, 0.0)
    assert (noisy.state.x, noisy.state.y) != (clean.state.x, clean.state.y)
    assert not noisy.grid.occupied(noisy.state.x, noisy.state.y, inflation=noisy.robot_radius)
