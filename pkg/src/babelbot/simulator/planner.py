"""8-connected A* with octile heuristic and line-of-sight path smoothing."""

from __future__ import annotations

import heapq
import math

import numpy as np

from babelbot.simulator.grid import OccupancyGrid
from babelbot.simulator.robot import DEFAULT_ROBOT_RADIUS


class NoPath(Exception):
    pass


SQRT2 = math.sqrt(2.0)

_NEIGHBORS = (
    (-1, 0, 1.0),
    (1, 0, 1.0),
    (0, -1, 1.0),
    (0, 1, 1.0),
    (-1, -1, SQRT2),
    (-1, 1, SQRT2),
    (1, -1, SQRT2),
    (1, 1, SQRT2),
)


def octile(a: tuple[int, int], b: tuple[int, int]) -> float:
    dr = abs(a[0] - b[0])
    dc = abs(a[1] - b[1])
    return (dr + dc) + (SQRT2 - 2.0) * min(dr, dc)


def astar_cells(
    occupied: np.ndarray, start: tuple[int, int], goal: tuple[int, int]
) -> tuple[list[tuple[int, int]], float]:
    """Grid A*; returns (cell path, cost in cell units) or raises NoPath."""
    rows, cols = occupied.shape
    if occupied[start] or occupied[goal]:
        raise NoPath("start or goal cell is occupied")

    g: dict[tuple[int, int], float] = {start: 0.0}
    parent: dict[tuple[int, int], tuple[int, int]] = {}
    heap: list[tuple[float, float, tuple[int, int]]] = [(octile(start, goal), 0.0, start)]
    closed: set[tuple[int, int]] = set()

    while heap:
        _f, cost, node = heapq.heappop(heap)
        if node in closed:
            continue
        if node == goal:
            path = [node]
            while node in parent:
                node = parent[node]
                path.append(node)
            path.reverse()
            return path, cost
        closed.add(node)
        r, c = node
        for dr, dc, w in _NEIGHBORS:
            nr, nc = r + dr, c + dc
            if not (0 <= nr < rows and 0 <= nc < cols) or occupied[nr, nc]:
                continue
            # forbid cutting corners diagonally through occupied cells
            if dr and dc and (occupied[r + dr, c] or occupied[r, c + dc]):
                continue
            nxt = (nr, nc)
            ng = cost + w
            if ng < g.get(nxt, math.inf) - 1e-12:
                g[nxt] = ng
                parent[nxt] = node
                heapq.heappush(heap, (ng + octile(nxt, goal), ng, nxt))
    raise NoPath(f"no route from {start} to {goal}")


def line_of_sight(occupied: np.ndarray, a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Supercover traversal: every cell touched by segment a-b must be free."""
    (r0, c0), (r1, c1) = a, b
    steps = max(abs(r1 - r0), abs(c1 - c0)) * 2
    if steps == 0:
        return not occupied[a]
    for i in range(steps + 1):
        t = i / steps
        r = r0 + (r1 - r0) * t
        c = c0 + (c1 - c0) * t
        if occupied[int(round(r)), int(round(c))]:
            return False
    return True


def smooth_cells(occupied: np.ndarray, path: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Greedy shortcutting: keep the farthest visible cell from each anchor."""
    if len(path) <= 2:
        return path
    smoothed = [path[0]]
    anchor = 0
    while anchor < len(path) - 1:
        best = anchor + 1
        for j in range(len(path) - 1, anchor, -1):
            if line_of_sight(occupied, path[anchor], path[j]):
                best = j
                break
        smoothed.append(path[best])
        anchor = best
    return smoothed


def plan_path(
    grid: OccupancyGrid,
    start: tuple[float, float],
    goal: tuple[float, float],
    robot_radius: float = DEFAULT_ROBOT_RADIUS,
) -> list[tuple[float, float]]:
    """World-coordinate waypoints from start to goal, smoothed.

    The final waypoint is the exact goal point; intermediate waypoints
    are free-cell centers of the inflated grid.
    """
    occupied = grid.inflated(robot_radius)
    start_cell = grid.world_to_cell(*start)
    goal_cell = grid.world_to_cell(*goal)
    if not grid.in_bounds(*start_cell) or not grid.in_bounds(*goal_cell):
        raise NoPath("start or goal outside the map")
    if occupied[start_cell] or occupied[goal_cell]:
        raise NoPath("start or goal inside inflated obstacle")

    cells, _cost = astar_cells(occupied, start_cell, goal_cell)
    cells = smooth_cells(occupied, cells)
    waypoints = [grid.cell_to_world(r, c) for r, c in cells[1:-1]]
    waypoints.append((float(goal[0]), float(goal[1])))
    return waypoints
