"""Top-down PNG snapshots of the simulated world."""

from __future__ import annotations

import math
from pathlib import Path

from PIL import Image, ImageDraw

from babelbot.simulator.world import Simulator

CELL_PX = 10

_FREE = (245, 245, 240)
_OCCUPIED = (60, 60, 70)
_TRAIL = (66, 135, 245)
_ROBOT = (220, 60, 60)
_OBJECT = (40, 160, 90)


def draw_snapshot(sim: Simulator, path: Path) -> Path:
    """Render the grid, objects, trail, and robot pose into a PNG file."""
    grid = sim.grid
    width = grid.width * CELL_PX
    height = grid.height * CELL_PX
    image = Image.new("RGB", (width, height), _FREE)
    draw = ImageDraw.Draw(image)

    def to_px(x: float, y: float) -> tuple[float, float]:
        col = (x - grid.origin[0]) / grid.resolution
        row = (y - grid.origin[1]) / grid.resolution
        return col * CELL_PX, height - row * CELL_PX  # image y grows downward

    for row in range(grid.height):
        for col in range(grid.width):
            if grid.occupancy[row, col]:
                x0 = col * CELL_PX
                y0 = height - (row + 1) * CELL_PX
                draw.rectangle([x0, y0, x0 + CELL_PX - 1, y0 + CELL_PX - 1], fill=_OCCUPIED)

    for obj in sim.scene:
        cx, cy = to_px(obj.x, obj.y)
        r = max(obj.radius / grid.resolution * CELL_PX, 3)
        draw.ellipse([cx - r, cy - r, cx + r, cy + r], outline=_OBJECT, width=2)

    if len(sim.trail) >= 2:
        points = [to_px(x, y) for x, y, _theta in sim.trail]
        draw.line(points, fill=_TRAIL, width=2)

    x, y, theta = sim.state.pose
    cx, cy = to_px(x, y)
    r = max(sim.robot_radius / grid.resolution * CELL_PX, 4)
    draw.ellipse([cx - r, cy - r, cx + r, cy + r], outline=_ROBOT, width=3)
    hx = cx + r * 1.4 * math.cos(theta)
    hy = cy - r * 1.4 * math.sin(theta)
    draw.line([cx, cy, hx, hy], fill=_ROBOT, width=3)

    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    image.save(path, format="PNG")
    return path
