"""Occupancy grid with named destinations, loaded from JSON map files.

Map format: ``{"resolution": m, "origin": [x, y], "rows": ["..#..", ...],
"destinations": {"kitchen": [x, y, 0], ...}, "objects": [...]}`` where
``#`` marks an occupied cell and ``.`` a free one. ``rows[0]`` is the top
(largest y) row as drawn; the loader flips it so row index grows with y.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


class MapError(Exception):
    pass


@dataclass
class OccupancyGrid:
    resolution: float
    occupancy: np.ndarray  # (rows, cols) bool, True = occupied
    origin: tuple[float, float] = (0.0, 0.0)
    named_destinations: dict[str, tuple[float, float, float]] = field(default_factory=dict)
    _inflated: dict[float, np.ndarray] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if self.resolution <= 0:
            raise MapError("resolution must be > 0")
        self.occupancy = np.asarray(self.occupancy, dtype=bool)
        for name, (x, y, _z) in self.named_destinations.items():
            if self.occupied(x, y):
                raise MapError(f"destination {name!r} lies in an occupied cell")

    @property
    def height(self) -> int:
        return self.occupancy.shape[0]

    @property
    def width(self) -> int:
        return self.occupancy.shape[1]

    def world_to_cell(self, x: float, y: float) -> tuple[int, int]:
        col = int(math.floor((x - self.origin[0]) / self.resolution))
        row = int(math.floor((y - self.origin[1]) / self.resolution))
        return row, col

    def cell_to_world(self, row: int, col: int) -> tuple[float, float]:
        return (
            self.origin[0] + (col + 0.5) * self.resolution,
            self.origin[1] + (row + 0.5) * self.resolution,
        )

    def in_bounds(self, row: int, col: int) -> bool:
        return 0 <= row < self.height and 0 <= col < self.width

    def occupied(self, x: float, y: float, inflation: float = 0.0) -> bool:
        """True when (x, y) is outside the map or in an (inflated) occupied cell."""
        row, col = self.world_to_cell(x, y)
        if not self.in_bounds(row, col):
            return True
        return bool(self.inflated(inflation)[row, col])

    def inflated(self, radius: float) -> np.ndarray:
        """Occupancy dilated by a disc of the given radius (cached)."""
        if radius <= 0:
            return self.occupancy
        cached = self._inflated.get(radius)
        if cached is not None:
            return cached
        cells = int(math.ceil(radius / self.resolution))
        out = self.occupancy.copy()
        rows, cols = np.nonzero(self.occupancy)
        for dr in range(-cells, cells + 1):
            for dc in range(-cells, cells + 1):
                if math.hypot(dr, dc) * self.resolution > radius + 1e-9:
                    continue
                rr = np.clip(rows + dr, 0, self.height - 1)
                cc = np.clip(cols + dc, 0, self.width - 1)
                out[rr, cc] = True
        self._inflated[radius] = out
        return out

    @classmethod
    def from_rows(
        cls,
        rows: list[str],
        resolution: float = 0.25,
        origin: tuple[float, float] = (0.0, 0.0),
        destinations: dict[str, tuple[float, float, float]] | None = None,
    ) -> "OccupancyGrid":
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise MapError("rows must be non-empty and equal length")
        occ = np.array([[ch == "#" for ch in row] for row in reversed(rows)], dtype=bool)
        return cls(
            resolution=resolution,
            occupancy=occ,
            origin=origin,
            named_destinations=dict(destinations or {}),
        )

    def to_rows(self) -> list[str]:
        return [
            "".join("#" if cell else "." for cell in row) for row in reversed(list(self.occupancy))
        ]


def load_map(path: Path) -> tuple[OccupancyGrid, list[dict]]:
    """Load a map file; returns (grid, raw object dicts for the scene)."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))
    grid = OccupancyGrid.from_rows(
        rows=data["rows"],
        resolution=float(data["resolution"]),
        origin=tuple(data.get("origin", (0.0, 0.0))),
        destinations={
            name: tuple(coords) for name, coords in data.get("destinations", {}).items()
        },
    )
    return grid, list(data.get("objects", ()))


def save_map(path: Path, grid: OccupancyGrid, objects: list[dict] | None = None) -> None:
    data = {
        "resolution": grid.resolution,
        "origin": list(grid.origin),
        "rows": grid.to_rows(),
        "destinations": {name: list(c) for name, c in grid.named_destinations.items()},
        "objects": objects or [],
    }
    Path(path).write_text(json.dumps(data, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
