"""Scene objects and the synthetic observation renderer.

Objects inside the camera's horizontal field of view and not blocked by
grid walls each produce one disc mask with ground-truth range depth,
lexical label affinities plus seeded noise, and degradation derived from
the object's illumination and occluded fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from babelbot.perception.types import CameraIntrinsics, MaskObservation, PerceptionFrame
from babelbot.simulator.grid import OccupancyGrid
from babelbot.simulator.robot import RobotState

CAMERA_HEIGHT_M = 0.3
MIN_RENDER_RANGE_M = 0.2
SCORE_NOISE = 0.05
ETA_CLAMP = 5.0

DEFAULT_INTRINSICS = CameraIntrinsics(fx=500.0, fy=500.0, cx=320.0, cy=240.0, width=640, height=480)


@dataclass(frozen=True)
class SceneObject:
    label: str
    x: float
    y: float
    z: float = CAMERA_HEIGHT_M
    radius: float = 0.2
    illumination: float = 1.0
    occluded_fraction: float = 0.0

    def __post_init__(self) -> None:
        if self.radius <= 0:
            raise ValueError("object radius must be > 0")
        if not (0.0 <= self.illumination <= 1.0 and 0.0 <= self.occluded_fraction <= 1.0):
            raise ValueError("illumination and occluded_fraction must be in [0, 1]")


def label_affinity(label: str, vocab_label: str) -> float:
    """Token-overlap affinity between an object label and a vocab entry."""
    if label == vocab_label:
        return 1.0
    a = set(label.casefold().split())
    b = set(vocab_label.casefold().split())
    if not a or not b:
        return 0.0
    overlap = len(a & b) / max(len(a), len(b))
    return 0.1 + 0.7 * overlap if overlap else 0.1


def degradation_eta(illumination: float, occluded_fraction: float) -> float:
    """eta = -ln(illumination * (1 - occlusion)), clamped to [0, 5]."""
    visibility = illumination * (1.0 - occluded_fraction)
    if visibility <= 0.0:
        return ETA_CLAMP
    return min(max(-math.log(visibility), 0.0), ETA_CLAMP)


def wall_blocked(grid: OccupancyGrid, start: tuple[float, float], end: tuple[float, float]) -> bool:
    """Ray-cast through the (uninflated) grid between two world points."""
    dist = math.hypot(end[0] - start[0], end[1] - start[1])
    steps = max(int(dist / (grid.resolution * 0.5)), 1)
    for i in range(1, steps):
        t = i / steps
        x = start[0] + (end[0] - start[0]) * t
        y = start[1] + (end[1] - start[1]) * t
        if grid.occupied(x, y):
            return True
    return False


def _disc_pixels(u: float, v: float, radius_px: float, intr: CameraIntrinsics) -> np.ndarray:
    r = max(radius_px, 2.0)
    u_lo = max(int(math.floor(u - r)), 0)
    u_hi = min(int(math.ceil(u + r)), intr.width - 1)
    v_lo = max(int(math.floor(v - r)), 0)
    v_hi = min(int(math.ceil(v + r)), intr.height - 1)
    if u_lo > u_hi or v_lo > v_hi:
        return np.empty((0, 2), dtype=int)
    uu, vv = np.meshgrid(np.arange(u_lo, u_hi + 1), np.arange(v_lo, v_hi + 1))
    inside = (uu - u) ** 2 + (vv - v) ** 2 <= r * r
    return np.stack([uu[inside], vv[inside]], axis=1).astype(int)


def render_observation(
    state: RobotState,
    scene: list[SceneObject],
    intrinsics: CameraIntrinsics,
    label_vocab: tuple[str, ...],
    grid: OccupancyGrid | None = None,
    seed: int = 0,
    camera_height: float = CAMERA_HEIGHT_M,
) -> PerceptionFrame:
    """Render one synthetic perception frame from the robot's viewpoint."""
    rng = np.random.default_rng(seed)
    depth = np.zeros((intrinsics.height, intrinsics.width), dtype=np.float32)
    masks: list[MaskObservation] = []
    cos_t, sin_t = math.cos(state.theta), math.sin(state.theta)

    mask_id = 0
    for obj in sorted(scene, key=lambda o: (o.label, o.x, o.y)):
        dx = obj.x - state.x
        dy = obj.y - state.y
        forward = cos_t * dx + sin_t * dy
        lateral_left = -sin_t * dx + cos_t * dy
        if forward < MIN_RENDER_RANGE_M:
            continue

        x_cam = -lateral_left
        y_cam = camera_height - obj.z
        z_cam = forward
        u = intrinsics.cx + intrinsics.fx * x_cam / z_cam
        v = intrinsics.cy + intrinsics.fy * y_cam / z_cam
        if not (0 <= u < intrinsics.width and 0 <= v < intrinsics.height):
            continue
        if grid is not None and wall_blocked(grid, (state.x, state.y), (obj.x, obj.y)):
            continue

        pixels = _disc_pixels(u, v, intrinsics.fx * obj.radius / z_cam, intrinsics)
        if len(pixels) < 3:
            continue
        depth[pixels[:, 1], pixels[:, 0]] = z_cam

        scores = np.array(
            [
                label_affinity(obj.label, vocab)
                + rng.uniform(-SCORE_NOISE, SCORE_NOISE)
                for vocab in label_vocab
            ]
        )
        eta_value = degradation_eta(obj.illumination, obj.occluded_fraction)
        masks.append(
            MaskObservation(
                id=mask_id,
                pixels=pixels,
                labels=tuple(label_vocab),
                scores=scores,
                eta=np.full(len(label_vocab), eta_value),
                source_confidence=obj.illumination * (1.0 - obj.occluded_fraction),
            )
        )
        mask_id += 1

    return PerceptionFrame(intrinsics=intrinsics, masks=tuple(masks), depth=depth)
