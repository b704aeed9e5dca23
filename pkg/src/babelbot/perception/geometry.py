"""Depth fusion, pinhole projection, and frame transforms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol

import numpy as np

from babelbot.perception.types import (
    CameraIntrinsics,
    InvalidTransform,
    NoDepthAvailable,
    NonPositiveDepth,
)


class MonocularDepthSource(Protocol):
    """Fallback depth predictor used when sensor depth is invalid."""

    def depth_over(self, pixels: np.ndarray) -> np.ndarray: ...


def mask_centroid(pixels: np.ndarray) -> tuple[int, int]:
    px = np.asarray(pixels, dtype=float)
    u, v = px.mean(axis=0)
    return int(round(u)), int(round(v))


def centroid_depth(
    pixels: np.ndarray,
    depth_frame: np.ndarray,
    radius: int,
    mono: MonocularDepthSource | None = None,
) -> float:
    """Median of valid sensor depth around the mask centroid, else the
    median of monocular-predicted depth over the mask."""
    if radius < 1:
        raise ValueError("neighborhood radius must be >= 1")
    u_c, v_c = mask_centroid(pixels)
    h, w = depth_frame.shape
    u_lo, u_hi = max(0, u_c - radius), min(w, u_c + radius + 1)
    v_lo, v_hi = max(0, v_c - radius), min(h, v_c + radius + 1)
    window = np.asarray(depth_frame[v_lo:v_hi, u_lo:u_hi], dtype=float).ravel()
    valid = window[np.isfinite(window) & (window > 0)]
    if valid.size:
        return float(np.median(valid))

    if mono is not None:
        predicted = np.asarray(mono.depth_over(np.asarray(pixels)), dtype=float).ravel()
        valid = predicted[np.isfinite(predicted) & (predicted > 0)]
        if valid.size:
            return float(np.median(valid))

    raise NoDepthAvailable("no valid sensor depth and no monocular fallback")


def back_project(u: float, v: float, z: float, intrinsics: CameraIntrinsics) -> np.ndarray:
    """Pinhole back-projection of pixel (u, v) at depth z, camera frame."""
    if z <= 0:
        raise NonPositiveDepth(f"depth must be > 0, got {z}")
    x = (u - intrinsics.cx) * z / intrinsics.fx
    y = (v - intrinsics.cy) * z / intrinsics.fy
    return np.array([x, y, z], dtype=float)


def project(point_cam: np.ndarray, intrinsics: CameraIntrinsics) -> tuple[float, float]:
    """Pinhole projection, the inverse of :func:`back_project` for z > 0."""
    x, y, z = (float(c) for c in point_cam)
    if z <= 0:
        raise NonPositiveDepth(f"depth must be > 0, got {z}")
    return intrinsics.cx + intrinsics.fx * x / z, intrinsics.cy + intrinsics.fy * y / z


@dataclass(frozen=True)
class RigidTransform:
    """Rotation + translation; rotation must be orthonormal within 1e-6."""

    rotation: np.ndarray  # (3, 3)
    translation: np.ndarray  # (3,)

    def __post_init__(self) -> None:
        r = np.asarray(self.rotation, dtype=float)
        if r.shape != (3, 3):
            raise InvalidTransform(f"rotation shape {r.shape}")
        if np.max(np.abs(r.T @ r - np.eye(3))) > 1e-6:
            raise InvalidTransform("rotation is not orthonormal within 1e-6")
        object.__setattr__(self, "rotation", r)
        object.__setattr__(self, "translation", np.asarray(self.translation, dtype=float))

    @classmethod
    def identity(cls) -> "RigidTransform":
        return cls(rotation=np.eye(3), translation=np.zeros(3))

    @classmethod
    def yaw(cls, angle_rad: float, translation=(0.0, 0.0, 0.0)) -> "RigidTransform":
        c, s = np.cos(angle_rad), np.sin(angle_rad)
        rot = np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
        return cls(rotation=rot, translation=np.asarray(translation, dtype=float))

    def apply(self, point: np.ndarray) -> np.ndarray:
        return self.rotation @ np.asarray(point, dtype=float) + self.translation


def to_base_frame(point_cam: np.ndarray, extrinsics: RigidTransform) -> np.ndarray:
    """Transform a camera-frame point into the robot base frame."""
    return extrinsics.apply(point_cam)


# camera optical frame (x right, y down, z forward) -> robot base frame
# (x forward, y left, z up), camera mounted at the base origin
_CAM_TO_BASE_R = np.array([[0.0, 0.0, 1.0], [-1.0, 0.0, 0.0], [0.0, -1.0, 0.0]])


def camera_extrinsics(
    x: float, y: float, theta: float, camera_height: float = 0.3
) -> RigidTransform:
    """Composed camera-to-world transform for a robot at (x, y, theta)."""
    c, s = np.cos(theta), np.sin(theta)
    yaw_r = np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
    rotation = yaw_r @ _CAM_TO_BASE_R
    translation = yaw_r @ np.array([0.0, 0.0, camera_height]) + np.array([x, y, 0.0])
    return RigidTransform(rotation=rotation, translation=translation)
