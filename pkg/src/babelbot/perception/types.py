"""Perception data types: intrinsics, mask candidates, tracks, config."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np


class PerceptionError(Exception):
    """Base class for perception failures."""


class DegenerateMask(PerceptionError):
    """Fewer than three pixels, or all pixel centers collinear."""


class NonFiniteScore(PerceptionError):
    """A similarity score is NaN or infinite."""


class AllMassDegraded(PerceptionError):
    """Degradation weighting drove the whole distribution to zero."""


class NoDepthAvailable(PerceptionError):
    """Neither sensor depth nor the monocular fallback produced a value."""


class NonPositiveDepth(PerceptionError):
    """Back-projection requires depth > 0."""


class InvalidTransform(PerceptionError):
    """Rotation matrix is not orthonormal within tolerance."""


class NumericalDivergence(PerceptionError):
    """Kalman state or covariance became non-finite; track is dropped."""


class NoCandidates(PerceptionError):
    """Target selection was invoked with no localizable candidates."""


@dataclass(frozen=True)
class CameraIntrinsics:
    fx: float
    fy: float
    cx: float
    cy: float
    width: int
    height: int

    def __post_init__(self) -> None:
        if self.fx <= 0 or self.fy <= 0:
            raise ValueError("focal lengths must be positive")
        if not (0 <= self.cx < self.width and 0 <= self.cy < self.height):
            raise ValueError("principal point must lie inside the image")


@dataclass(frozen=True)
class PerceptionConfig:
    """Scoring pipeline knobs; the defaults are the tuned operating point."""

    softmax_temperature: float = 0.07
    q_thresh: float = 0.6
    e_thresh: float = 0.45
    beta: float = 1.0
    lambda1: float = 0.6
    lambda2: float = 0.4
    source_confidence_floor: float = 0.4
    neighborhood_radius: int = 5

    def __post_init__(self) -> None:
        if self.softmax_temperature <= 0:
            raise ValueError("softmax temperature must be > 0")
        if not (0 < self.q_thresh <= 1):
            raise ValueError("q_thresh must be in (0, 1]")
        if self.lambda1 <= 0 or self.lambda2 <= 0:
            raise ValueError("lambda weights must be > 0")
        if self.neighborhood_radius < 1:
            raise ValueError("neighborhood radius must be >= 1")


@dataclass(frozen=True)
class MaskObservation:
    """One raw mask from a perception source, scores per candidate label."""

    id: int
    pixels: np.ndarray  # (N, 2) int array of (u, v)
    labels: tuple[str, ...]
    scores: np.ndarray  # (M,)
    eta: np.ndarray  # (M,) non-negative degradation per label
    source_confidence: float = 1.0


@dataclass(frozen=True)
class PerceptionFrame:
    intrinsics: CameraIntrinsics
    masks: tuple[MaskObservation, ...]
    depth: np.ndarray  # (H, W) float32, 0 / NaN = invalid


@dataclass(frozen=True)
class MaskCandidate:
    """A mask that survived quality evaluation, with its geometry stats."""

    id: int
    pixels: np.ndarray
    area: float
    hull_area: float
    quality: float
    labels: tuple[str, ...]
    scores: np.ndarray
    eta: np.ndarray


@dataclass(frozen=True)
class TrackedObject:
    """Kalman-tracked 3D object state (position + velocity, base frame)."""

    track_id: int
    label: str
    state: np.ndarray  # (6,) x, y, z, vx, vy, vz
    covariance: np.ndarray  # (6, 6)
    last_p_prime: float = 1.0
    last_seen: float = 0.0

    @property
    def position(self) -> np.ndarray:
        return self.state[:3]

    @property
    def velocity(self) -> np.ndarray:
        return self.state[3:]


@dataclass(frozen=True)
class ScoredCandidate:
    """One (mask, label) pair ready for joint visuo-lingual selection."""

    mask: MaskCandidate
    label: str
    label_index: int
    p_prime: float
    point_base: np.ndarray
    track: TrackedObject
    # spatial features (centroid u/v, mean depth) are computed for parity
    # with the joint-embedding interface but unused by the lexical scorer
    spatial: tuple[float, float, float] = (0.0, 0.0, 0.0)
