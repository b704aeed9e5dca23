"""Mask quality and uncertainty-aware label scoring.

Mask quality is the ratio of pixel count to convex-hull area, where the
hull is taken over the four cell corners of every pixel (each pixel padded
to its full unit cell), so a filled convex mask scores ~1.0. The label
distribution is a temperature-scaled softmax; an energy score rejects
uncertain masks; degradation weights reshape the distribution in
perceptually unreliable regions.
"""

from __future__ import annotations

import math

import numpy as np

from babelbot.perception.types import (
    AllMassDegraded,
    DegenerateMask,
    MaskCandidate,
    MaskObservation,
    NonFiniteScore,
)


def convex_hull(points: np.ndarray) -> np.ndarray:
    """Monotone-chain convex hull; returns hull vertices counterclockwise."""
    pts = np.unique(np.asarray(points, dtype=float), axis=0)
    if len(pts) < 3:
        return pts
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[np.ndarray] = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[np.ndarray] = []
    for p in pts[::-1]:
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return np.array(lower[:-1] + upper[:-1])


def shoelace_area(vertices: np.ndarray) -> float:
    if len(vertices) < 3:
        return 0.0
    x = vertices[:, 0]
    y = vertices[:, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))


def _collinear(points: np.ndarray) -> bool:
    pts = np.unique(_row_extreme_pixels(np.asarray(points, dtype=float)), axis=0)
    if len(pts) < 3:
        return True
    base = pts[0]
    d = pts[1:] - base
    cross = d[0, 0] * d[1:, 1] - d[0, 1] * d[1:, 0]
    return bool(np.all(np.abs(cross) < 1e-12))


def _row_extreme_pixels(px: np.ndarray) -> np.ndarray:
    """Per-row min/max-u pixels; exact support of the convex hull.

    A hull vertex must be an extreme-u point within its integer row, so
    reducing to row extremes before hulling is lossless and keeps the
    monotone chain cheap for large filled masks.
    """
    v = px[:, 1]
    vmin = int(v.min())
    nrows = int(v.max()) - vmin + 1
    umin = np.full(nrows, np.inf)
    umax = np.full(nrows, -np.inf)
    idx = (v - vmin).astype(int)
    np.minimum.at(umin, idx, px[:, 0])
    np.maximum.at(umax, idx, px[:, 0])
    present = np.isfinite(umin)
    rows = np.arange(vmin, vmin + nrows, dtype=float)[present]
    return np.concatenate(
        [
            np.stack([umin[present], rows], axis=1),
            np.stack([umax[present], rows], axis=1),
        ]
    )


def hull_cell_area(pixels: np.ndarray) -> float:
    """Convex-hull area over pixel cells (each center padded by +-0.5)."""
    px = _row_extreme_pixels(np.asarray(pixels, dtype=float))
    corners = np.concatenate(
        [px + off for off in ((-0.5, -0.5), (-0.5, 0.5), (0.5, -0.5), (0.5, 0.5))]
    )
    return shoelace_area(convex_hull(corners))


def _unique_pixels(pixels) -> np.ndarray:
    """Deduplicated (N, 2) int pixel array (1D-keyed; axis-unique is slow)."""
    px = np.asarray(list(pixels) if not isinstance(pixels, np.ndarray) else pixels, dtype=np.int64)
    px = px.reshape(-1, 2)
    if len(px) == 0:
        return px
    offset = px.min(axis=0)
    shifted = px - offset
    width = int(shifted[:, 0].max()) + 1
    keys = np.unique(shifted[:, 1] * width + shifted[:, 0])
    return np.stack([keys % width, keys // width], axis=1) + offset


def mask_quality(pixels) -> float:
    """q = pixel count / padded hull area, in (0, 1] for sane masks."""
    px = _unique_pixels(pixels)
    if len(px) < 3 or _collinear(px):
        raise DegenerateMask(f"{len(px)} pixels, hull degenerate")
    area = float(len(px))
    hull_area = hull_cell_area(px)
    if hull_area <= 0:
        raise DegenerateMask("hull area is zero")
    return area / hull_area


def evaluate_mask(obs: MaskObservation) -> MaskCandidate:
    """Compute geometry stats for an observation (raises DegenerateMask)."""
    px = _unique_pixels(obs.pixels)
    if len(px) < 3 or _collinear(px):
        raise DegenerateMask(f"mask {obs.id}: {len(px)} pixels, hull degenerate")
    hull_area = hull_cell_area(px)
    return MaskCandidate(
        id=obs.id,
        pixels=px,
        area=float(len(px)),
        hull_area=hull_area,
        quality=float(len(px)) / hull_area,
        labels=obs.labels,
        scores=np.asarray(obs.scores, dtype=float),
        eta=np.asarray(obs.eta, dtype=float),
    )


def class_distribution(scores, temperature: float) -> np.ndarray:
    """Temperature-scaled softmax over label similarity scores.

    Computed with max subtraction; invariant to adding a constant to all
    scores, and normalized to sum to 1 within 1e-12.
    """
    s = np.asarray(scores, dtype=float)
    if s.size == 0:
        raise NonFiniteScore("empty score vector")
    if not np.all(np.isfinite(s)):
        raise NonFiniteScore("non-finite similarity score")
    tau = 1.0 / temperature
    shifted = tau * (s - s.max())
    w = np.exp(shifted)
    return w / w.sum()


def energy_score(scores, temperature: float) -> float:
    """e = -(1/tau) log sum_j exp(tau * S_j); lower energy = more confident."""
    s = np.asarray(scores, dtype=float)
    if s.size == 0:
        raise NonFiniteScore("empty score vector")
    if not np.all(np.isfinite(s)):
        raise NonFiniteScore("non-finite similarity score")
    tau = 1.0 / temperature
    m = float(s.max())
    return -(m + math.log(float(np.exp(tau * (s - m)).sum())) / tau)


def reweight_degradation(p, eta, beta: float) -> np.ndarray:
    """Down-weight label probabilities by exp(-beta * eta), renormalized."""
    p = np.asarray(p, dtype=float)
    eta = np.asarray(eta, dtype=float)
    if np.any(eta < 0):
        raise ValueError("degradation eta must be non-negative")
    w = p * np.exp(-beta * eta)
    denom = w.sum()
    if denom <= 0 or not np.isfinite(denom):
        raise AllMassDegraded("reweighted distribution underflowed to zero")
    return w / denom
