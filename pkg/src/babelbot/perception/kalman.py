"""Constant-velocity Kalman tracking with position-only measurements."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from babelbot.perception.types import NumericalDivergence, TrackedObject

DEFAULT_PROCESS_NOISE = 0.01
DEFAULT_MEASUREMENT_SIGMA = 0.05
ASSOCIATION_GATE_M = 0.75

_H = np.hstack([np.eye(3), np.zeros((3, 3))])


def transition_matrix(dt: float) -> np.ndarray:
    f = np.eye(6)
    f[:3, 3:] = dt * np.eye(3)
    return f


def default_process_noise(q_c: float = DEFAULT_PROCESS_NOISE) -> np.ndarray:
    return q_c * np.eye(6)


def default_measurement_noise(sigma: float = DEFAULT_MEASUREMENT_SIGMA) -> np.ndarray:
    return sigma**2 * np.eye(3)


def track_update(
    track: TrackedObject,
    measurement: np.ndarray,
    dt: float,
    Q: np.ndarray | None = None,
    R: np.ndarray | None = None,
) -> TrackedObject:
    """One predict-update cycle against a 3D position measurement.

    Covariance update uses the Joseph form for numerical symmetry; a
    non-finite result raises :class:`NumericalDivergence` so the caller
    can drop the track.
    """
    if dt <= 0:
        raise ValueError(f"dt must be > 0, got {dt}")
    Q = default_process_noise() if Q is None else np.asarray(Q, dtype=float)
    R = default_measurement_noise() if R is None else np.asarray(R, dtype=float)
    z = np.asarray(measurement, dtype=float).reshape(3)
    if not np.all(np.isfinite(z)):
        raise NumericalDivergence(f"track {track.track_id}: non-finite measurement")

    f = transition_matrix(dt)
    x_pred = f @ track.state
    p_pred = f @ track.covariance @ f.T + Q

    innovation_cov = _H @ p_pred @ _H.T + R
    gain = np.linalg.solve(innovation_cov.T, (p_pred @ _H.T).T).T
    x_new = x_pred + gain @ (z - _H @ x_pred)
    joseph = np.eye(6) - gain @ _H
    p_new = joseph @ p_pred @ joseph.T + gain @ R @ gain.T

    if not (np.all(np.isfinite(x_new)) and np.all(np.isfinite(p_new))):
        raise NumericalDivergence(f"track {track.track_id} state became non-finite")

    return TrackedObject(
        track_id=track.track_id,
        label=track.label,
        state=x_new,
        covariance=p_new,
        last_p_prime=track.last_p_prime,
        last_seen=track.last_seen,
    )


def track_predict(track: TrackedObject, dt: float, Q: np.ndarray | None = None) -> TrackedObject:
    """Prediction step only (no measurement)."""
    if dt <= 0:
        raise ValueError(f"dt must be > 0, got {dt}")
    Q = default_process_noise() if Q is None else np.asarray(Q, dtype=float)
    f = transition_matrix(dt)
    return TrackedObject(
        track_id=track.track_id,
        label=track.label,
        state=f @ track.state,
        covariance=f @ track.covariance @ f.T + Q,
        last_p_prime=track.last_p_prime,
        last_seen=track.last_seen,
    )


@dataclass
class TrackRegistry:
    """Per-session track store; associates by label + gating distance."""

    q_c: float = DEFAULT_PROCESS_NOISE
    sigma: float = DEFAULT_MEASUREMENT_SIGMA
    gate_m: float = ASSOCIATION_GATE_M
    tracks: dict[int, TrackedObject] = field(default_factory=dict)
    _next_id: int = 0
    _last_time: float | None = None

    def observe(
        self, label: str, point: np.ndarray, timestamp: float, p_prime: float
    ) -> TrackedObject:
        point = np.asarray(point, dtype=float).reshape(3)
        dt = 0.1 if self._last_time is None else max(timestamp - self._last_time, 1e-3)

        best: TrackedObject | None = None
        best_dist = self.gate_m
        for track in self.tracks.values():
            if track.label != label:
                continue
            dist = float(np.linalg.norm(track.position - point))
            if dist < best_dist:
                best, best_dist = track, dist

        if best is None:
            track = TrackedObject(
                track_id=self._next_id,
                label=label,
                state=np.concatenate([point, np.zeros(3)]),
                covariance=np.diag([0.5, 0.5, 0.5, 1.0, 1.0, 1.0]),
                last_p_prime=p_prime,
                last_seen=timestamp,
            )
            self._next_id += 1
        else:
            try:
                track = track_update(
                    best,
                    point,
                    dt,
                    default_process_noise(self.q_c),
                    default_measurement_noise(self.sigma),
                )
            except NumericalDivergence:
                del self.tracks[best.track_id]
                raise
            track = TrackedObject(
                track_id=track.track_id,
                label=track.label,
                state=track.state,
                covariance=track.covariance,
                last_p_prime=p_prime,
                last_seen=timestamp,
            )
        self.tracks[track.track_id] = track
        self._last_time = timestamp
        return track
