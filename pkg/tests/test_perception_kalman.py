import numpy as np
import pytest

from babelbot.perception.kalman import (
    TrackRegistry,
    default_measurement_noise,
    default_process_noise,
    track_predict,
    track_update,
    transition_matrix,
)
from babelbot.perception.types import NumericalDivergence, TrackedObject

from oracles import textbook_kalman


def make_track(position=(0.0, 0.0, 0.0), velocity=(0.0, 0.0, 0.0)):
    return TrackedObject(
        track_id=0,
        label="chair",
        state=np.array([*position, *velocity], dtype=float),
        covariance=np.diag([0.5, 0.5, 0.5, 1.0, 1.0, 1.0]),
    )


def test_predict_advances_with_velocity():
    track = make_track(velocity=(1.0, 0.0, 0.0))
    predicted = track_predict(track, dt=0.5)
    assert predicted.position == pytest.approx([0.5, 0.0, 0.0])


def test_stationary_fixed_point():
    track = make_track(position=(1.0, 2.0, 0.5))
    measurement = np.array([1.0, 2.0, 0.5])
    prev_trace = np.trace(track.covariance[:3, :3])
    for _ in range(30):
        track = track_update(track, measurement, dt=0.1)
        position_trace = np.trace(track.covariance[:3, :3])
        assert position_trace <= prev_trace + 1e-9
        prev_trace = position_trace
    assert track.position == pytest.approx(measurement, abs=1e-6)


def test_posterior_trace_below_prior():
    track = make_track()
    q = default_process_noise()
    r = default_measurement_noise()
    f = transition_matrix(0.1)
    prior = f @ track.covariance @ f.T + q
    updated = track_update(track, np.array([0.1, 0.0, 0.0]), dt=0.1, Q=q, R=r)
    assert np.trace(updated.covariance) < np.trace(prior)


def test_two_step_trace_matches_textbook_oracle():
    q = 0.02 * np.eye(6)
    r = np.diag([0.04, 0.05, 0.06])
    x0 = np.array([0.0, 0.0, 0.0, 0.2, -0.1, 0.0])
    p0 = np.diag([0.3, 0.3, 0.3, 0.8, 0.8, 0.8])
    measurements = [np.array([0.11, -0.04, 0.02]), np.array([0.19, -0.09, 0.01])]

    track = TrackedObject(track_id=1, label="box", state=x0.copy(), covariance=p0.copy())
    for z in measurements:
        track = track_update(track, z, dt=0.5, Q=q, R=r)

    oracle_x, oracle_p = textbook_kalman(x0, p0, measurements, dt=0.5, q=q, r=r)
    assert np.max(np.abs(track.state - oracle_x)) < 1e-9
    assert np.max(np.abs(track.covariance - oracle_p)) < 1e-9


def test_noiseless_constant_velocity_convergence():
    # the KF consistency bound: < 1e-6 m position error after 20 updates
    dt = 0.1
    velocity = np.array([0.5, -0.25, 0.0])
    q = 1e-12 * np.eye(6)
    r = 1e-12 * np.eye(3)
    true0 = np.array([0.0, 0.0, 0.0])
    track = TrackedObject(
        track_id=2,
        label="cart",
        state=np.concatenate([true0, velocity]),
        covariance=np.diag([0.1] * 3 + [0.1] * 3),
    )
    for step in range(1, 21):
        truth = true0 + velocity * (dt * step)
        track = track_update(track, truth, dt=dt, Q=q, R=r)
    assert np.linalg.norm(track.position - truth) < 1e-6


def test_divergence_detected():
    track = make_track()
    with pytest.raises(NumericalDivergence):
        track_update(track, np.array([np.inf, 0.0, 0.0]), dt=0.1)


def test_dt_must_be_positive():
    with pytest.raises(ValueError):
        track_update(make_track(), np.zeros(3), dt=0.0)


def test_registry_associates_same_label_nearby():
    registry = TrackRegistry()
    a = registry.observe("chair", np.array([1.0, 1.0, 0.3]), timestamp=0.0, p_prime=0.9)
    b = registry.observe("chair", np.array([1.05, 1.0, 0.3]), timestamp=0.1, p_prime=0.9)
    assert a.track_id == b.track_id
    assert len(registry.tracks) == 1


def test_registry_new_track_for_new_label_or_far_object():
    registry = TrackRegistry()
    registry.observe("chair", np.array([1.0, 1.0, 0.3]), timestamp=0.0, p_prime=0.9)
    other = registry.observe("table", np.array([1.0, 1.0, 0.3]), timestamp=0.1, p_prime=0.9)
    far = registry.observe("chair", np.array([5.0, 5.0, 0.3]), timestamp=0.2, p_prime=0.9)
    assert len(registry.tracks) == 3
    assert other.track_id != far.track_id
