"""The candidate pipeline: filter, reweight, localize, track, select.

Filter ordering is fixed: source-confidence floor, mask quality, energy
rejection, degradation reweighting, then localization. Candidates are
processed in mask-id order so the surviving set and the selected target
are independent of input permutation.
"""

from __future__ import annotations

import math

import numpy as np

from babelbot.perception.geometry import (
    MonocularDepthSource,
    RigidTransform,
    back_project,
    centroid_depth,
    mask_centroid,
    to_base_frame,
)
from babelbot.perception.kalman import TrackRegistry
from babelbot.perception.scorer import SemanticScorer
from babelbot.perception.scoring import (
    class_distribution,
    energy_score,
    evaluate_mask,
    reweight_degradation,
)
from babelbot.perception.types import (
    AllMassDegraded,
    DegenerateMask,
    NoCandidates,
    NoDepthAvailable,
    PerceptionConfig,
    PerceptionFrame,
    ScoredCandidate,
    TrackedObject,
)


def process_frame(
    frame: PerceptionFrame,
    cfg: PerceptionConfig,
    registry: TrackRegistry,
    extrinsics: RigidTransform | None = None,
    mono: MonocularDepthSource | None = None,
    timestamp: float = 0.0,
) -> list[ScoredCandidate]:
    """Run the full scoring pipeline over one frame.

    Returns one candidate per surviving (mask, label) pair; masks that
    fail any filter or cannot be localized are silently dropped.
    """
    extrinsics = extrinsics or RigidTransform.identity()
    candidates: list[ScoredCandidate] = []

    for obs in sorted(frame.masks, key=lambda m: m.id):
        if obs.source_confidence < cfg.source_confidence_floor:
            continue
        try:
            mask = evaluate_mask(obs)
        except DegenerateMask:
            continue
        if mask.quality < cfg.q_thresh:
            continue

        energy = energy_score(mask.scores, cfg.softmax_temperature)
        if energy > cfg.e_thresh:
            continue

        p = class_distribution(mask.scores, cfg.softmax_temperature)
        try:
            p_prime = reweight_degradation(p, mask.eta, cfg.beta)
        except AllMassDegraded:
            continue

        try:
            z_c = centroid_depth(mask.pixels, frame.depth, cfg.neighborhood_radius, mono)
        except NoDepthAvailable:
            continue
        u_c, v_c = mask_centroid(mask.pixels)
        point_cam = back_project(u_c, v_c, z_c, frame.intrinsics)
        point_base = to_base_frame(point_cam, extrinsics)

        best_label = mask.labels[int(np.argmax(p_prime))]
        track = registry.observe(best_label, point_base, timestamp, float(p_prime.max()))

        for j, label in enumerate(mask.labels):
            candidates.append(
                ScoredCandidate(
                    mask=mask,
                    label=label,
                    label_index=j,
                    p_prime=float(p_prime[j]),
                    point_base=point_base,
                    track=track,
                    spatial=(float(u_c), float(v_c), float(z_c)),
                )
            )
    return candidates


def joint_score(
    candidate: ScoredCandidate,
    command: str,
    cfg: PerceptionConfig,
    scorer: SemanticScorer,
    language: str = "en",
) -> float:
    """lambda1 * log p' + lambda2 * sim(label, command)."""
    log_p = math.log(candidate.p_prime) if candidate.p_prime > 0 else -math.inf
    return cfg.lambda1 * log_p + cfg.lambda2 * scorer.score(candidate.label, command, language)


def select_candidate(
    candidates: list[ScoredCandidate],
    command: str,
    cfg: PerceptionConfig,
    scorer: SemanticScorer,
    language: str = "en",
) -> ScoredCandidate:
    """Argmax of the joint visuo-lingual score; ties go to the lowest track id."""
    if not candidates:
        raise NoCandidates("no localizable candidates to select from")
    return min(
        candidates,
        key=lambda c: (
            -joint_score(c, command, cfg, scorer, language),
            c.track.track_id,
            c.label_index,
        ),
    )


def select_target(
    candidates: list[ScoredCandidate],
    command: str,
    cfg: PerceptionConfig,
    scorer: SemanticScorer,
    language: str = "en",
) -> TrackedObject:
    """The Kalman-filtered object chosen by the joint score."""
    return select_candidate(candidates, command, cfg, scorer, language).track
