"""Uncertainty-aware visuo-lingual grounding and 3D object tracking."""

from babelbot.perception.types import (
    AllMassDegraded,
    CameraIntrinsics,
    DegenerateMask,
    InvalidTransform,
    MaskCandidate,
    MaskObservation,
    NoCandidates,
    NoDepthAvailable,
    NonFiniteScore,
    NonPositiveDepth,
    NumericalDivergence,
    PerceptionConfig,
    PerceptionError,
    PerceptionFrame,
    ScoredCandidate,
    TrackedObject,
)
from babelbot.perception.scoring import (
    class_distribution,
    convex_hull,
    energy_score,
    evaluate_mask,
    hull_cell_area,
    mask_quality,
    reweight_degradation,
    shoelace_area,
)
from babelbot.perception.geometry import (
    MonocularDepthSource,
    RigidTransform,
    back_project,
    camera_extrinsics,
    centroid_depth,
    mask_centroid,
    project,
    to_base_frame,
)
from babelbot.perception.kalman import (
    TrackRegistry,
    default_measurement_noise,
    default_process_noise,
    track_predict,
    track_update,
    transition_matrix,
)
from babelbot.perception.scorer import LexicalScorer, SemanticScorer
from babelbot.perception.pipeline import (
    joint_score,
    process_frame,
    select_candidate,
    select_target,
)
from babelbot.perception.sources import (
    FixtureFrameSource,
    PerceptionSource,
    SyntheticMonocularDepth,
    decode_rle,
    encode_rle,
    frame_from_json,
    frame_to_json,
)

__all__ = [name for name in dir() if not name.startswith("_")]
