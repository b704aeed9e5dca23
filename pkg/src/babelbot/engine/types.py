"""Core command-pipeline types: instructions, primitives, plans, decisions."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional, Union

from babelbot.langid import LanguageTag

MIN_SPEED = 0.2
MAX_SPEED = 1.0
MAX_ANGULAR_SPEED = 90.0


class EngineError(Exception):
    """Base class for command-pipeline failures."""


class NonmonotoneNumbering(EngineError):
    """Action line numbers do not increase strictly from 1."""


class NegativeParameter(EngineError):
    """A physical parameter (distance, speed, duration) is not positive."""


class UnknownActionVerb(EngineError):
    """An action line does not match any known verb pattern."""


class LlmTimeout(EngineError):
    """The language-model endpoint did not answer within the deadline."""


class LlmProtocolError(EngineError):
    """The language-model endpoint returned a malformed response."""


class NoFixture(EngineError):
    """The mock client has no canned reply and no rule matched."""


class IndeterminateConfirmation(EngineError):
    """No confirmation template matched; the caller should re-prompt."""


@dataclass(frozen=True)
class Instruction:
    """One user command: text, language, issue timestamp (ms), session."""

    text: str
    language: LanguageTag
    issued_at: int
    session_id: str = ""

    def __post_init__(self) -> None:
        if not self.text:
            raise ValueError("instruction text must be non-empty")


@dataclass(frozen=True)
class Interpretation:
    """The raw model completion split into summary text and action lines."""

    raw_reply: str
    summary: str
    plan_lines: tuple[str, ...]


# --- action primitives -------------------------------------------------


@dataclass(frozen=True)
class MoveLinear:
    direction: str  # "fwd" | "back"
    distance_m: float
    speed_mps: float


@dataclass(frozen=True)
class Rotate:
    direction: str  # "left" | "right"
    angle_deg: float
    angular_speed_degps: float


@dataclass(frozen=True)
class NavigateToCoords:
    x: float
    y: float
    z: float
    speed_mps: float


@dataclass(frozen=True)
class NavigateToNamed:
    destination: str
    speed_mps: float


@dataclass(frozen=True)
class NavigateToObject:
    label: Optional[str]
    selector: str  # "named" | "best_confidence"


@dataclass(frozen=True)
class PatternMove:
    shape: str  # "circle" | "arc" | "rectangle" | "lshape"
    params: Mapping[str, float]
    speed_mps: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", dict(self.params))


@dataclass(frozen=True)
class Wait:
    seconds: float


@dataclass(frozen=True)
class DescribeSurroundings:
    pass


@dataclass(frozen=True)
class ReportPose:
    pass


@dataclass(frozen=True)
class CaptureImage:
    pass


# --- conditions for guarded actions ------------------------------------


@dataclass(frozen=True)
class DetectionAbove:
    label: Optional[str]
    prob: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.prob <= 1.0:
            raise ValueError(f"probability outside [0, 1]: {self.prob}")


@dataclass(frozen=True)
class ObstacleCloser:
    distance_m: float

    def __post_init__(self) -> None:
        if self.distance_m <= 0:
            raise NegativeParameter("obstacle distance must be > 0")


@dataclass(frozen=True)
class ElapsedOver:
    seconds: float

    def __post_init__(self) -> None:
        if self.seconds <= 0:
            raise NegativeParameter("elapsed threshold must be > 0")


@dataclass(frozen=True)
class TravelTimeOver:
    seconds: float
    speed_mps: float
    goal: tuple[float, float, float]

    def __post_init__(self) -> None:
        if self.seconds <= 0 or self.speed_mps <= 0:
            raise NegativeParameter("travel-time threshold and speed must be > 0")


Condition = Union[DetectionAbove, ObstacleCloser, ElapsedOver, TravelTimeOver]


@dataclass(frozen=True)
class Guarded:
    condition: Condition
    then: "ActionPrimitive"
    otherwise: Optional["ActionPrimitive"] = None


ActionPrimitive = Union[
    MoveLinear,
    Rotate,
    NavigateToCoords,
    NavigateToNamed,
    NavigateToObject,
    PatternMove,
    Wait,
    DescribeSurroundings,
    ReportPose,
    CaptureImage,
    Guarded,
]

_MOTION_KINDS = (
    MoveLinear,
    Rotate,
    NavigateToCoords,
    NavigateToNamed,
    NavigateToObject,
    PatternMove,
)


def causes_motion(primitive: ActionPrimitive) -> bool:
    """True when executing the primitive can physically move the robot."""
    if isinstance(primitive, Guarded):
        branches = [primitive.then]
        if primitive.otherwise is not None:
            branches.append(primitive.otherwise)
        return any(causes_motion(b) for b in branches)
    return isinstance(primitive, _MOTION_KINDS)


class Provenance(Enum):
    LLM = "llm"
    MOCK = "mock"


@dataclass(frozen=True)
class ActionPlan:
    """Ordered primitives with the confirmation flag and parse annotations.

    ``unparseable`` holds verbatim lines that matched no verb pattern; a
    plan carrying any is surfaced to the user and counted failed by the
    metrics, but never silently dropped.
    """

    actions: tuple[ActionPrimitive, ...]
    language: LanguageTag
    requires_confirmation: bool
    provenance: Provenance = Provenance.MOCK
    annotations: tuple[str, ...] = ()
    unparseable: tuple[str, ...] = ()

    @property
    def parse_failed(self) -> bool:
        return bool(self.unparseable)


def plan_requires_confirmation(actions: tuple[ActionPrimitive, ...]) -> bool:
    """Multistep rule: confirm iff at least two primitives cause motion."""
    return sum(1 for a in actions if causes_motion(a)) >= 2


@dataclass(frozen=True)
class ConfirmationDecision:
    """Binary approve/reject with the winning template and linear score."""

    value: int  # 1 = execute, 0 = discard
    matched_template: str
    score: float

    def __post_init__(self) -> None:
        if self.value not in (0, 1):
            raise ValueError("decision value must be 0 or 1")
        if (self.value == 1) != (self.score > 0):
            raise ValueError("value must be 1 iff score > 0")


@dataclass(frozen=True)
class PromptBundle:
    """Ordered system-prompt sections plus the user message."""

    system_sections: tuple[tuple[str, str], ...]
    user_message: str

    SECTION_ORDER = (
        "identity_status",
        "action_definitions",
        "navigation_rules",
        "few_shot_examples",
        "language_instruction",
    )

    def system_text(self) -> str:
        return "\n\n".join(text for _, text in self.system_sections)

    def section(self, name: str) -> str:
        for key, text in self.system_sections:
            if key == name:
                return text
        raise KeyError(name)
