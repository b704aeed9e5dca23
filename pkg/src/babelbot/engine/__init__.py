"""Instruction-to-plan pipeline: prompts, LLM clients, parsing, confirmation."""

from babelbot.engine.types import (
    ActionPlan,
    ActionPrimitive,
    CaptureImage,
    Condition,
    ConfirmationDecision,
    DescribeSurroundings,
    DetectionAbove,
    ElapsedOver,
    EngineError,
    Guarded,
    IndeterminateConfirmation,
    Instruction,
    Interpretation,
    LlmProtocolError,
    LlmTimeout,
    MoveLinear,
    NavigateToCoords,
    NavigateToNamed,
    NavigateToObject,
    NegativeParameter,
    NoFixture,
    NonmonotoneNumbering,
    ObstacleCloser,
    PatternMove,
    PromptBundle,
    Provenance,
    ReportPose,
    Rotate,
    TravelTimeOver,
    UnknownActionVerb,
    Wait,
    causes_motion,
    plan_requires_confirmation,
)
from babelbot.engine.parse import (
    ACTION_LINE_RE,
    canonical_actions,
    format_condition,
    format_plan,
    format_primitive,
    parse_action_lines,
)
from babelbot.engine.confirm import TemplateLexicon, classify_confirmation
from babelbot.engine.prompt import RobotContext, build_system_prompt, compass_facing, language_name
from babelbot.engine.llm import (
    HttpLanguageModel,
    LanguageModelClient,
    LlmSettings,
    interpret,
    split_reply,
)
from babelbot.engine.mock import FixtureCorpus, FixtureRecord, MockLanguageModel, mock_complete, rule_reply

__all__ = [name for name in dir() if not name.startswith("_")]
