"""System-prompt construction: five ordered sections plus the user turn."""

from __future__ import annotations

from dataclasses import dataclass

from babelbot.engine.types import MAX_ANGULAR_SPEED, MAX_SPEED, MIN_SPEED, PromptBundle
from babelbot.langid import LanguageTag

LANGUAGE_NAMES = {
    "en": "English",
    "de": "German",
    "es": "Spanish",
    "fr": "French",
    "it": "Italian",
    "pt": "Portuguese",
    "ru": "Russian",
    "zh": "Chinese",
    "ar": "Arabic",
    "hi": "Hindi",
    "pcm": "Nigerian Pidgin",
    "sw": "Swahili",
    "ja": "Japanese",
    "tr": "Turkish",
}

_COMPASS = ("east", "northeast", "north", "northwest", "west", "southwest", "south", "southeast")


def compass_facing(yaw_deg: float) -> str:
    """8-way compass word for a yaw in degrees (0 = east, counterclockwise)."""
    return _COMPASS[int(((yaw_deg % 360.0) + 22.5) // 45.0) % 8]


def language_name(code: str) -> str:
    return LANGUAGE_NAMES.get(code, code)


@dataclass(frozen=True)
class RobotContext:
    """Pose and speed limits interpolated into the identity section."""

    x: float
    y: float
    z: float
    yaw_deg: float
    min_speed: float = MIN_SPEED
    max_speed: float = MAX_SPEED
    max_angular_speed: float = MAX_ANGULAR_SPEED


FEW_SHOT_EXAMPLES = """\
Example 1 - movement commands:
User: Move forward 2 meters at 0.2m/s and then turn right at 30 deg/s.
Robot:
Action 1: Move forward 2 m at 0.2 m/s.
Action 2: Turn right 90 deg at 30 deg/s.

Example 2 - goal-directed navigation:
User: Navigate between (2, 3, 0) and the kitchen at 0.5 m/s.
Robot:
Action 1: Navigate to the coordinates x = 2, y = 3, z = 0 at 0.5 m/s.
Action 2: Navigate to the kitchen at 0.5 m/s.

Example 3 - object-based navigation:
User: Move toward the chair you detected.
Robot:
Action 1: Navigate to the detected chair.

Example 4 - geometric pattern:
User: Move in a circle with a diameter of 2 meters at your maximum speed.
Robot:
Action 1: Move in a circle of radius 1 m at 1 m/s.

Example 5 - multi-step composite task:
User: Turn left 90 degrees, move forward 4 meters, head to the kitchen, \
describe the surroundings, and go to the object you detect with the highest confidence.
Robot:
Action 1: Turn left 90 deg at 30 deg/s.
Action 2: Move forward 4 m at 0.2 m/s.
Action 3: Navigate to the kitchen at 0.5 m/s.
Action 4: Describe surroundings.
Action 5: Go to the detected object with the highest confidence."""


def build_system_prompt(
    robot_ctx: RobotContext,
    destinations: list[str],
    language: LanguageTag,
    user_message: str = "",
) -> PromptBundle:
    """Assemble the five prompt sections in their fixed order."""
    if not destinations:
        raise ValueError("destination list must be non-empty")

    lang = language_name(language.code)
    identity = (
        "You are BabelBot, a physical multilingual mobile robot operating on a mapped "
        f"indoor floor. Your maximum and minimum linear speeds are {robot_ctx.max_speed:g} m/s "
        f"and {robot_ctx.min_speed:g} m/s, and your rotation speed ranges from 0 deg/s to "
        f"{robot_ctx.max_angular_speed:g} deg/s. You have access to the following information: "
        f"current orientation (yaw): {robot_ctx.yaw_deg:g} degrees, facing "
        f"{compass_facing(robot_ctx.yaw_deg)}, and position: x = {robot_ctx.x:g}, "
        f"y = {robot_ctx.y:g}, z = {robot_ctx.z:g}. You understand and process instructions "
        f"in {lang}. Answer any queries related to your capabilities or status."
    )

    action_defs = (
        "Your task is to interpret the user's command and convert it into one or more of "
        "the following actions. Navigation: Move forward/backward <d> m at <v> m/s; "
        "Turn left/right <a> deg at <w> deg/s; Navigate to the coordinates x = <x>, "
        "y = <y>, z = <z> at <v> m/s; Navigate to the <destination> at <v> m/s; "
        "Navigate to the detected <object>; Go to the detected object with the highest "
        "confidence. Pattern movement: Move in a circle of radius <r> m at <v> m/s; "
        "Perform a <a> deg arc of radius <r> m at <v> m/s; Move in a rectangle of length "
        "<l> m and breadth <b> m at <v> m/s; Make an L-shape path of <h> m horizontal and "
        "<w> m vertical at <v> m/s. Environmental sensing and status: Describe "
        "surroundings; Report pose; Capture image; Wait <t> seconds."
    )

    nav_rules = (
        "Always respond in the SAME language as the user's input. You can navigate to "
        "specific coordinates, to named destinations from the following list: "
        f"{', '.join(destinations)}, or to objects detected in your surroundings. "
        "For commands: generate a numbered action list, one line per action, formatted "
        "exactly as 'Action <k>: <action>.'. For queries: provide concise, helpful "
        "answers without action lines. Be conversational and helpful in your tone."
    )

    lang_instruction = (
        f"You should respond in {lang}. Always use the action names in English exactly "
        "as provided, even if the rest of your response is in another language."
    )

    return PromptBundle(
        system_sections=(
            ("identity_status", identity),
            ("action_definitions", action_defs),
            ("navigation_rules", nav_rules),
            ("few_shot_examples", FEW_SHOT_EXAMPLES),
            ("language_instruction", lang_instruction),
        ),
        user_message=user_message,
    )
