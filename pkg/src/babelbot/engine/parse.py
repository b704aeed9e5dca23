"""Hierarchical parser for numbered action lines, plus the canonical formatter.

The line grammar is ``Action <k>: <verb phrase>`` with k strictly increasing
from 1. Each phrase maps to exactly one primitive; numbers carry units
(m, meter(s), cm, deg, m/s, deg/s, seconds) and centimeters are converted
to meters at the boundary. Decimal commas are accepted when directly
between digits ("2,5"), so list commas ("x = 2, y = 3") stay separators.

``format_plan(parse_action_lines(lines))`` re-parses to a structurally
identical plan; the canonical strings double as the action vocabulary of
the interaction logs.
"""

from __future__ import annotations

import re
from typing import Optional

from babelbot.engine.types import (
    MAX_ANGULAR_SPEED,
    MAX_SPEED,
    MIN_SPEED,
    ActionPlan,
    ActionPrimitive,
    CaptureImage,
    Condition,
    DescribeSurroundings,
    DetectionAbove,
    ElapsedOver,
    Guarded,
    MoveLinear,
    NavigateToCoords,
    NavigateToNamed,
    NavigateToObject,
    NegativeParameter,
    NonmonotoneNumbering,
    ObstacleCloser,
    PatternMove,
    Provenance,
    ReportPose,
    Rotate,
    TravelTimeOver,
    Wait,
    plan_requires_confirmation,
)
from babelbot.langid import LanguageTag

DEFAULT_LINEAR_SPEED = 0.2
DEFAULT_NAV_SPEED = 0.5
DEFAULT_ANGULAR_SPEED = 30.0
DEFAULT_ROTATE_ANGLE = 90.0

ACTION_LINE_RE = re.compile(r"^\s*Action\s+(\d+)\s*:\s*(.+?)\s*$", re.IGNORECASE)

_NUM = r"[-+]?\d+(?:[.,]\d+)?"
_LEN = r"(m|meters?|metres?|cm|centimeters?|centimetres?)\b"
_AT_SPEED = rf"(?:\s+at\s+({_NUM})\s*m/s)?"
_AT_ANG = rf"(?:\s+at\s+({_NUM})\s*deg(?:rees?)?/s(?:ec)?)?"


def _num(text: str) -> float:
    return float(text.replace(",", "."))


def _length_m(value: float, unit: str) -> float:
    if unit.startswith(("cm", "centi")):
        return value / 100.0
    return value


def _fmt(value: float) -> str:
    return f"{value:g}"


class _PhraseParser:
    def __init__(self) -> None:
        self.annotations: list[str] = []

    def _speed(self, raw: Optional[str], default: float) -> float:
        speed = _num(raw) if raw else default
        if speed <= 0:
            raise NegativeParameter(f"speed must be > 0, got {speed}")
        clamped = min(max(speed, MIN_SPEED), MAX_SPEED)
        if clamped != speed:
            self.annotations.append(f"speed clamped {speed:g} -> {clamped:g} m/s")
        return clamped

    def _angular(self, raw: Optional[str], default: float) -> float:
        speed = _num(raw) if raw else default
        if speed <= 0:
            raise NegativeParameter(f"angular speed must be > 0, got {speed}")
        if speed > MAX_ANGULAR_SPEED:
            self.annotations.append(f"angular speed clamped {speed:g} -> {MAX_ANGULAR_SPEED:g} deg/s")
            speed = MAX_ANGULAR_SPEED
        return speed

    def _positive(self, value: float, what: str) -> float:
        if value <= 0:
            raise NegativeParameter(f"{what} must be > 0, got {value}")
        return value

    def parse(self, phrase: str) -> Optional[ActionPrimitive]:
        phrase = phrase.strip().rstrip(".").strip()

        m = re.fullmatch(
            rf"if\s+(.+?)\s*:\s*(.+?)(?:\s+else\s*:\s*(.+))?", phrase, re.IGNORECASE
        )
        if m:
            condition = self._parse_condition(m.group(1))
            if condition is None:
                return None
            then = self.parse(m.group(2))
            if then is None:
                return None
            otherwise = None
            if m.group(3):
                otherwise = self.parse(m.group(3))
                if otherwise is None:
                    return None
            return Guarded(condition=condition, then=then, otherwise=otherwise)

        m = re.fullmatch(
            rf"(?:move|go|drive)\s+(forward|ahead|backwards?|back)\s+({_NUM})\s*{_LEN}{_AT_SPEED}",
            phrase,
            re.IGNORECASE,
        )
        if m:
            direction = "fwd" if m.group(1).lower() in ("forward", "ahead") else "back"
            distance = self._positive(_length_m(_num(m.group(2)), m.group(3).lower()), "distance")
            return MoveLinear(direction, distance, self._speed(m.group(4), DEFAULT_LINEAR_SPEED))

        m = re.fullmatch(
            rf"(?:turn|rotate)(?:\s+(left|right))?(?:\s+(?:by\s+)?({_NUM})\s*deg(?:rees?)?)?{_AT_ANG}",
            phrase,
            re.IGNORECASE,
        )
        if m and (m.group(1) or m.group(2) or m.group(3)):
            direction = (m.group(1) or "left").lower()
            angle = self._positive(
                _num(m.group(2)) if m.group(2) else DEFAULT_ROTATE_ANGLE, "angle"
            )
            return Rotate(direction, angle, self._angular(m.group(3), DEFAULT_ANGULAR_SPEED))

        m = re.fullmatch(
            rf"(?:navigate|go|head)\s+to\s+(?:the\s+)?coordinates?\s+"
            rf"x\s*=\s*({_NUM})\s*,\s*y\s*=\s*({_NUM})(?:\s*,\s*z\s*=\s*({_NUM}))?{_AT_SPEED}",
            phrase,
            re.IGNORECASE,
        )
        if m:
            return NavigateToCoords(
                _num(m.group(1)),
                _num(m.group(2)),
                _num(m.group(3)) if m.group(3) else 0.0,
                self._speed(m.group(4), DEFAULT_NAV_SPEED),
            )

        m = re.fullmatch(
            r"(?:navigate|go|head)\s+to\s+the\s+detected\s+object\s+with\s+the\s+highest"
            r"\s+(?:detection\s+)?confidence",
            phrase,
            re.IGNORECASE,
        )
        if m:
            return NavigateToObject(label=None, selector="best_confidence")

        m = re.fullmatch(
            r"(?:navigate|go|head|move)\s+to(?:wards?)?\s+(?:the|any)\s+detected\s+(.+)",
            phrase,
            re.IGNORECASE,
        )
        if m:
            return NavigateToObject(label=m.group(1).strip().lower(), selector="named")

        m = re.fullmatch(
            rf"move\s+in\s+a\s+circle\s+of\s+radius\s+({_NUM})\s*{_LEN}{_AT_SPEED}",
            phrase,
            re.IGNORECASE,
        )
        if m:
            radius = self._positive(_length_m(_num(m.group(1)), m.group(2).lower()), "radius")
            return PatternMove("circle", {"radius_m": radius}, self._speed(m.group(3), DEFAULT_NAV_SPEED))

        m = re.fullmatch(
            rf"perform\s+an?\s+({_NUM})\s*deg(?:rees?)?\s+arc\s+of\s+radius\s+({_NUM})\s*{_LEN}{_AT_SPEED}",
            phrase,
            re.IGNORECASE,
        )
        if m:
            angle = self._positive(_num(m.group(1)), "arc angle")
            radius = self._positive(_length_m(_num(m.group(2)), m.group(3).lower()), "radius")
            return PatternMove(
                "arc",
                {"angle_deg": angle, "radius_m": radius},
                self._speed(m.group(4), DEFAULT_NAV_SPEED),
            )

        m = re.fullmatch(
            rf"move\s+in\s+a\s+rectangle\s+of\s+length\s+({_NUM})\s*{_LEN}\s+and\s+"
            rf"breadth\s+({_NUM})\s*{_LEN}{_AT_SPEED}",
            phrase,
            re.IGNORECASE,
        )
        if m:
            length = self._positive(_length_m(_num(m.group(1)), m.group(2).lower()), "length")
            breadth = self._positive(_length_m(_num(m.group(3)), m.group(4).lower()), "breadth")
            return PatternMove(
                "rectangle",
                {"length_m": length, "breadth_m": breadth},
                self._speed(m.group(5), DEFAULT_NAV_SPEED),
            )

        m = re.fullmatch(
            rf"move\s+in\s+a\s+square\s+pattern\s+of\s+side\s+({_NUM})\s*{_LEN}{_AT_SPEED}",
            phrase,
            re.IGNORECASE,
        )
        if m:
            side = self._positive(_length_m(_num(m.group(1)), m.group(2).lower()), "side")
            return PatternMove(
                "rectangle",
                {"length_m": side, "breadth_m": side},
                self._speed(m.group(3), DEFAULT_NAV_SPEED),
            )

        m = re.fullmatch(
            rf"make\s+an?\s+l-?shape\s+path\s+of\s+({_NUM})\s*{_LEN}\s+horizontal\s+and\s+"
            rf"({_NUM})\s*{_LEN}\s+vertical{_AT_SPEED}",
            phrase,
            re.IGNORECASE,
        )
        if m:
            horizontal = self._positive(_length_m(_num(m.group(1)), m.group(2).lower()), "horizontal leg")
            vertical = self._positive(_length_m(_num(m.group(3)), m.group(4).lower()), "vertical leg")
            return PatternMove(
                "lshape",
                {"horizontal_m": horizontal, "vertical_m": vertical},
                self._speed(m.group(5), DEFAULT_NAV_SPEED),
            )

        m = re.fullmatch(
            rf"(?:wait|stay(?:\s+there)?(?:\s+for)?)\s+({_NUM})\s*(?:s|sec|secs|seconds?)",
            phrase,
            re.IGNORECASE,
        )
        if m:
            return Wait(self._positive(_num(m.group(1)), "wait duration"))

        if re.fullmatch(r"describe\s+(?:the\s+|your\s+)?surroundings", phrase, re.IGNORECASE):
            return DescribeSurroundings()

        if re.fullmatch(
            r"report\s+(?:pose|(?:your\s+)?current\s+"
            r"(?:position|orientation|pose)(?:\s+and\s+(?:orientation|coordinates|position))?)",
            phrase,
            re.IGNORECASE,
        ):
            return ReportPose()

        if re.fullmatch(
            r"(?:capture\s+(?:an\s+)?image|take\s+a\s+(?:photo|picture|snapshot)"
            r"|send\s+(?:me\s+)?(?:an?\s+)?(?:image|photo|picture))",
            phrase,
            re.IGNORECASE,
        ):
            return CaptureImage()

        m = re.fullmatch(
            rf"(?:navigate|go|head|return)\s+(?:back\s+)?to\s+(?:the\s+)?(.+?){_AT_SPEED}",
            phrase,
            re.IGNORECASE,
        )
        if m:
            destination = m.group(1).strip().strip('"').lower()
            if destination:
                return NavigateToNamed(destination, self._speed(m.group(2), DEFAULT_NAV_SPEED))

        return None

    def _parse_condition(self, text: str) -> Optional[Condition]:
        text = text.strip()

        m = re.fullmatch(
            rf"you\s+detect\s+(?:any\s+object|an?\s+(.+?))\s+with\s+probability\s*"
            rf"(?:>=|≥|over|above)\s*({_NUM})\s*(%?)",
            text,
            re.IGNORECASE,
        )
        if m:
            prob = _num(m.group(2))
            if m.group(3) or prob > 1.0:
                prob /= 100.0
            label = m.group(1).strip().lower() if m.group(1) else None
            return DetectionAbove(label=label, prob=prob)

        m = re.fullmatch(
            rf"an?\s+obstacle\s+is\s+closer\s+than\s+({_NUM})\s*{_LEN}", text, re.IGNORECASE
        )
        if m:
            return ObstacleCloser(_length_m(_num(m.group(1)), m.group(2).lower()))

        m = re.fullmatch(
            rf"elapsed\s+time\s+exceeds\s+({_NUM})\s*(?:s|sec|secs|seconds?)", text, re.IGNORECASE
        )
        if m:
            return ElapsedOver(_num(m.group(1)))

        m = re.fullmatch(
            rf"travel\s+time\s+to\s+x\s*=\s*({_NUM})\s*,\s*y\s*=\s*({_NUM})(?:\s*,\s*z\s*=\s*({_NUM}))?"
            rf"\s+at\s+({_NUM})\s*m/s\s+exceeds\s+({_NUM})\s*(?:s|sec|secs|seconds?)",
            text,
            re.IGNORECASE,
        )
        if m:
            goal = (_num(m.group(1)), _num(m.group(2)), _num(m.group(3)) if m.group(3) else 0.0)
            return TravelTimeOver(seconds=_num(m.group(5)), speed_mps=_num(m.group(4)), goal=goal)

        return None


def parse_action_lines(
    lines: list[str] | tuple[str, ...],
    language: LanguageTag | None = None,
    provenance: Provenance = Provenance.MOCK,
) -> ActionPlan:
    """Parse numbered action lines into an :class:`ActionPlan`.

    Unknown verb phrases are kept verbatim in ``plan.unparseable`` rather
    than aborting the parse; numbering violations and non-positive
    physical parameters raise.
    """
    language = language or LanguageTag("en")
    parser = _PhraseParser()
    actions: list[ActionPrimitive] = []
    unparseable: list[str] = []

    expected = 1
    for line in lines:
        m = ACTION_LINE_RE.match(line)
        if not m:
            unparseable.append(line)
            continue
        k = int(m.group(1))
        if k != expected:
            raise NonmonotoneNumbering(f"expected Action {expected}, got Action {k}")
        expected += 1
        primitive = parser.parse(m.group(2))
        if primitive is None:
            unparseable.append(line)
        else:
            actions.append(primitive)

    return ActionPlan(
        actions=tuple(actions),
        language=language,
        requires_confirmation=plan_requires_confirmation(tuple(actions)),
        provenance=provenance,
        annotations=tuple(parser.annotations),
        unparseable=tuple(unparseable),
    )


# --- canonical formatting ----------------------------------------------


def format_condition(condition: Condition) -> str:
    if isinstance(condition, DetectionAbove):
        subject = f"a {condition.label}" if condition.label else "any object"
        return f"you detect {subject} with probability >= {_fmt(condition.prob * 100)}%"
    if isinstance(condition, ObstacleCloser):
        return f"an obstacle is closer than {_fmt(condition.distance_m)} m"
    if isinstance(condition, ElapsedOver):
        return f"elapsed time exceeds {_fmt(condition.seconds)} seconds"
    if isinstance(condition, TravelTimeOver):
        x, y, z = condition.goal
        return (
            f"travel time to x = {_fmt(x)}, y = {_fmt(y)}, z = {_fmt(z)} "
            f"at {_fmt(condition.speed_mps)} m/s exceeds {_fmt(condition.seconds)} seconds"
        )
    raise TypeError(f"unknown condition: {condition!r}")


def format_primitive(primitive: ActionPrimitive) -> str:
    """Canonical English phrase for one primitive, without the line prefix."""
    if isinstance(primitive, MoveLinear):
        word = "forward" if primitive.direction == "fwd" else "backward"
        return f"Move {word} {_fmt(primitive.distance_m)} m at {_fmt(primitive.speed_mps)} m/s"
    if isinstance(primitive, Rotate):
        return (
            f"Turn {primitive.direction} {_fmt(primitive.angle_deg)} deg "
            f"at {_fmt(primitive.angular_speed_degps)} deg/s"
        )
    if isinstance(primitive, NavigateToCoords):
        return (
            f"Navigate to the coordinates x = {_fmt(primitive.x)}, y = {_fmt(primitive.y)}, "
            f"z = {_fmt(primitive.z)} at {_fmt(primitive.speed_mps)} m/s"
        )
    if isinstance(primitive, NavigateToNamed):
        return f"Navigate to the {primitive.destination} at {_fmt(primitive.speed_mps)} m/s"
    if isinstance(primitive, NavigateToObject):
        if primitive.selector == "best_confidence":
            return "Go to the detected object with the highest confidence"
        return f"Navigate to the detected {primitive.label}"
    if isinstance(primitive, PatternMove):
        p = primitive.params
        speed = _fmt(primitive.speed_mps)
        if primitive.shape == "circle":
            return f"Move in a circle of radius {_fmt(p['radius_m'])} m at {speed} m/s"
        if primitive.shape == "arc":
            return (
                f"Perform a {_fmt(p['angle_deg'])} deg arc of radius "
                f"{_fmt(p['radius_m'])} m at {speed} m/s"
            )
        if primitive.shape == "rectangle":
            return (
                f"Move in a rectangle of length {_fmt(p['length_m'])} m and breadth "
                f"{_fmt(p['breadth_m'])} m at {speed} m/s"
            )
        if primitive.shape == "lshape":
            return (
                f"Make an L-shape path of {_fmt(p['horizontal_m'])} m horizontal and "
                f"{_fmt(p['vertical_m'])} m vertical at {speed} m/s"
            )
        raise ValueError(f"unknown pattern shape: {primitive.shape}")
    if isinstance(primitive, Wait):
        return f"Wait {_fmt(primitive.seconds)} seconds"
    if isinstance(primitive, DescribeSurroundings):
        return "Describe surroundings"
    if isinstance(primitive, ReportPose):
        return "Report pose"
    if isinstance(primitive, CaptureImage):
        return "Capture image"
    if isinstance(primitive, Guarded):
        text = f"If {format_condition(primitive.condition)}: {format_primitive(primitive.then)}"
        if primitive.otherwise is not None:
            text += f" else: {format_primitive(primitive.otherwise)}"
        return text
    raise TypeError(f"unknown primitive: {primitive!r}")


def format_plan(plan: ActionPlan) -> list[str]:
    """Canonical numbered action lines for a plan (parse round-trip)."""
    return [
        f"Action {k}: {format_primitive(a)}."
        for k, a in enumerate(plan.actions, start=1)
    ]


def canonical_actions(plan: ActionPlan) -> list[str]:
    """Canonical action strings without line numbering, for logs and metrics."""
    return [f"{format_primitive(a)}." for a in plan.actions]
