"""Quantitative-parameter extraction from canonical action strings."""

from __future__ import annotations

import math
import re
from enum import Enum


class Unit(Enum):
    METERS = "m"
    METERS_PER_S = "m/s"
    DEGREES = "deg"
    DEGREES_PER_S = "deg/s"
    SECONDS = "s"
    PERCENT = "%"
    NONE = ""


_PARAM_RE = re.compile(
    r"(?P<value>[-+]?\d+(?:[.,]\d+)?)\s*"
    r"(?P<unit>m/s|deg/s|rad/s|cm|mm|m\b|deg(?:rees?)?\b|rad\b|"
    r"centimet(?:er|re)s?\b|met(?:er|re)s?\b|s\b|sec(?:onds?)?\b|%)?",
    re.IGNORECASE,
)


def _normalize(value: float, unit: str) -> tuple[float, Unit]:
    unit = unit.lower()
    if unit in ("m", "meter", "meters", "metre", "metres"):
        return value, Unit.METERS
    if unit == "cm" or unit.startswith("centimet"):
        return value / 100.0, Unit.METERS
    if unit == "mm":
        return value / 1000.0, Unit.METERS
    if unit == "m/s":
        return value, Unit.METERS_PER_S
    if unit in ("deg", "degree", "degrees"):
        return value, Unit.DEGREES
    if unit == "rad":
        return math.degrees(value), Unit.DEGREES
    if unit == "deg/s":
        return value, Unit.DEGREES_PER_S
    if unit == "rad/s":
        return math.degrees(value), Unit.DEGREES_PER_S
    if unit in ("s", "sec", "second", "seconds"):
        return value, Unit.SECONDS
    if unit == "%":
        return value, Unit.PERCENT
    return value, Unit.NONE


def extract_params(action_string: str) -> list[tuple[float, Unit]]:
    """All numeric literals with attached units, in textual order.

    Units are normalized (cm to m, rad to deg); bare numbers carry
    :attr:`Unit.NONE`. No numbers means an empty list, never an error.
    """
    params: list[tuple[float, Unit]] = []
    for m in _PARAM_RE.finditer(action_string):
        value = float(m.group("value").replace(",", "."))
        unit = m.group("unit") or ""
        params.append(_normalize(value, unit))
    return params


def params_match(a: tuple[float, Unit], b: tuple[float, Unit], tol: float = 1e-6) -> bool:
    """Values match within tolerance after unit normalization, units agree."""
    return a[1] is b[1] and abs(a[0] - b[0]) <= tol
