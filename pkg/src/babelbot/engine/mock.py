"""Deterministic offline substitute for the LLM: fixtures plus English rules.

The fixture corpus is JSONL, one record per turn:
``{"lang": code, "text": command, "reply": completion, "gold_actions": [...]}``.
Lookup is by (normalized text, language) first and normalized text alone
second, so near-miss language detection between close languages never
changes the canned reply. The rule fallback covers the English action
grammar for simple commands when no fixture exists.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Optional

from babelbot.engine.llm import MAX_TOKENS, TEMPERATURE, split_reply
from babelbot.engine.types import Instruction, Interpretation, NoFixture

_NUM = r"[-+]?\d+(?:[.,]\d+)?"
_LEN = r"(m\b|meters?|metres?|cm\b|centimeters?|centimetres?)"


def normalize_command(text: str) -> str:
    text = re.sub(r"\s+", " ", text.casefold().strip())
    return text.rstrip(".!?؟。！？ ")


@dataclass(frozen=True)
class FixtureRecord:
    lang: str
    text: str
    reply: str
    gold_actions: tuple[str, ...]


class FixtureCorpus:
    def __init__(self, records: list[FixtureRecord]):
        self.records = records
        self._by_text_lang: dict[tuple[str, str], FixtureRecord] = {}
        self._by_text: dict[str, FixtureRecord] = {}
        for rec in records:
            key = normalize_command(rec.text)
            self._by_text_lang[(key, rec.lang)] = rec
            self._by_text.setdefault(key, rec)

    def __len__(self) -> int:
        return len(self.records)

    @classmethod
    def load(cls, path: Path) -> "FixtureCorpus":
        records = []
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                data = json.loads(line)
                records.append(
                    FixtureRecord(
                        lang=data["lang"],
                        text=data["text"],
                        reply=data["reply"],
                        gold_actions=tuple(data.get("gold_actions", ())),
                    )
                )
        return cls(records)

    @classmethod
    def bundled(cls) -> "FixtureCorpus":
        root = resources.files("babelbot").joinpath("data/fixtures/corpus.jsonl")
        with resources.as_file(root) as path:
            return cls.load(Path(path))

    def lookup(self, text: str, lang: str | None = None) -> Optional[FixtureRecord]:
        key = normalize_command(text)
        if lang is not None:
            rec = self._by_text_lang.get((key, lang))
            if rec is not None:
                return rec
        return self._by_text.get(key)


def _n(text: str) -> float:
    return float(text.replace(",", "."))


def _fmt(value: float) -> str:
    return f"{value:g}"


def _meters(value: float, unit: str) -> float:
    return value / 100.0 if unit.startswith(("cm", "centi")) else value


def _rule_move(m: re.Match) -> str:
    direction = "forward" if m.group("dir").lower() in ("forward", "ahead") else "backward"
    dist = _meters(_n(m.group("d")), m.group("u").lower())
    speed = _n(m.group("v")) if m.group("v") else 0.2
    return f"Move {direction} {_fmt(dist)} m at {_fmt(speed)} m/s."


def _rule_turn(m: re.Match) -> str:
    direction = (m.group("dir") or "left").lower()
    angle = _n(m.group("a")) if m.group("a") else 90.0
    speed = _n(m.group("w")) if m.group("w") else 30.0
    return f"Turn {direction} {_fmt(angle)} deg at {_fmt(speed)} deg/s."


def _rule_circle(m: re.Match) -> str:
    radius = _meters(_n(m.group("r")), m.group("u").lower())
    if m.group("kind").lower() == "diameter":
        radius /= 2.0
    speed = 1.0 if m.group("vmax") else (_n(m.group("v")) if m.group("v") else 0.5)
    return f"Move in a circle of radius {_fmt(radius)} m at {_fmt(speed)} m/s."


def _rule_coords(m: re.Match) -> str:
    x, y = _n(m.group("x")), _n(m.group("y"))
    z = _n(m.group("z")) if m.group("z") else 0.0
    speed = _n(m.group("v")) if m.group("v") else 0.5
    return f"Navigate to the coordinates x = {_fmt(x)}, y = {_fmt(y)}, z = {_fmt(z)} at {_fmt(speed)} m/s."


def _rule_detected(m: re.Match) -> str:
    return f"Navigate to the detected {m.group('label').strip().lower()}."


def _rule_named(m: re.Match) -> str:
    dest = m.group("dest").strip().strip('"').lower()
    speed = _n(m.group("v")) if m.group("v") else 0.5
    return f"Navigate to the {dest} at {_fmt(speed)} m/s."


def _rule_wait(m: re.Match) -> str:
    return f"Wait {_fmt(_n(m.group('t')))} seconds."


_AT_V = rf"(?:.*?\bat\s+(?P<v>{_NUM})\s*m/s)?"

_RULES: list[tuple[re.Pattern, Callable[[re.Match], str]]] = [
    (
        re.compile(
            rf"\b(?P<dir>forward|ahead|backwards?|back)\b.*?(?P<d>{_NUM})\s*(?P<u>{_LEN}){_AT_V}",
            re.IGNORECASE,
        ),
        _rule_move,
    ),
    (
        re.compile(
            rf"\bcircle\b.*?\b(?P<kind>radius|diameter)\b\D*?(?P<r>{_NUM})\s*(?P<u>{_LEN})"
            rf"(?:.*?(?:\bat\s+(?P<v>{_NUM})\s*m/s|(?P<vmax>maximum speed)))?",
            re.IGNORECASE,
        ),
        _rule_circle,
    ),
    (
        re.compile(
            rf"\b(?:turn|rotate)\b(?:\s+(?P<dir>left|right))?"
            rf"(?:\s+(?:by\s+|a full\s+)?(?P<a>{_NUM})\s*deg(?:rees?)?)?"
            rf"(?:.*?\bat\s+(?P<w>{_NUM})\s*deg(?:rees?)?/s)?",
            re.IGNORECASE,
        ),
        _rule_turn,
    ),
    (
        re.compile(
            rf"(?:coordinates?|location|position)\D*?x\s*=\s*(?P<x>{_NUM})\s*,\s*y\s*=\s*(?P<y>{_NUM})"
            rf"(?:\s*,\s*z\s*=\s*(?P<z>{_NUM}))?{_AT_V}",
            re.IGNORECASE,
        ),
        _rule_coords,
    ),
    (
        re.compile(
            rf"\(\s*(?P<x>{_NUM})\s*,\s*(?P<y>{_NUM})(?:\s*,\s*(?P<z>{_NUM}))?\s*\){_AT_V}",
            re.IGNORECASE,
        ),
        _rule_coords,
    ),
    (
        re.compile(
            r"\b(?:to(?:wards?)?|at)\s+(?:the|any)\s+detected\s+(?P<label>[\w -]+?)\b(?:\s+you)?\s*$",
            re.IGNORECASE,
        ),
        _rule_detected,
    ),
    (
        re.compile(r"\b(?P<label>[\w-]+)\s+you\s+(?:have\s+)?detected\b", re.IGNORECASE),
        _rule_detected,
    ),
    (
        re.compile(rf"\b(?:wait|stay(?:\s+there)?)\s+(?:for\s+)?(?P<t>{_NUM})\s*sec", re.IGNORECASE),
        _rule_wait,
    ),
    (
        re.compile(r"\bdescribe\b.*\bsurroundings?\b", re.IGNORECASE),
        lambda m: "Describe surroundings.",
    ),
    (
        re.compile(r"\breport\b.*\b(?:pose|position|orientation)\b", re.IGNORECASE),
        lambda m: "Report pose.",
    ),
    (
        re.compile(r"\b(?:photo|image|picture|snapshot)\b", re.IGNORECASE),
        lambda m: "Capture image.",
    ),
    (
        re.compile(
            rf"\b(?:head|go|navigate|return)\s+(?:back\s+)?to\s+(?:the\s+)?(?P<dest>[\w' -]+?)"
            rf"(?:\s+at\s+(?P<v>{_NUM})\s*m/s)?\s*$",
            re.IGNORECASE,
        ),
        _rule_named,
    ),
]

_CLAUSE_SPLIT = re.compile(
    r"\s*(?:,\s*and\s+then\s+|,\s*then\s+|\band\s+then\b|\bthen\b|,\s*and\s+|;\s*|\.\s+)\s*",
    re.IGNORECASE,
)


def rule_reply(text: str) -> Optional[str]:
    """Generate Action lines for an English command, or None if no rule fires."""
    clauses = [c for c in _CLAUSE_SPLIT.split(text.strip()) if c.strip()]
    lines: list[str] = []
    for clause in clauses:
        for pattern, builder in _RULES:
            m = pattern.search(clause)
            if m:
                lines.append(builder(m))
                break
    if not lines:
        return None
    return "\n".join(f"Action {k}: {line}" for k, line in enumerate(lines, start=1))


class MockLanguageModel:
    """LanguageModelClient backed by the fixture corpus and the rule grammar."""

    def __init__(self, corpus: FixtureCorpus | None = None, enable_rules: bool = True):
        self.corpus = corpus
        self.enable_rules = enable_rules

    def complete(
        self,
        messages: list[dict[str, str]],
        *,
        temperature: float = TEMPERATURE,
        max_tokens: int = MAX_TOKENS,
    ) -> str:
        user_text = ""
        for message in messages:
            if message.get("role") == "user":
                user_text = message.get("content", "")
        if self.corpus is not None:
            rec = self.corpus.lookup(user_text)
            if rec is not None:
                return rec.reply
        if self.enable_rules:
            reply = rule_reply(user_text)
            if reply is not None:
                return reply
        raise NoFixture(f"no fixture or rule for: {user_text!r}")


def mock_complete(instr: Instruction, fixtures: FixtureCorpus) -> Interpretation:
    """Fixture lookup by (text, language), then text alone, then English rules."""
    rec = fixtures.lookup(instr.text, instr.language.code)
    raw = rec.reply if rec is not None else rule_reply(instr.text)
    if raw is None:
        raise NoFixture(f"no fixture or rule for: {instr.text!r}")
    summary, plan_lines = split_reply(raw)
    return Interpretation(raw_reply=raw, summary=summary, plan_lines=plan_lines)
