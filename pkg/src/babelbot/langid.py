"""Character-trigram language identification and per-session language state.

Detection compares the trigram frequency profile of the input text against
per-language profiles shipped as data files (one ``trigram<TAB>frequency``
line per entry, UTF-8). A script pre-filter keeps e.g. Han text from ever
matching a Latin-only profile. Detection is deterministic: ties are broken
by profile size, then by language code.
"""

from __future__ import annotations

import math
import re
import time
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Iterable


class Script(Enum):
    LATIN = "Latin"
    CYRILLIC = "Cyrillic"
    HAN = "Han"
    ARABIC = "Arabic"
    DEVANAGARI = "Devanagari"
    OTHER = "Other"


class LangidError(Exception):
    """Base class for language-identification failures."""


class EmptyText(LangidError):
    """Input text is empty after whitespace trimming."""


class NoProfileMatch(LangidError):
    """No profile scored above the similarity floor."""


SCORE_FLOOR = 0.05

_WS_RE = re.compile(r"\s+")


@dataclass(frozen=True)
class LanguageTag:
    """A detected or user-set language: lowercase code, script, confidence."""

    code: str
    script: Script = Script.LATIN
    confidence: float = 1.0

    def __post_init__(self) -> None:
        if not self.code or self.code != self.code.lower():
            raise ValueError(f"language code must be non-empty lowercase: {self.code!r}")
        if not 0.0 <= self.confidence <= 1.0:
            raise ValueError(f"confidence outside [0, 1]: {self.confidence}")


class LanguageSource(Enum):
    DETECTED = "detected"
    OVERRIDE = "override"


@dataclass
class SessionLanguageState:
    """Per-session language state; an override pins the language until cleared."""

    current: LanguageTag
    source: LanguageSource = LanguageSource.DETECTED
    history: list[tuple[float, LanguageTag]] = field(default_factory=list)

    def set_override(self, code: str, script: Script = Script.OTHER) -> None:
        tag = LanguageTag(code=code, script=script, confidence=1.0)
        self.current = tag
        self.source = LanguageSource.OVERRIDE
        self.history.append((time.time(), tag))

    def clear_override(self) -> None:
        self.source = LanguageSource.DETECTED


def dominant_script(text: str) -> Script:
    """Majority script over the letter characters of ``text``."""
    counts: dict[Script, int] = {}
    for ch in text:
        if not ch.isalpha():
            continue
        counts[_char_script(ch)] = counts.get(_char_script(ch), 0) + 1
    if not counts:
        return Script.OTHER
    return max(counts.items(), key=lambda kv: (kv[1], kv[0].value))[0]


def _char_script(ch: str) -> Script:
    cp = ord(ch)
    if 0x0041 <= cp <= 0x024F or 0x1E00 <= cp <= 0x1EFF:
        return Script.LATIN
    if 0x0400 <= cp <= 0x052F:
        return Script.CYRILLIC
    if 0x4E00 <= cp <= 0x9FFF or 0x3400 <= cp <= 0x4DBF or 0x3040 <= cp <= 0x30FF:
        return Script.HAN
    if 0x0600 <= cp <= 0x077F or 0x08A0 <= cp <= 0x08FF or 0xFB50 <= cp <= 0xFDFF:
        return Script.ARABIC
    if 0x0900 <= cp <= 0x097F:
        return Script.DEVANAGARI
    return Script.OTHER


def text_trigrams(text: str) -> dict[str, float]:
    """Relative character-trigram frequencies of normalized text."""
    norm = " " + _WS_RE.sub(" ", text.casefold().strip()) + " "
    norm = unicodedata.normalize("NFC", norm)
    counts: dict[str, int] = {}
    for i in range(len(norm) - 2):
        tri = norm[i : i + 3]
        counts[tri] = counts.get(tri, 0) + 1
    total = sum(counts.values())
    if total == 0:
        return {}
    return {tri: c / total for tri, c in counts.items()}


@dataclass(frozen=True)
class LanguageProfile:
    """Trigram frequency profile for one language.

    ``size`` is the number of distinct trigrams, used as the tie-break
    proxy for training-corpus size (derivable from the data file alone).
    """

    code: str
    script: Script
    freqs: dict[str, float]
    norm: float

    @property
    def size(self) -> int:
        return len(self.freqs)

    @classmethod
    def from_text(cls, code: str, text: str) -> "LanguageProfile":
        freqs = text_trigrams(text)
        return cls(
            code=code,
            script=dominant_script(text),
            freqs=freqs,
            norm=math.sqrt(sum(f * f for f in freqs.values())),
        )

    @classmethod
    def from_file(cls, code: str, path: Path) -> "LanguageProfile":
        freqs: dict[str, float] = {}
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.rstrip("\n")
                if not line:
                    continue
                tri, _, freq = line.partition("\t")
                freqs[tri] = float(freq)
        script = dominant_script("".join(freqs))
        return cls(
            code=code,
            script=script,
            freqs=freqs,
            norm=math.sqrt(sum(f * f for f in freqs.values())),
        )

    def save(self, path: Path) -> None:
        lines = [f"{tri}\t{freq:.8g}" for tri, freq in sorted(self.freqs.items())]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")


class LanguageProfileSet:
    """The set of language profiles detection scores against."""

    def __init__(self, profiles: Iterable[LanguageProfile]):
        self.profiles = sorted(profiles, key=lambda p: p.code)
        if not self.profiles:
            raise ValueError("profile set is empty")

    @classmethod
    def from_dir(cls, directory: Path) -> "LanguageProfileSet":
        profiles = []
        for path in sorted(Path(directory).glob("*.tsv")):
            profiles.append(LanguageProfile.from_file(path.stem, path))
        return cls(profiles)

    @classmethod
    def bundled(cls) -> "LanguageProfileSet":
        root = resources.files("babelbot").joinpath("data/profiles")
        with resources.as_file(root) as directory:
            return cls.from_dir(Path(directory))

    def codes(self) -> list[str]:
        return [p.code for p in self.profiles]


def _cosine(text_freqs: dict[str, float], profile: LanguageProfile) -> float:
    dot = 0.0
    for tri, f in text_freqs.items():
        pf = profile.freqs.get(tri)
        if pf is not None:
            dot += f * pf
    if dot == 0.0:
        return 0.0
    tnorm = math.sqrt(sum(f * f for f in text_freqs.values()))
    return dot / (tnorm * profile.norm)


def detect_language(text: str, profiles: LanguageProfileSet) -> LanguageTag:
    """Detect the language of ``text`` against ``profiles``.

    Candidates are pre-filtered by dominant script; the best cosine
    similarity wins, ties broken by larger profile size then code order.
    Confidence is the normalized margin between the top two candidates.
    """
    if not text or not text.strip():
        raise EmptyText("cannot detect language of empty text")

    script = dominant_script(text)
    candidates = [p for p in profiles.profiles if p.script == script]
    if not candidates:
        candidates = profiles.profiles

    freqs = text_trigrams(text)
    scored = sorted(
        ((_cosine(freqs, p), p) for p in candidates),
        key=lambda sp: (-sp[0], -sp[1].size, sp[1].code),
    )
    best_score, best = scored[0]
    if best_score < SCORE_FLOOR:
        raise NoProfileMatch(f"best similarity {best_score:.4f} below floor {SCORE_FLOOR}")

    if len(scored) > 1 and best_score > 0:
        confidence = (best_score - scored[1][0]) / best_score
    else:
        confidence = 1.0
    return LanguageTag(code=best.code, script=best.script, confidence=min(max(confidence, 0.0), 1.0))


def resolve_session_language(state: SessionLanguageState, detected: LanguageTag) -> LanguageTag:
    """Apply the override-bypass rule and record detection history.

    When an override is active the detected tag is discarded entirely;
    otherwise the session adopts the detected language.
    """
    if state.source is LanguageSource.OVERRIDE:
        return state.current
    state.current = detected
    state.history.append((time.time(), detected))
    return detected
