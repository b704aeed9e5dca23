"""Template-based confirmation classifier for pending action plans.

The user's reply is matched against per-language positive and negative
template phrases; hits form the feature vector of a fixed linear scorer
(+1 per positive, -2 per negative). A negative hit suppresses positive
hits within the same clause, so "that's right, but do not run it" rejects.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from babelbot.engine.types import ConfirmationDecision, IndeterminateConfirmation
from babelbot.langid import LanguageTag

POSITIVE_WEIGHT = 1.0
NEGATIVE_WEIGHT = -2.0

_CLAUSE_SPLIT_RE = re.compile(r"[,;.!?،؟，。！？]+")


@dataclass(frozen=True)
class TemplateLexicon:
    """Positive/negative confirmation phrases per language code."""

    positive: dict[str, tuple[str, ...]]
    negative: dict[str, tuple[str, ...]]

    @classmethod
    def from_dir(cls, directory: Path) -> "TemplateLexicon":
        positive: dict[str, tuple[str, ...]] = {}
        negative: dict[str, tuple[str, ...]] = {}
        for path in sorted(Path(directory).glob("*.json")):
            data = json.loads(path.read_text(encoding="utf-8"))
            positive[path.stem] = tuple(data["positive"])
            negative[path.stem] = tuple(data["negative"])
        if not positive:
            raise ValueError(f"no lexicon files under {directory}")
        return cls(positive=positive, negative=negative)

    @classmethod
    def bundled(cls) -> "TemplateLexicon":
        root = resources.files("babelbot").joinpath("data/lexicon")
        with resources.as_file(root) as directory:
            return cls.from_dir(Path(directory))

    def languages(self) -> list[str]:
        return sorted(self.positive)

    def templates_for(self, code: str) -> tuple[tuple[str, ...], tuple[str, ...]]:
        """Templates for one language, or the cross-language union when unknown."""
        if code in self.positive:
            return self.positive[code], self.negative[code]
        pos = tuple(t for lang in sorted(self.positive) for t in self.positive[lang])
        neg = tuple(t for lang in sorted(self.negative) for t in self.negative[lang])
        return pos, neg

    def canonical_positive(self, code: str) -> str:
        return self.templates_for(code)[0][0]

    def canonical_negative(self, code: str) -> str:
        return self.templates_for(code)[1][0]


def _unsegmented(template: str) -> bool:
    # Han / kana scripts have no word boundaries to anchor on
    return any(0x3040 <= ord(ch) <= 0x9FFF or 0x3400 <= ord(ch) <= 0x4DBF for ch in template)


def _contains(clause: str, template: str) -> bool:
    template = template.casefold()
    if " " in template or _unsegmented(template):
        return template in clause
    return re.search(rf"(?<!\w){re.escape(template)}(?!\w)", clause) is not None


def classify_confirmation(
    reply: str, language: LanguageTag, lexicon: TemplateLexicon
) -> ConfirmationDecision:
    """Score the reply against the lexicon and decide execute (1) or discard (0).

    Raises :class:`IndeterminateConfirmation` when no template matches at
    all, so the session can re-prompt while keeping the plan pending.
    """
    positives, negatives = lexicon.templates_for(language.code)
    text = reply.casefold()

    score = 0.0
    first_positive: str | None = None
    first_negative: str | None = None
    any_hit = False

    for clause in _CLAUSE_SPLIT_RE.split(text):
        clause = clause.strip()
        if not clause:
            continue
        neg_hits = [t for t in negatives if _contains(clause, t)]
        pos_hits = [t for t in positives if _contains(clause, t)]
        if neg_hits:
            any_hit = True
            score += NEGATIVE_WEIGHT * len(neg_hits)
            if first_negative is None:
                first_negative = neg_hits[0]
            continue  # negative overrides positives within the clause
        if pos_hits:
            any_hit = True
            score += POSITIVE_WEIGHT * len(pos_hits)
            if first_positive is None:
                first_positive = pos_hits[0]

    if not any_hit:
        raise IndeterminateConfirmation(f"no confirmation template matched: {reply!r}")

    value = 1 if score > 0 else 0
    matched = (first_positive if value == 1 else first_negative) or first_positive or first_negative
    return ConfirmationDecision(value=value, matched_template=matched or "", score=score)
