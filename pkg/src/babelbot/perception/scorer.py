"""Label-to-command similarity scorers for joint target selection.

The default scorer is lexical: normalized token overlap between the label
and the command, expanded through a per-language synonym table so e.g.
"chair" matches a German command mentioning "Stuhl". A remote-embedding
scorer can be plugged in through the same protocol.
"""

from __future__ import annotations

import json
import re
from importlib import resources
from pathlib import Path
from typing import Protocol


class SemanticScorer(Protocol):
    def score(self, label: str, command: str, language: str) -> float: ...


_TOKEN_RE = re.compile(r"\w+", re.UNICODE)


def _tokens(text: str) -> set[str]:
    return set(_TOKEN_RE.findall(text.casefold()))


class LexicalScorer:
    """Normalized token overlap with per-language synonym expansion."""

    def __init__(self, synonyms: dict[str, dict[str, list[str]]] | None = None):
        self.synonyms = synonyms or {}

    @classmethod
    def from_file(cls, path: Path) -> "LexicalScorer":
        return cls(json.loads(Path(path).read_text(encoding="utf-8")))

    @classmethod
    def bundled(cls) -> "LexicalScorer":
        root = resources.files("babelbot").joinpath("data/synonyms.json")
        with resources.as_file(root) as path:
            return cls.from_file(Path(path))

    def _alternatives(self, token: str, language: str) -> list[str]:
        alts = [token]
        table = self.synonyms.get(language, {})
        alts.extend(table.get(token, ()))
        return alts

    def score(self, label: str, command: str, language: str) -> float:
        label_tokens = list(_TOKEN_RE.findall(label.casefold()))
        if not label_tokens:
            return 0.0
        command_cf = command.casefold()
        command_tokens = _tokens(command_cf)
        hits = 0
        for token in label_tokens:
            for alt in self._alternatives(token, language):
                # unsegmented scripts match by containment, spaced ones by token
                if (alt in command_tokens) or (not alt.isascii() and alt in command_cf):
                    hits += 1
                    break
        return hits / len(label_tokens)
