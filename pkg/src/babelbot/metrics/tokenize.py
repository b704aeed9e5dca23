"""Rule-based, unicode-aware tokenization with per-locale number handling."""

from __future__ import annotations

import re

# languages writing decimal fractions with a comma
COMMA_DECIMAL_LANGS = {
    "de", "es", "fr", "it", "pt", "ru", "tr", "pl", "nl", "sv", "da", "no",
    "fi", "cs", "sk", "hu", "ro", "bg", "uk", "sr", "hr", "el", "id", "vi",
}

_CJK_RANGES = (
    (0x4E00, 0x9FFF),
    (0x3400, 0x4DBF),
    (0x3040, 0x309F),
    (0x30A0, 0x30FF),
)


def _is_cjk(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _CJK_RANGES)


def _number_pattern(language: str) -> str:
    sep = "," if language in COMMA_DECIMAL_LANGS else r"\."
    return rf"\d+(?:{sep}\d+)*"


def tokenize(text: str, language: str = "en") -> list[str]:
    """Split into word / number / punctuation tokens.

    Numbers stay whole with the locale's decimal separator; punctuation is
    detached one codepoint per token; CJK codepoints are their own tokens
    (declared rule for unsegmented scripts).
    """
    if not text:
        raise ValueError("cannot tokenize empty text")
    pattern = re.compile(
        rf"(?P<num>{_number_pattern(language)})|(?P<word>\w+)|(?P<punct>\S)", re.UNICODE
    )
    tokens: list[str] = []
    for m in pattern.finditer(text):
        token = m.group(0)
        if m.lastgroup == "word" and any(_is_cjk(ch) for ch in token):
            tokens.extend(token)  # unsegmented script: per-codepoint
        else:
            tokens.append(token)
    return tokens
