"""Per-language response templates for robot replies and telemetry text.

Templates live in ``data/responses/<code>.json`` as ``{key: template}``
with Python ``str.format`` placeholders. Languages without a catalog fall
back to English and the rendered text is flagged, never silently swapped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

FALLBACK_LANGUAGE = "en"


@dataclass(frozen=True)
class RenderedResponse:
    text: str
    language: str
    fallback_used: bool


class ResponseCatalog:
    def __init__(self, templates: dict[str, dict[str, str]]):
        if FALLBACK_LANGUAGE not in templates:
            raise ValueError("response catalog must include the English fallback")
        self.templates = templates

    @classmethod
    def from_dir(cls, directory: Path) -> "ResponseCatalog":
        templates = {}
        for path in sorted(Path(directory).glob("*.json")):
            templates[path.stem] = json.loads(path.read_text(encoding="utf-8"))
        return cls(templates)

    @classmethod
    def bundled(cls) -> "ResponseCatalog":
        root = resources.files("babelbot").joinpath("data/responses")
        with resources.as_file(root) as directory:
            return cls.from_dir(Path(directory))

    def languages(self) -> list[str]:
        return sorted(self.templates)

    def render(self, key: str, language: str, **values) -> RenderedResponse:
        table = self.templates.get(language)
        fallback = False
        if table is None or key not in table:
            table = self.templates[FALLBACK_LANGUAGE]
            fallback = language != FALLBACK_LANGUAGE
        template = table.get(key, key)
        return RenderedResponse(
            text=template.format(**values),
            language=FALLBACK_LANGUAGE if fallback else language,
            fallback_used=fallback,
        )
