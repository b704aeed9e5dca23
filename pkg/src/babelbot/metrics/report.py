"""Aggregated per-language reports with deterministic CSV/JSON output."""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass
from typing import Sequence

from babelbot.metrics.interaction import (
    InteractionRecord,
    TranslationRecord,
    art,
    group_by_language,
    ipa_with_exclusions,
    tsr,
)
from babelbot.metrics.tokenize import tokenize
from babelbot.metrics.translation import bleu, per, s_per, semantic_score, ter, vematch

LANGUAGE_FAMILIES = {
    "en": "Indo-European",
    "de": "Indo-European",
    "es": "Indo-European",
    "fr": "Indo-European",
    "it": "Indo-European",
    "pt": "Indo-European",
    "ru": "Indo-European",
    "hi": "Indo-European",
    "zh": "Sino-Tibetan",
    "ar": "Afro-Asiatic",
    "ja": "Japonic",
    "sw": "Niger-Congo",
    "tr": "Turkic",
    "pcm": "Creole",
}


def language_family(code: str) -> str:
    return LANGUAGE_FAMILIES.get(code, "Unknown")


@dataclass(frozen=True)
class LanguageRow:
    lang: str
    family: str
    n: int
    ipa: float
    tsr: float
    art_s: float


@dataclass(frozen=True)
class MetricsReport:
    rows: tuple[LanguageRow, ...]
    overall: dict

    def to_json(self) -> str:
        payload = {
            "per_language": [
                {
                    "lang": row.lang,
                    "family": row.family,
                    "n": row.n,
                    "ipa": round(row.ipa, 6),
                    "tsr": round(row.tsr, 6),
                    "art_s": round(row.art_s, 6),
                }
                for row in self.rows
            ],
            "overall": self.overall,
        }
        return json.dumps(payload, indent=2, ensure_ascii=False, sort_keys=True)

    def to_csv(self) -> str:
        out = io.StringIO()
        out.write("lang,family,n,ipa,tsr,art_s\n")
        for row in self.rows:
            out.write(
                f"{row.lang},{row.family},{row.n},"
                f"{row.ipa:.6f},{row.tsr:.6f},{row.art_s:.6f}\n"
            )
        return out.getvalue()


def _mean_std(values: Sequence[float]) -> tuple[float, float]:
    if not values:
        return 0.0, 0.0
    mean = sum(values) / len(values)
    var = sum((v - mean) ** 2 for v in values) / len(values)
    return mean, math.sqrt(var)


def build_report(records: Sequence[InteractionRecord]) -> MetricsReport:
    """Per-language IPA/TSR/ART rows plus overall aggregates with std dev."""
    rows = []
    for lang in sorted(group_by_language(records)):
        group = group_by_language(records)[lang]
        lang_ipa, _excluded = ipa_with_exclusions(group)
        rows.append(
            LanguageRow(
                lang=lang,
                family=language_family(lang),
                n=len(group),
                ipa=lang_ipa,
                tsr=tsr(group),
                art_s=art(group),
            )
        )
    ipa_mean, ipa_std = _mean_std([r.ipa for r in rows])
    tsr_mean, tsr_std = _mean_std([r.tsr for r in rows])
    art_mean, art_std = _mean_std([r.art_s for r in rows])
    overall = {
        "n": len(records),
        "languages": len(rows),
        "ipa": round(ipa_mean, 6),
        "ipa_std": round(ipa_std, 6),
        "tsr": round(tsr_mean, 6),
        "tsr_std": round(tsr_std, 6),
        "art_s": round(art_mean, 6),
        "art_s_std": round(art_std, 6),
    }
    return MetricsReport(rows=tuple(rows), overall=overall)


@dataclass(frozen=True)
class TranslationRow:
    lang: str
    n: int
    bleu: float
    ter: float
    per: float
    semantic: float
    vematch: float


def build_translation_report(records: Sequence[TranslationRecord]) -> tuple[TranslationRow, ...]:
    """Per-language means of the translation-QC metrics."""
    groups: dict[str, list[TranslationRecord]] = {}
    for record in records:
        groups.setdefault(record.lang, []).append(record)

    rows = []
    for lang in sorted(groups):
        group = groups[lang]
        scores = {"bleu": 0.0, "ter": 0.0, "per": 0.0, "semantic": 0.0, "vematch": 0.0}
        for record in group:
            ref_tokens = tokenize(record.ref, lang)
            hyp_tokens = tokenize(record.hyp, lang)
            scores["bleu"] += bleu(ref_tokens, hyp_tokens)
            scores["ter"] += ter(ref_tokens, hyp_tokens)
            scores["per"] += per([record.ref], [record.hyp])
            scores["semantic"] += semantic_score([record.ref], [record.hyp])
            scores["vematch"] += vematch(ref_tokens, hyp_tokens)
        n = len(group)
        rows.append(
            TranslationRow(
                lang=lang,
                n=n,
                bleu=scores["bleu"] / n,
                ter=scores["ter"] / n,
                per=scores["per"] / n,
                semantic=scores["semantic"] / n,
                vematch=scores["vematch"] / n,
            )
        )
    return tuple(rows)


def translation_report_csv(rows: Sequence[TranslationRow]) -> str:
    out = io.StringIO()
    out.write("lang,n,bleu,ter,per,semantic,vematch\n")
    for row in rows:
        out.write(
            f"{row.lang},{row.n},{row.bleu:.6f},{row.ter:.6f},"
            f"{row.per:.6f},{row.semantic:.6f},{row.vematch:.6f}\n"
        )
    return out.getvalue()
