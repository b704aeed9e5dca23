"""Interaction-level metrics over logged records: IPA, TSR, ART."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from babelbot.metrics.translation import (
    MetricError,
    ScorerUnavailable,
    SemanticTextScorer,
    s_per,
    semantic_score,
)

IPA_GAMMA = 0.9
IPA_W_SEMANTIC = 0.4
IPA_W_PARAMS = 0.6


class EmptyDataset(MetricError):
    pass


@dataclass(frozen=True)
class InteractionRecord:
    """One logged turn; field names mirror the JSONL schema exactly."""

    lang: str
    text: str
    t_ins_ms: int
    t_res_ms: int
    gold_actions: tuple[str, ...]
    pred_actions: tuple[str, ...]
    success: int

    def __post_init__(self) -> None:
        if self.t_res_ms < self.t_ins_ms:
            raise ValueError("t_res_ms must be >= t_ins_ms")
        if self.success not in (0, 1):
            raise ValueError("success must be 0 or 1")


@dataclass(frozen=True)
class TranslationRecord:
    source: str
    lang: str
    hyp: str
    ref: str

    def __post_init__(self) -> None:
        if not (self.source and self.lang and self.hyp and self.ref):
            raise ValueError("translation record fields must be non-empty")


def record_to_json(record: InteractionRecord) -> dict:
    return {
        "lang": record.lang,
        "text": record.text,
        "t_ins_ms": record.t_ins_ms,
        "t_res_ms": record.t_res_ms,
        "gold_actions": list(record.gold_actions),
        "pred_actions": list(record.pred_actions),
        "success": record.success,
    }


def record_from_json(data: dict) -> InteractionRecord:
    return InteractionRecord(
        lang=data["lang"],
        text=data["text"],
        t_ins_ms=int(data["t_ins_ms"]),
        t_res_ms=int(data["t_res_ms"]),
        gold_actions=tuple(data["gold_actions"]),
        pred_actions=tuple(data["pred_actions"]),
        success=int(data["success"]),
    )


def read_interaction_log(path: Path) -> list[InteractionRecord]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            data = json.loads(line)
            if data.get("kind", "interaction") != "interaction":
                continue
            records.append(record_from_json(data))
    return records


def read_translation_dataset(path: Path) -> list[TranslationRecord]:
    records = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            data = json.loads(line)
            records.append(
                TranslationRecord(
                    source=data["source"], lang=data["lang"], hyp=data["hyp"], ref=data["ref"]
                )
            )
    return records


def ipa_score(
    record: InteractionRecord, scorer: SemanticTextScorer | None = None
) -> float:
    """Composite score: w1 * semantic + w2 * parameter correctness."""
    s_bert = semantic_score(record.gold_actions, record.pred_actions, scorer)
    s_params = s_per(record.gold_actions, record.pred_actions)
    return IPA_W_SEMANTIC * s_bert + IPA_W_PARAMS * s_params


def ipa(
    records: Sequence[InteractionRecord],
    gamma: float = IPA_GAMMA,
    scorer: SemanticTextScorer | None = None,
) -> float:
    """Fraction of records whose composite score clears the threshold.

    Records the scorer cannot handle are excluded (see
    :func:`ipa_with_exclusions` for the exclusion count).
    """
    return ipa_with_exclusions(records, gamma, scorer)[0]


def ipa_with_exclusions(
    records: Sequence[InteractionRecord],
    gamma: float = IPA_GAMMA,
    scorer: SemanticTextScorer | None = None,
) -> tuple[float, int]:
    if not records:
        raise EmptyDataset("no interaction records")
    correct = 0
    scored = 0
    excluded = 0
    for record in records:
        try:
            score = ipa_score(record, scorer)
        except ScorerUnavailable:
            excluded += 1
            continue
        scored += 1
        if score >= gamma - 1e-12:
            correct += 1
    if scored == 0:
        raise EmptyDataset("every record was excluded by the scorer")
    return correct / scored, excluded


def tsr(records: Sequence[InteractionRecord]) -> float:
    """Mean of the execution-success indicators."""
    if not records:
        raise EmptyDataset("no interaction records")
    return sum(r.success for r in records) / len(records)


def art(records: Sequence[InteractionRecord]) -> float:
    """Mean response latency in seconds."""
    if not records:
        raise EmptyDataset("no interaction records")
    return sum((r.t_res_ms - r.t_ins_ms) for r in records) / len(records) / 1000.0


def group_by_language(records: Iterable[InteractionRecord]) -> dict[str, list[InteractionRecord]]:
    groups: dict[str, list[InteractionRecord]] = {}
    for record in records:
        groups.setdefault(record.lang, []).append(record)
    return groups
