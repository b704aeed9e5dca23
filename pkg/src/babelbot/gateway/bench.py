"""Fixture-corpus benchmark: replay commands end to end with the mock LLM.

One fresh session per fixture record (fixtures are self-contained tasks);
multistep plans are approved through the confirmation classifier with the
language's canonical positive phrase, exercising the full loop. Completed
records append to a single JSONL log, flushed per record, and an
interrupted run resumes after the last logged record.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional

from babelbot.engine.mock import FixtureCorpus, MockLanguageModel
from babelbot.gateway.config import AppConfig
from babelbot.gateway.session import SessionManager, now_ms
from babelbot.metrics.interaction import InteractionRecord, read_interaction_log, record_to_json
from babelbot.metrics.report import MetricsReport, build_report


@dataclass
class BenchResult:
    records: list[InteractionRecord]
    report: MetricsReport
    resumed_from: int


def run_benchmark(
    fixtures: FixtureCorpus | Path | str,
    map_name: str | None = None,
    log_path: Path | str | None = None,
    clock: Callable[[], int] | None = None,
    limit: Optional[int] = None,
    config: AppConfig | None = None,
) -> BenchResult:
    corpus = fixtures if isinstance(fixtures, FixtureCorpus) else FixtureCorpus.load(Path(fixtures))
    manager = SessionManager(
        config=config or AppConfig(),
        client=MockLanguageModel(corpus),
        clock=clock or now_ms,
        persist=False,
    )

    records: list[InteractionRecord] = []
    skip = 0
    log_fh = None
    if log_path is not None:
        log_path = Path(log_path)
        if log_path.exists():
            records = read_interaction_log(log_path)
            skip = len(records)
        log_path.parent.mkdir(parents=True, exist_ok=True)
        log_fh = open(log_path, "a", encoding="utf-8")

    try:
        for index, fixture in enumerate(corpus.records):
            if index < skip:
                continue
            if limit is not None and index >= limit:
                break
            session = manager.create_session(map_name)
            result = manager.submit_command(
                session.id, fixture.text, gold_actions=fixture.gold_actions, wait=True
            )
            if result.needs_confirmation:
                phrase = manager.lexicon.canonical_positive(result.language)
                manager.confirm(session.id, phrase, wait=True)
            record = session.turn_log[-1]
            records.append(record)
            if log_fh is not None:
                log_fh.write(json.dumps(record_to_json(record), ensure_ascii=False) + "\n")
                log_fh.flush()
            session.close()
            manager.sessions.pop(session.id, None)
    finally:
        if log_fh is not None:
            log_fh.close()
        manager.close_all()

    return BenchResult(records=records, report=build_report(records), resumed_from=skip)


def replay_log(log_path: Path | str) -> MetricsReport:
    """Rebuild the metrics report from a persisted interaction log."""
    records = read_interaction_log(Path(log_path))
    return build_report(records)
