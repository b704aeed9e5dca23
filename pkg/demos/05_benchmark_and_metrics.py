#!/usr/bin/env python3
"""Replay the 10-language fixture corpus and score the whole loop.

Produces the per-language IPA / TSR / ART table from a persisted JSONL
log, demonstrates that the log replays to the identical report, and runs
the translation-QC metrics (BLEU, TER, PER, semantic F1, VeMatch) on the
bundled sample dataset.
"""

import tempfile
from pathlib import Path

from babelbot.gateway.bench import replay_log, run_benchmark
from babelbot.metrics.interaction import read_translation_dataset
from babelbot.metrics.report import build_translation_report, translation_report_csv

DATA = Path(__file__).resolve().parent.parent / "src" / "babelbot" / "data"

with tempfile.TemporaryDirectory() as tmp:
    log_path = Path(tmp) / "bench.jsonl"
    result = run_benchmark(
        DATA / "fixtures" / "corpus.jsonl", map_name="lab", log_path=log_path
    )
    print(result.report.to_csv())
    overall = result.report.overall
    print(f"overall: n={overall['n']}  IPA={overall['ipa']:.3f}  "
          f"TSR={overall['tsr']:.3f} (std {overall['tsr_std']:.3f})  "
          f"ART={overall['art_s'] * 1000:.1f} ms\n")

    replayed = replay_log(log_path)
    print("log replays to identical report:", replayed.to_csv() == result.report.to_csv())

print("\ntranslation QC on the bundled sample dataset:")
records = read_translation_dataset(DATA / "fixtures" / "translations.jsonl")
print(translation_report_csv(build_translation_report(records)))
