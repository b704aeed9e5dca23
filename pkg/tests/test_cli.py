import json
from pathlib import Path

import pytest

from babelbot.cli import build_parser, main


def test_parser_exposes_all_subcommands():
    parser = build_parser()
    subparsers = next(
        a for a in parser._actions if a.__class__.__name__ == "_SubParsersAction"
    )
    assert set(subparsers.choices) == {"serve", "simulate", "replay", "bench", "translate-qc"}


def test_bench_and_replay_roundtrip(tmp_path, corpus_path, capsys):
    log = tmp_path / "bench.jsonl"
    report = tmp_path / "bench.csv"
    code = main([
        "bench",
        "--fixtures", str(corpus_path),
        "--mock-llm",
        "--map", "lab",
        "--log", str(log),
        "--report", str(report),
        "--limit", "12",
    ])
    assert code == 0
    assert log.exists() and report.exists()
    out = capsys.readouterr().out
    assert "overall:" in out

    replay_csv = tmp_path / "replay.csv"
    replay_json = tmp_path / "replay.json"
    code = main([
        "replay",
        "--log", str(log),
        "--report", str(replay_csv),
        "--json", str(replay_json),
    ])
    assert code == 0
    assert replay_csv.read_text() == report.read_text()
    payload = json.loads(replay_json.read_text())
    assert "overall" in payload and "per_language" in payload


def test_bench_requires_mock_flag(tmp_path, corpus_path):
    assert main(["bench", "--fixtures", str(corpus_path)]) == 2


def test_translate_qc(tmp_path, corpus_path, capsys):
    dataset = corpus_path.parent / "translations.jsonl"
    report = tmp_path / "txn.csv"
    code = main(["translate-qc", "--dataset", str(dataset), "--report", str(report)])
    assert code == 0
    lines = report.read_text().splitlines()
    assert lines[0] == "lang,n,bleu,ter,per,semantic,vematch"
    assert len(lines) == 4  # de, es, fr


def test_simulate_script(tmp_path, capsys):
    script = tmp_path / "script.txt"
    script.write_text(
        "# demo script\n"
        "Report your current position and orientation.\n"
        "Move forward 2 meters at 0.2 m/s and then turn right 90 degrees.\n",
        encoding="utf-8",
    )
    code = main([
        "simulate",
        "--map", "lab",
        "--script", str(script),
        "--auto-approve",
        "--no-log",
    ])
    assert code == 0
    out = capsys.readouterr().out
    assert "x = 2, y = 1" in out  # pose report from the start pose
    assert "[auto-approve]" in out
