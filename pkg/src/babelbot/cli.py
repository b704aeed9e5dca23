"""Command-line entry points: serve, simulate, replay, bench, translate-qc."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from babelbot.gateway.bench import replay_log, run_benchmark
from babelbot.gateway.config import AppConfig
from babelbot.metrics.interaction import read_translation_dataset
from babelbot.metrics.report import build_translation_report, translation_report_csv


def _add_config_arg(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, default=None, help="TOML or JSON config file")


def _load_config(args: argparse.Namespace) -> AppConfig:
    return AppConfig.load(args.config)


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from babelbot.gateway.service import create_app
    from babelbot.gateway.session import SessionManager

    config = _load_config(args)
    manager = SessionManager(config=config)
    console = args.console if args.console and Path(args.console).is_dir() else None
    app = create_app(manager, console_dir=console)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    from babelbot.gateway.session import SessionManager

    config = _load_config(args)
    manager = SessionManager(config=config, persist=not args.no_log)
    session = manager.create_session(args.map)
    print(f"session {session.id} on map {args.map or 'default'}")

    commands = [
        line.strip()
        for line in Path(args.script).read_text(encoding="utf-8").splitlines()
        if line.strip() and not line.strip().startswith("#")
    ]
    for text in commands:
        print(f"\n> {text}")
        result = manager.submit_command(session.id, text, wait=True)
        print(result.reply_text)
        if result.needs_confirmation:
            if args.auto_approve:
                phrase = manager.lexicon.canonical_positive(result.language)
                print(f"[auto-approve] {phrase}")
            else:
                phrase = input("confirm> ").strip()
            outcome = manager.confirm(session.id, phrase, wait=True)
            print(outcome["reply_text"])
        manager.wait_idle(session.id)
        if session.last_trace is not None:
            for response in session.last_trace.responses:
                print(response)
        state = session.state_snapshot()
        pose = state["pose"]
        print(f"pose: x={pose['x']:.2f} y={pose['y']:.2f} theta={pose['theta']:.2f}")
    manager.close_all()
    return 0


def cmd_replay(args: argparse.Namespace) -> int:
    report = replay_log(args.log)
    csv_text = report.to_csv()
    Path(args.report).write_text(csv_text, encoding="utf-8")
    print(csv_text, end="")
    if args.json:
        Path(args.json).write_text(report.to_json() + "\n", encoding="utf-8")
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    if not args.mock_llm:
        print("only --mock-llm benchmarking is supported offline", file=sys.stderr)
        return 2
    config = _load_config(args)
    result = run_benchmark(
        fixtures=args.fixtures,
        map_name=args.map,
        log_path=args.log,
        limit=args.limit,
        config=config,
    )
    if result.resumed_from:
        print(f"resumed after {result.resumed_from} logged records")
    csv_text = result.report.to_csv()
    print(csv_text, end="")
    if args.report:
        Path(args.report).write_text(csv_text, encoding="utf-8")
    overall = result.report.overall
    print(
        f"overall: n={overall['n']} ipa={overall['ipa']:.4f} "
        f"tsr={overall['tsr']:.4f} art={overall['art_s']:.4f}s"
    )
    return 0


def cmd_translate_qc(args: argparse.Namespace) -> int:
    records = read_translation_dataset(args.dataset)
    rows = build_translation_report(records)
    csv_text = translation_report_csv(rows)
    print(csv_text, end="")
    if args.report:
        Path(args.report).write_text(csv_text, encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="babelbot",
        description="Multilingual natural-language robot-control workbench",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("serve", help="run the HTTP/WebSocket gateway")
    _add_config_arg(p)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.add_argument("--console", type=Path, default=Path("frontend/dist"),
                   help="static console build to mount at /console")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("simulate", help="run a command script against one session")
    _add_config_arg(p)
    p.add_argument("--map", default=None, help="bundled map name or map file path")
    p.add_argument("--script", required=True, type=Path, help="text file, one command per line")
    p.add_argument("--auto-approve", action="store_true")
    p.add_argument("--no-log", action="store_true")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("replay", help="rebuild the metrics report from a JSONL log")
    p.add_argument("--log", required=True, type=Path)
    p.add_argument("--report", required=True, type=Path, help="CSV output path")
    p.add_argument("--json", type=Path, default=None, help="optional JSON output path")
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("bench", help="replay the fixture corpus end to end")
    _add_config_arg(p)
    p.add_argument("--fixtures", required=True, type=Path)
    p.add_argument("--mock-llm", action="store_true")
    p.add_argument("--map", default=None)
    p.add_argument("--log", type=Path, default=None)
    p.add_argument("--report", type=Path, default=None)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("translate-qc", help="score a translation dataset")
    p.add_argument("--dataset", required=True, type=Path)
    p.add_argument("--report", type=Path, default=None)
    p.set_defaults(func=cmd_translate_qc)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
