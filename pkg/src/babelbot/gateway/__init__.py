"""Session service: command loop, persistence, HTTP/WS API, benchmarks."""

from babelbot.gateway.config import AppConfig
from babelbot.gateway.session import (
    CommandResult,
    GatewayError,
    NoPendingPlan,
    Session,
    SessionBusy,
    SessionManager,
    SessionUnknown,
    now_ms,
)
from babelbot.gateway.bench import BenchResult, replay_log, run_benchmark
from babelbot.gateway.service import create_app

__all__ = [name for name in dir() if not name.startswith("_")]
