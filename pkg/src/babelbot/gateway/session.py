"""Sessions: per-user command loop with telemetry and JSONL persistence.

Each session owns one simulator, a language state, at most one pending
plan, and at most one executing plan. Commands are processed strictly one
at a time (queue depth 1: a command during execution raises SessionBusy).
Completed turns are appended to the session's JSONL log and flushed, so a
killed process replays to the same report.
"""

from __future__ import annotations

import json
import queue
import threading
import time
import uuid
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Optional

from babelbot.engine import (
    ActionPlan,
    FixtureCorpus,
    HttpLanguageModel,
    IndeterminateConfirmation,
    Instruction,
    Interpretation,
    LanguageModelClient,
    LlmSettings,
    MockLanguageModel,
    RobotContext,
    TemplateLexicon,
    build_system_prompt,
    canonical_actions,
    classify_confirmation,
    interpret,
    parse_action_lines,
)
from babelbot.engine.types import Provenance
from babelbot.executor import (
    ExecutionEnv,
    ExecutionTrace,
    ResponseCatalog,
    execute_plan,
    skipped_trace,
)
from babelbot.gateway.config import AppConfig
from babelbot.langid import (
    LangidError,
    LanguageProfileSet,
    LanguageSource,
    LanguageTag,
    SessionLanguageState,
    detect_language,
    resolve_session_language,
)
from babelbot.metrics.interaction import InteractionRecord, record_to_json
from babelbot.perception.kalman import TrackRegistry
from babelbot.perception.scorer import LexicalScorer
from babelbot.simulator.world import Simulator


class GatewayError(Exception):
    pass


class SessionUnknown(GatewayError):
    pass


class SessionBusy(GatewayError):
    pass


class NoPendingPlan(GatewayError):
    pass


def now_ms() -> int:
    return int(time.time() * 1000)


@dataclass
class CommandResult:
    reply_text: str
    plan: Optional[ActionPlan]
    needs_confirmation: bool
    language: str
    plan_lines: tuple[str, ...] = ()
    confirm_phrases: Optional[dict] = None  # canonical positive/negative in ell

    def to_json(self) -> dict:
        return {
            "reply_text": self.reply_text,
            "needs_confirmation": self.needs_confirmation,
            "language": self.language,
            "plan": list(self.plan_lines) if self.plan is not None else None,
            "confirm_phrases": self.confirm_phrases,
        }


@dataclass
class _PendingTurn:
    instruction: Instruction
    interpretation: Interpretation
    plan: ActionPlan
    gold_actions: tuple[str, ...]
    t_ins_ms: int
    t_res_ms: int


class Session:
    """One user session; all mutation happens under the session lock."""

    def __init__(
        self,
        session_id: str,
        sim: Simulator,
        catalog: ResponseCatalog,
        default_language: str = "en",
        data_dir: Optional[Path] = None,
    ):
        self.id = session_id
        self.sim = sim
        self.catalog = catalog
        self.language_state = SessionLanguageState(current=LanguageTag(default_language))
        self.pending: Optional[_PendingTurn] = None
        self.turn_log: list[InteractionRecord] = []
        self.speed_ceiling: float = 1.0
        self.turn_index = 0
        self.lock = threading.RLock()
        self.executing = False
        self.abort_event = threading.Event()
        self.registry = TrackRegistry()
        self.last_trace: Optional[ExecutionTrace] = None

        self._seq = 0
        self._events: list[dict] = []
        self._subscribers: list[queue.Queue] = []
        self._worker: Optional[threading.Thread] = None

        self.data_dir = data_dir
        self._log_fh = None
        if data_dir is not None:
            data_dir.mkdir(parents=True, exist_ok=True)
            self._log_fh = open(data_dir / f"{session_id}.jsonl", "a", encoding="utf-8")

    # --- telemetry -----------------------------------------------------

    def emit(self, event: dict) -> None:
        with self.lock:
            self._seq += 1
            event = {"seq": self._seq, **event}
            self._events.append(event)
            if len(self._events) > 10000:
                self._events = self._events[-5000:]
            for q in list(self._subscribers):
                q.put(event)

    def subscribe(self, since: int = 0) -> queue.Queue:
        q: queue.Queue = queue.Queue()
        with self.lock:
            for event in self._events:
                if event["seq"] > since:
                    q.put(event)
            self._subscribers.append(q)
        return q

    def unsubscribe(self, q: queue.Queue) -> None:
        with self.lock:
            if q in self._subscribers:
                self._subscribers.remove(q)

    def heartbeat(self) -> None:
        self.emit({"kind": "heartbeat", "t": self.sim.time, "lang": self.language_state.current.code})

    # --- persistence -----------------------------------------------------

    def append_log(self, payload: dict) -> None:
        if self._log_fh is None:
            return
        self._log_fh.write(json.dumps(payload, ensure_ascii=False) + "\n")
        self._log_fh.flush()

    def close(self) -> None:
        if self._log_fh is not None:
            self._log_fh.close()
            self._log_fh = None

    def state_snapshot(self) -> dict:
        state = self.sim.state
        grid = self.sim.grid
        return {
            "id": self.id,
            "pose": {"x": state.x, "y": state.y, "theta": state.theta},
            "odometry_m": state.odom_distance,
            "sim_time_s": self.sim.time,
            "language": self.language_state.current.code,
            "language_source": self.language_state.source.value,
            "executing": self.executing,
            "pending_plan": list(canonical_actions(self.pending.plan)) if self.pending else None,
            "speed_ceiling": self.speed_ceiling,
            "turns": self.turn_index,
            "collided": state.collided,
            "destinations": sorted(grid.named_destinations),
            "map": {
                "resolution": grid.resolution,
                "origin": list(grid.origin),
                "rows": grid.to_rows(),
            },
            "objects": [
                {"label": obj.label, "x": obj.x, "y": obj.y} for obj in self.sim.scene
            ],
        }


class SessionManager:
    """Owns all sessions and the shared profile / lexicon / fixture data."""

    def __init__(
        self,
        config: AppConfig | None = None,
        client: LanguageModelClient | None = None,
        profiles: LanguageProfileSet | None = None,
        lexicon: TemplateLexicon | None = None,
        catalog: ResponseCatalog | None = None,
        scorer: LexicalScorer | None = None,
        corpus: FixtureCorpus | None = None,
        clock: Callable[[], int] = now_ms,
        persist: bool = True,
    ):
        self.config = config or AppConfig()
        self.profiles = profiles or LanguageProfileSet.bundled()
        self.lexicon = lexicon or TemplateLexicon.bundled()
        self.catalog = catalog or ResponseCatalog.bundled()
        self.scorer = scorer or LexicalScorer.bundled()
        self.clock = clock
        self.persist = persist
        self.sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

        if client is not None:
            self.client = client
        elif self.config.use_mock or not self.config.llm_endpoint:
            self.client = MockLanguageModel(corpus or FixtureCorpus.bundled())
        else:
            self.client = HttpLanguageModel(
                LlmSettings(
                    endpoint=self.config.llm_endpoint,
                    model=self.config.llm_model,
                    api_key=self.config.llm_key,
                )
            )

    # --- session lifecycle ------------------------------------------------

    def _map_path(self, map_name: str | None) -> Path:
        if map_name:
            candidate = Path(map_name)
            if candidate.exists():
                return candidate
            bundled = self.bundled_maps().get(map_name)
            if bundled is not None:
                return bundled
            raise GatewayError(f"unknown map: {map_name!r}")
        if self.config.map_path:
            return Path(self.config.map_path)
        return self.bundled_maps()["lab"]

    @staticmethod
    def bundled_maps() -> dict[str, Path]:
        root = resources.files("babelbot").joinpath("data/maps")
        with resources.as_file(root) as directory:
            return {p.stem: p for p in sorted(Path(directory).glob("*.json"))}

    def create_session(self, map_name: str | None = None, session_id: str | None = None) -> Session:
        session_id = session_id or uuid.uuid4().hex[:12]
        sim = Simulator.from_map_file(
            self._map_path(map_name), dt=self.config.sim_dt, seed=self.config.seed
        )
        session = Session(
            session_id=session_id,
            sim=sim,
            catalog=self.catalog,
            default_language=self.config.default_language,
            data_dir=Path(self.config.data_dir) if self.persist else None,
        )
        with self._lock:
            self.sessions[session_id] = session
        return session

    def get(self, session_id: str) -> Session:
        session = self.sessions.get(session_id)
        if session is None:
            raise SessionUnknown(f"no session {session_id!r}")
        return session

    def close_all(self) -> None:
        for session in self.sessions.values():
            session.abort_event.set()
            session.close()

    # --- language handling --------------------------------------------------

    def set_language(self, session_id: str, code: str | None) -> dict:
        session = self.get(session_id)
        with session.lock:
            if code:
                session.language_state.set_override(code)
            else:
                session.language_state.clear_override()
            return {
                "language": session.language_state.current.code,
                "source": session.language_state.source.value,
            }

    def _resolve_language(self, session: Session, text: str) -> LanguageTag:
        try:
            detected = detect_language(text, self.profiles)
        except LangidError:
            detected = session.language_state.current  # fall back to session language
        return resolve_session_language(session.language_state, detected)

    # --- command flow ----------------------------------------------------------

    def submit_command(
        self,
        session_id: str,
        text: str,
        gold_actions: tuple[str, ...] | None = None,
        wait: bool = False,
    ) -> CommandResult:
        session = self.get(session_id)
        with session.lock:
            if session.executing:
                raise SessionBusy(session.catalog.render(
                    "busy", session.language_state.current.code).text)
            t_ins = self.clock()
            language = self._resolve_language(session, text)
            instr = Instruction(
                text=text, language=language, issued_at=t_ins, session_id=session.id
            )

            state = session.sim.state
            prompt = build_system_prompt(
                RobotContext(x=state.x, y=state.y, z=0.0, yaw_deg=state.yaw_deg),
                destinations=sorted(session.sim.grid.named_destinations) or ["origin"],
                language=language,
                user_message=text,
            )
            interpretation = interpret(instr, prompt, self.client)
            provenance = (
                Provenance.MOCK if isinstance(self.client, MockLanguageModel) else Provenance.LLM
            )
            plan = parse_action_lines(
                interpretation.plan_lines, language=language, provenance=provenance
            )
            pred = tuple(canonical_actions(plan))
            gold = gold_actions if gold_actions is not None else pred
            t_res = self.clock()  # first system response: the reply being formed

            session.turn_index += 1
            lang_code = language.code

            if plan.requires_confirmation:
                session.pending = _PendingTurn(
                    instruction=instr,
                    interpretation=interpretation,
                    plan=plan,
                    gold_actions=gold,
                    t_ins_ms=t_ins,
                    t_res_ms=t_res,
                )
                ask = session.catalog.render(
                    "confirm_request", lang_code, k=len(plan.actions)
                ).text
                reply = "\n".join(
                    part for part in (interpretation.summary, *interpretation.plan_lines, ask) if part
                )
                session.emit({"kind": "message", "t": session.sim.time,
                              "lang": lang_code, "message": reply})
                return CommandResult(
                    reply_text=reply,
                    plan=plan,
                    needs_confirmation=True,
                    language=lang_code,
                    plan_lines=tuple(canonical_actions(plan)),
                    confirm_phrases={
                        "positive": self.lexicon.canonical_positive(lang_code),
                        "negative": self.lexicon.canonical_negative(lang_code),
                    },
                )

            # immediate execution path (single-step or query-only)
            reply_parts = [interpretation.summary] if interpretation.summary else []
            if plan.actions:
                reply_parts.extend(interpretation.plan_lines)
            if plan.unparseable:
                reply_parts.append(
                    session.catalog.render("unparsed_warning", lang_code).text
                )
                reply_parts.extend(plan.unparseable)
            reply = "\n".join(reply_parts) if reply_parts else session.catalog.render(
                "query_ack", lang_code).text
            session.emit({"kind": "message", "t": session.sim.time,
                          "lang": lang_code, "message": reply})

            self._start_execution(
                session, instr, plan, gold, t_ins, t_res, approved=False, wait=wait
            )
            return CommandResult(
                reply_text=reply,
                plan=plan if plan.actions else None,
                needs_confirmation=False,
                language=lang_code,
                plan_lines=tuple(canonical_actions(plan)),
            )

    def confirm(self, session_id: str, reply_text: str, wait: bool = False) -> dict:
        session = self.get(session_id)
        with session.lock:
            if session.pending is None:
                raise NoPendingPlan("no plan awaiting confirmation")
            language = session.language_state.current
            try:
                decision = classify_confirmation(reply_text, language, self.lexicon)
            except IndeterminateConfirmation:
                message = session.catalog.render("reprompt", language.code).text
                session.emit({"kind": "message", "t": session.sim.time,
                              "lang": language.code, "message": message})
                return {"executed": False, "reprompt": True, "reply_text": message}

            pending = session.pending
            session.pending = None
            if decision.value == 1:
                message = session.catalog.render("plan_executing", language.code).text
                self._start_execution(
                    session,
                    pending.instruction,
                    pending.plan,
                    pending.gold_actions,
                    pending.t_ins_ms,
                    pending.t_res_ms,
                    approved=True,
                    wait=wait,
                )
                return {"executed": True, "reprompt": False, "reply_text": message}

            # rejected: discard, log a skipped turn, leave the robot alone
            trace = skipped_trace(pending.plan, self._env_for(session))
            session.last_trace = trace
            self._finalize_turn(session, pending.instruction, pending.plan,
                                pending.gold_actions, pending.t_ins_ms,
                                pending.t_res_ms, trace, executed=False)
            message = session.catalog.render("plan_rejected", language.code).text
            session.emit({"kind": "message", "t": session.sim.time,
                          "lang": language.code, "message": message})
            return {"executed": False, "reprompt": False, "reply_text": message}

    def abort(self, session_id: str) -> dict:
        session = self.get(session_id)
        session.abort_event.set()
        return {"aborting": session.executing}

    # --- execution plumbing -------------------------------------------------

    def _env_for(self, session: Session) -> ExecutionEnv:
        return ExecutionEnv(
            sim=session.sim,
            catalog=session.catalog,
            language=session.language_state.current,
            perception_cfg=self.config.perception,
            registry=session.registry,
            scorer=self.scorer,
            speed_ceiling=session.speed_ceiling,
            snapshot_dir=Path(self.config.data_dir) if self.persist else None,
            session_id=session.id,
            turn_index=session.turn_index,
            telemetry=session.emit,
            abort_event=session.abort_event,
        )

    def _start_execution(
        self,
        session: Session,
        instr: Instruction,
        plan: ActionPlan,
        gold: tuple[str, ...],
        t_ins: int,
        t_res: int,
        approved: bool,
        wait: bool,
    ) -> None:
        session.abort_event.clear()
        session.executing = True

        def run() -> None:
            try:
                env = self._env_for(session)
                trace = execute_plan(plan, env, command_text=instr.text, approved=approved)
                session.last_trace = trace
                self._finalize_turn(session, instr, plan, gold, t_ins, t_res, trace, True)
            finally:
                session.executing = False
                terminal = "aborted" if session.abort_event.is_set() else "idle"
                session.emit({"kind": "status", "t": session.sim.time,
                              "lang": session.language_state.current.code,
                              "status": terminal, "action_index": None})

        if wait:
            run()
        else:
            session._worker = threading.Thread(target=run, daemon=True)
            session._worker.start()

    def _finalize_turn(
        self,
        session: Session,
        instr: Instruction,
        plan: ActionPlan,
        gold: tuple[str, ...],
        t_ins: int,
        t_res: int,
        trace: ExecutionTrace,
        executed: bool,
    ) -> None:
        success = int(executed and trace.s_n and not plan.parse_failed)
        record = InteractionRecord(
            lang=instr.language.code,
            text=instr.text,
            t_ins_ms=t_ins,
            t_res_ms=t_res,
            gold_actions=gold,
            pred_actions=tuple(canonical_actions(plan)),
            success=success,
        )
        session.turn_log.append(record)
        session.append_log(record_to_json(record))
        session.append_log({"kind": "trace", "session": session.id,
                            "turn": session.turn_index, **trace.to_json()})

    def wait_idle(self, session_id: str, timeout: float = 120.0) -> None:
        session = self.get(session_id)
        worker = session._worker
        if worker is not None:
            worker.join(timeout)
