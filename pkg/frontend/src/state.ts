// The console view-state and its pure update functions.
//
// Every field here maps to a received response field or stream event; the
// console never invents state. The plan card exists exactly while the
// server reports a pending confirmation.

import type {
  CommandResponse,
  ConfirmResponse,
  Pose,
  SessionState,
  TelemetryEvent,
} from './types.js';

export interface ChatTurn {
  role: 'user' | 'robot';
  text: string;
  lang: string;
}

export interface PlanCard {
  lines: string[];
  language: string;
  positive: string; // canonical approve phrase, sent verbatim
  negative: string; // canonical reject phrase, sent verbatim
}

export interface ConsoleState {
  sessionId: string | null;
  transcript: ChatTurn[];
  planCard: PlanCard | null;
  pose: Pose | null;
  trail: Pose[];
  executing: boolean;
  language: string;
  languageSource: 'detected' | 'override';
  connection: 'connecting' | 'open' | 'closed';
  statusBadge: string | null;
  droppedEvents: number;
  lastSeq: number;
}

export function initialState(): ConsoleState {
  return {
    sessionId: null,
    transcript: [],
    planCard: null,
    pose: null,
    trail: [],
    executing: false,
    language: 'en',
    languageSource: 'detected',
    connection: 'closed',
    statusBadge: null,
    droppedEvents: 0,
    lastSeq: 0,
  };
}

export function applySessionState(state: ConsoleState, snapshot: SessionState): ConsoleState {
  return {
    ...state,
    sessionId: snapshot.id,
    pose: snapshot.pose,
    trail: state.trail.length ? state.trail : [snapshot.pose],
    executing: snapshot.executing,
    language: snapshot.language,
    languageSource: snapshot.language_source,
  };
}

export function applyUserCommand(state: ConsoleState, text: string): ConsoleState {
  return {
    ...state,
    transcript: [...state.transcript, { role: 'user', text, lang: state.language }],
    statusBadge: null,
  };
}

export function applyCommandResponse(
  state: ConsoleState,
  response: CommandResponse,
): ConsoleState {
  const transcript = [
    ...state.transcript,
    { role: 'robot' as const, text: response.reply_text, lang: response.language },
  ];
  const planCard =
    response.needs_confirmation && response.plan && response.confirm_phrases
      ? {
          lines: response.plan,
          language: response.language,
          positive: response.confirm_phrases.positive,
          negative: response.confirm_phrases.negative,
        }
      : null;
  return {
    ...state,
    transcript,
    language: response.language,
    planCard,
    executing: !response.needs_confirmation && !!response.plan && response.plan.length > 0,
  };
}

export function applyConfirmResponse(
  state: ConsoleState,
  response: ConfirmResponse,
): ConsoleState {
  const transcript = response.reply_text
    ? [...state.transcript, { role: 'robot' as const, text: response.reply_text, lang: state.language }]
    : state.transcript;
  // reprompt keeps the card; any definite verdict dismisses it
  const planCard = response.reprompt ? state.planCard : null;
  return {
    ...state,
    transcript,
    planCard,
    executing: response.executed,
  };
}

export function applyTelemetry(state: ConsoleState, event: TelemetryEvent): ConsoleState {
  if (event.seq <= state.lastSeq) return state; // stale or replayed frame
  const dropped = state.lastSeq > 0 ? Math.max(0, event.seq - state.lastSeq - 1) : 0;
  const next: ConsoleState = {
    ...state,
    lastSeq: event.seq,
    droppedEvents: state.droppedEvents + dropped,
  };
  switch (event.kind) {
    case 'pose':
      if (event.pose) {
        next.pose = event.pose;
        next.trail = [...state.trail, event.pose];
      }
      return next;
    case 'message':
      if (event.message) {
        next.transcript = [
          ...state.transcript,
          { role: 'robot', text: event.message, lang: event.lang ?? state.language },
        ];
      }
      if (event.lang) next.language = event.lang;
      return next;
    case 'status':
      if (event.status === 'aborted') {
        next.statusBadge = 'Aborted';
        next.executing = false;
      } else if (event.status === 'idle') {
        next.executing = false;
      } else if (event.status === 'failed') {
        next.statusBadge = 'Failed';
      }
      return next;
    default:
      return next; // heartbeats advance the sequence only
  }
}

export function applyConnection(
  state: ConsoleState,
  connection: ConsoleState['connection'],
): ConsoleState {
  return { ...state, connection };
}

export function applyLanguageOverride(
  state: ConsoleState,
  language: string,
  source: 'detected' | 'override',
): ConsoleState {
  return { ...state, language, languageSource: source };
}
