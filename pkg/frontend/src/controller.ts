// Wires the HTTP client, the event stream, and the view state together.
// Headless by design: the browser entry point and the node integration
// test drive the same controller.

import { GatewayClient } from './api.js';
import { EventStream, WebSocketFactory } from './events.js';
import {
  ConsoleState,
  applyCommandResponse,
  applyConfirmResponse,
  applyConnection,
  applyLanguageOverride,
  applySessionState,
  applyTelemetry,
  applyUserCommand,
  initialState,
} from './state.js';
import type { SessionState } from './types.js';

export type StateListener = (state: ConsoleState) => void;

export class ConsoleController {
  state: ConsoleState = initialState();
  mapState: SessionState | null = null;
  private stream: EventStream | null = null;
  private listeners: StateListener[] = [];

  constructor(
    private client: GatewayClient,
    private wsBaseUrl: string,
    private wsFactory: WebSocketFactory,
  ) {}

  subscribe(listener: StateListener): void {
    this.listeners.push(listener);
  }

  private update(next: ConsoleState): void {
    this.state = next;
    for (const listener of this.listeners) listener(next);
  }

  async start(map?: string): Promise<void> {
    const created = await this.client.createSession(map);
    this.mapState = created.state;
    this.update(applySessionState(this.state, created.state));

    const stream = new EventStream(this.wsBaseUrl, created.id, this.wsFactory);
    stream.onEvent = (event) => this.update(applyTelemetry(this.state, event));
    stream.onStatus = (status) => this.update(applyConnection(this.state, status));
    stream.connect();
    this.stream = stream;
  }

  async submit(text: string): Promise<void> {
    if (!this.state.sessionId) throw new Error('no session');
    this.update(applyUserCommand(this.state, text));
    const response = await this.client.command(this.state.sessionId, text);
    this.update(applyCommandResponse(this.state, response));
  }

  /** Approve the pending plan with the canonical positive phrase, verbatim. */
  async approve(): Promise<void> {
    const card = this.state.planCard;
    if (!card || !this.state.sessionId) throw new Error('no pending plan');
    const outcome = await this.client.confirm(this.state.sessionId, card.positive);
    this.update(applyConfirmResponse(this.state, outcome));
  }

  /** Reject the pending plan with the canonical negative phrase, verbatim. */
  async reject(): Promise<void> {
    const card = this.state.planCard;
    if (!card || !this.state.sessionId) throw new Error('no pending plan');
    const outcome = await this.client.confirm(this.state.sessionId, card.negative);
    this.update(applyConfirmResponse(this.state, outcome));
  }

  async abort(): Promise<void> {
    if (!this.state.sessionId) return;
    await this.client.abort(this.state.sessionId);
  }

  async overrideLanguage(code: string | null): Promise<void> {
    if (!this.state.sessionId) return;
    const result = await this.client.setLanguage(this.state.sessionId, code);
    this.update(
      applyLanguageOverride(
        this.state,
        result.language,
        result.source as 'detected' | 'override',
      ),
    );
  }

  async refreshState(): Promise<void> {
    if (!this.state.sessionId) return;
    const snapshot = await this.client.state(this.state.sessionId);
    this.mapState = snapshot;
    this.update(applySessionState(this.state, snapshot));
  }

  stop(): void {
    this.stream?.stop();
  }
}
