// Telemetry stream with resume-from-sequence and exponential backoff.

import type { TelemetryEvent } from './types.js';

// handler params are deliberately loose so both the browser WebSocket and
// the node 'ws' client are structurally assignable
/* eslint-disable @typescript-eslint/no-explicit-any */
export interface WebSocketLike {
  onopen: ((ev?: any) => void) | null;
  onmessage: ((ev: any) => void) | null;
  onclose: ((ev?: any) => void) | null;
  onerror: ((ev?: any) => void) | null;
  close(): void;
}

export type WebSocketFactory = (url: string) => WebSocketLike;

export type ConnectionStatus = 'connecting' | 'open' | 'closed';

export interface EventStreamOptions {
  initialBackoffMs?: number;
  maxBackoffMs?: number;
}

export class EventStream {
  onEvent: (event: TelemetryEvent) => void = () => {};
  onStatus: (status: ConnectionStatus) => void = () => {};

  private lastSeq = 0;
  private backoffMs: number;
  private readonly initialBackoffMs: number;
  private readonly maxBackoffMs: number;
  private socket: WebSocketLike | null = null;
  private stopped = false;
  private reconnectTimer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private wsBaseUrl: string,
    private sessionId: string,
    private factory: WebSocketFactory,
    options: EventStreamOptions = {},
  ) {
    this.initialBackoffMs = options.initialBackoffMs ?? 500;
    this.maxBackoffMs = options.maxBackoffMs ?? 8000;
    this.backoffMs = this.initialBackoffMs;
  }

  get lastSequence(): number {
    return this.lastSeq;
  }

  connect(): void {
    if (this.stopped) return;
    this.onStatus('connecting');
    const url = `${this.wsBaseUrl}/sessions/${this.sessionId}/events?since=${this.lastSeq}`;
    const socket = this.factory(url);
    this.socket = socket;

    socket.onopen = () => {
      this.backoffMs = this.initialBackoffMs;
      this.onStatus('open');
    };
    socket.onmessage = (message) => {
      let event: TelemetryEvent;
      try {
        event = JSON.parse(String(message.data)) as TelemetryEvent;
      } catch {
        return; // skip malformed frames
      }
      if (typeof event.seq !== 'number' || event.seq <= this.lastSeq) return;
      this.lastSeq = event.seq;
      this.onEvent(event);
    };
    socket.onerror = () => {
      // the close handler owns reconnection
    };
    socket.onclose = () => {
      this.onStatus('closed');
      if (this.stopped) return;
      this.reconnectTimer = setTimeout(() => this.connect(), this.backoffMs);
      this.backoffMs = Math.min(this.backoffMs * 2, this.maxBackoffMs);
    };
  }

  stop(): void {
    this.stopped = true;
    if (this.reconnectTimer !== null) clearTimeout(this.reconnectTimer);
    if (this.socket) this.socket.close();
  }
}
