import { afterEach, beforeEach, describe, expect, it, vi } from 'vitest';

import { EventStream, WebSocketLike } from '../src/events.js';
import type { TelemetryEvent } from '../src/types.js';

class FakeSocket implements WebSocketLike {
  onopen: ((ev?: unknown) => void) | null = null;
  onmessage: ((ev: { data: unknown }) => void) | null = null;
  onclose: ((ev?: unknown) => void) | null = null;
  onerror: ((ev?: unknown) => void) | null = null;
  closed = false;

  constructor(public url: string) {}

  close(): void {
    this.closed = true;
    this.onclose?.();
  }

  emit(event: Partial<TelemetryEvent>): void {
    this.onmessage?.({ data: JSON.stringify(event) });
  }
}

describe('EventStream', () => {
  let sockets: FakeSocket[];
  let factory: (url: string) => FakeSocket;

  beforeEach(() => {
    vi.useFakeTimers();
    sockets = [];
    factory = (url) => {
      const socket = new FakeSocket(url);
      sockets.push(socket);
      return socket;
    };
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it('delivers events in order and deduplicates by sequence', () => {
    const stream = new EventStream('ws://gw', 's1', factory);
    const seen: number[] = [];
    stream.onEvent = (e) => seen.push(e.seq);
    stream.connect();
    const socket = sockets[0];
    socket.onopen?.();
    socket.emit({ seq: 1, kind: 'pose', t: 0 });
    socket.emit({ seq: 2, kind: 'pose', t: 0 });
    socket.emit({ seq: 2, kind: 'pose', t: 0 }); // duplicate ignored
    socket.emit({ seq: 5, kind: 'status', t: 0 });
    expect(seen).toEqual([1, 2, 5]);
    expect(stream.lastSequence).toBe(5);
  });

  it('reconnects with backoff and resumes from the last sequence', () => {
    const stream = new EventStream('ws://gw', 's1', factory, { initialBackoffMs: 100 });
    const statuses: string[] = [];
    stream.onStatus = (s) => statuses.push(s);
    stream.connect();
    expect(sockets[0].url).toContain('since=0');
    sockets[0].onopen?.();
    sockets[0].emit({ seq: 7, kind: 'pose', t: 0 });
    sockets[0].onclose?.();

    vi.advanceTimersByTime(100);
    expect(sockets).toHaveLength(2);
    expect(sockets[1].url).toContain('since=7'); // replay from last seen

    sockets[1].onclose?.(); // fails again: doubled backoff
    vi.advanceTimersByTime(100);
    expect(sockets).toHaveLength(2);
    vi.advanceTimersByTime(100);
    expect(sockets).toHaveLength(3);
    expect(statuses).toContain('connecting');
    expect(statuses).toContain('closed');
  });

  it('stop() prevents reconnection', () => {
    const stream = new EventStream('ws://gw', 's1', factory, { initialBackoffMs: 50 });
    stream.connect();
    stream.stop();
    expect(sockets[0].closed).toBe(true);
    vi.advanceTimersByTime(1000);
    expect(sockets).toHaveLength(1);
  });

  it('skips malformed frames', () => {
    const stream = new EventStream('ws://gw', 's1', factory);
    const seen: number[] = [];
    stream.onEvent = (e) => seen.push(e.seq);
    stream.connect();
    sockets[0].onmessage?.({ data: 'not json{{' });
    sockets[0].emit({ seq: 1, kind: 'pose', t: 0 });
    expect(seen).toEqual([1]);
  });
});
