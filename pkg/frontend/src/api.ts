// Thin typed client over the gateway HTTP endpoints.

import type {
  CommandResponse,
  ConfirmResponse,
  SessionState,
} from './types.js';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class GatewayError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export class GatewayClient {
  constructor(
    private baseUrl: string,
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
    private token: string = '',
  ) {
    this.baseUrl = baseUrl.replace(/\/$/, '');
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const headers: Record<string, string> = { 'content-type': 'application/json' };
    if (this.token) headers['authorization'] = `Bearer ${this.token}`;
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    if (!response.ok) {
      let detail = `HTTP ${response.status}`;
      try {
        const payload = await response.json();
        if (payload && payload.detail) detail = String(payload.detail);
      } catch {
        // body was not JSON; keep the status text
      }
      throw new GatewayError(response.status, detail);
    }
    return (await response.json()) as T;
  }

  createSession(map?: string): Promise<{ id: string; state: SessionState }> {
    return this.request('POST', '/sessions', map ? { map } : {});
  }

  maps(): Promise<{ maps: string[] }> {
    return this.request('GET', '/maps');
  }

  state(sessionId: string): Promise<SessionState> {
    return this.request('GET', `/sessions/${sessionId}/state`);
  }

  command(sessionId: string, text: string): Promise<CommandResponse> {
    return this.request('POST', `/sessions/${sessionId}/command`, { text });
  }

  confirm(sessionId: string, text: string): Promise<ConfirmResponse> {
    return this.request('POST', `/sessions/${sessionId}/confirm`, { text });
  }

  abort(sessionId: string): Promise<{ aborting: boolean }> {
    return this.request('POST', `/sessions/${sessionId}/abort`);
  }

  setLanguage(sessionId: string, code: string | null): Promise<{ language: string; source: string }> {
    return this.request('POST', `/sessions/${sessionId}/language`, { code });
  }
}
