// Browser entry point: binds the controller to the DOM.

import { GatewayClient } from './api.js';
import { ConsoleController } from './controller.js';
import { drawMap, viewport } from './map.js';
import type { ConsoleState } from './state.js';

const httpBase = window.location.origin;
const wsBase = httpBase.replace(/^http/, 'ws');

const client = new GatewayClient(httpBase);
const controller = new ConsoleController(client, wsBase, (url) => new WebSocket(url));

const transcriptEl = document.getElementById('transcript') as HTMLElement;
const planCardEl = document.getElementById('plan-card') as HTMLElement;
const inputEl = document.getElementById('command-input') as HTMLInputElement;
const formEl = document.getElementById('command-form') as HTMLFormElement;
const badgeEl = document.getElementById('language-badge') as HTMLElement;
const statusEl = document.getElementById('connection-status') as HTMLElement;
const abortEl = document.getElementById('abort-button') as HTMLButtonElement;
const overrideEl = document.getElementById('language-override') as HTMLSelectElement;
const canvasEl = document.getElementById('map-canvas') as HTMLCanvasElement;
const badgeStateEl = document.getElementById('status-badge') as HTMLElement;

function renderTranscript(state: ConsoleState): void {
  transcriptEl.replaceChildren(
    ...state.transcript.map((turn) => {
      const row = document.createElement('div');
      row.className = `turn turn-${turn.role}`;
      const badge = document.createElement('span');
      badge.className = 'lang-badge';
      badge.textContent = turn.lang.toUpperCase();
      const text = document.createElement('span');
      text.className = 'turn-text';
      // dir=auto lets the browser lay out RTL scripts correctly
      text.setAttribute('dir', 'auto');
      text.textContent = turn.text;
      row.append(badge, text);
      return row;
    }),
  );
  transcriptEl.scrollTop = transcriptEl.scrollHeight;
}

function renderPlanCard(state: ConsoleState): void {
  if (!state.planCard) {
    planCardEl.hidden = true;
    planCardEl.replaceChildren();
    return;
  }
  planCardEl.hidden = false;
  const list = document.createElement('ol');
  for (const line of state.planCard.lines) {
    const item = document.createElement('li');
    item.setAttribute('dir', 'auto');
    item.textContent = line;
    list.append(item);
  }
  const approve = document.createElement('button');
  approve.textContent = `Approve (“${state.planCard.positive}”)`;
  approve.onclick = () => void controller.approve();
  const reject = document.createElement('button');
  reject.className = 'reject';
  reject.textContent = `Reject (“${state.planCard.negative}”)`;
  reject.onclick = () => void controller.reject();
  const title = document.createElement('h3');
  title.textContent = 'Pending plan';
  planCardEl.replaceChildren(title, list, approve, reject);
}

function renderChrome(state: ConsoleState): void {
  badgeEl.textContent =
    state.language.toUpperCase() + (state.languageSource === 'override' ? ' 🔒' : '');
  statusEl.textContent = state.connection;
  statusEl.className = `conn conn-${state.connection}`;
  badgeStateEl.textContent = state.statusBadge ?? (state.executing ? 'executing' : 'idle');
}

function renderMap(state: ConsoleState): void {
  const snapshot = controller.mapState;
  if (!snapshot) return;
  const view = viewport(snapshot.map, canvasEl.clientWidth || 480);
  canvasEl.width = view.widthPx;
  canvasEl.height = view.heightPx;
  const ctx = canvasEl.getContext('2d');
  if (!ctx) return;
  drawMap(ctx, snapshot.map, view, state.trail, state.pose, snapshot.objects);
}

controller.subscribe((state) => {
  renderTranscript(state);
  renderPlanCard(state);
  renderChrome(state);
  renderMap(state);
});

formEl.addEventListener('submit', (event) => {
  event.preventDefault();
  const text = inputEl.value.trim();
  if (!text) return;
  inputEl.value = '';
  void controller.submit(text).catch((error) => {
    const row = document.createElement('div');
    row.className = 'turn turn-error';
    row.textContent = String(error);
    transcriptEl.append(row);
  });
});

abortEl.addEventListener('click', () => void controller.abort());

overrideEl.addEventListener('change', () => {
  const code = overrideEl.value;
  void controller.overrideLanguage(code === '' ? null : code);
});

void controller.start().catch((error) => {
  statusEl.textContent = `failed to start: ${error}`;
});
