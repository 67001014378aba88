// Browser wiring: websocket connection, input capture, DOM painting.

import { dragToMessage, keyToMessage } from './protocol.js';
import type { ClientMessage, ServerMessage, StateSnapshot } from './protocol.js';
import { highlightSegments, render } from './render.js';

type InputMode = 'keys' | 'trackball';

interface UiState {
  snapshot: StateSnapshot | null;
  connected: boolean;
  inputMode: InputMode;
  banner: string | null;
}

const state: UiState = {
  snapshot: null,
  connected: false,
  inputMode: 'keys',
  banner: null,
};

let ws: WebSocket | null = null;

function send(message: ClientMessage): void {
  if (ws !== null && ws.readyState === WebSocket.OPEN) {
    ws.send(JSON.stringify(message));
  }
}

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (node === null) throw new Error(`missing #${id}`);
  return node;
}

function paint(): void {
  el('status').textContent = state.connected ? 'connected' : 'disconnected';
  el('banner').textContent = state.banner ?? '';
  el('banner').classList.toggle('hidden', state.banner === null);
  if (state.snapshot === null) return;
  const screen = render(state.snapshot);

  el('mode').textContent = screen.mode;
  el('prefix').textContent = screen.prefixLabel || '(empty)';

  for (const dir of ['up', 'down', 'left', 'right'] as const) {
    const box = el(`group-${dir}`);
    box.replaceChildren(
      ...screen.groups[dir].map((cell) => {
        const span = document.createElement('span');
        span.textContent = cell.letter;
        span.className = cell.grayed ? 'letter grayed' : 'letter';
        return span;
      }),
    );
  }

  const list = el('entries');
  list.replaceChildren(
    ...screen.rows.map((row) => {
      const li = document.createElement('li');
      li.className = row.cursor ? 'entry cursor' : 'entry';
      for (const seg of highlightSegments(row.text, row.highlights)) {
        const span = document.createElement('span');
        span.textContent = seg.text;
        if (seg.highlighted) span.className = 'matched';
        li.appendChild(span);
      }
      return li;
    }),
  );
}

function handleMessage(message: ServerMessage): void {
  if (message.type === 'state') {
    state.snapshot = message;
    state.banner = null;
  } else if (message.type === 'selected') {
    state.banner = `Selected: ${message.text}`;
  } else if (message.type === 'rejected') {
    flashRejection(message.reason);
  } else {
    state.banner = `Error: ${message.message}`;
  }
  paint();
}

function flashRejection(reason: string): void {
  const status = el('status');
  status.textContent = reason;
  setTimeout(() => paint(), 400);
}

function connect(dataset: string): void {
  const proto = location.protocol === 'https:' ? 'wss' : 'ws';
  ws = new WebSocket(`${proto}://${location.host}/ws`);
  ws.onopen = () => {
    state.connected = true;
    send({ type: 'hello', dataset, layout: layoutChoice() });
    paint();
  };
  ws.onclose = () => {
    state.connected = false;
    paint();
  };
  ws.onmessage = (ev) => {
    handleMessage(JSON.parse(ev.data) as ServerMessage);
  };
}

function layoutChoice(): string {
  return (el('layout') as HTMLSelectElement).value;
}

function setupKeyboard(): void {
  document.addEventListener('keydown', (ev) => {
    if ((ev.target as HTMLElement).tagName === 'SELECT') return;
    const message = keyToMessage(ev.key);
    if (message !== null) {
      ev.preventDefault();
      send(message);
    }
  });
}

function setupJoystickButtons(): void {
  for (const dir of ['up', 'down', 'left', 'right']) {
    el(`btn-${dir}`).addEventListener('click', () =>
      send({ type: 'event', event: dir }),
    );
  }
  el('btn-select').addEventListener('click', () =>
    send({ type: 'event', event: 'select' }),
  );
  el('btn-backspace').addEventListener('click', () =>
    send({ type: 'event', event: 'backspace' }),
  );
  el('btn-reset').addEventListener('click', () =>
    send({ type: 'event', event: 'reset' }),
  );
}

function setupTrackballDrag(): void {
  const pad = el('trackpad');
  let last: { x: number; y: number } | null = null;
  pad.addEventListener('pointerdown', (ev) => {
    last = { x: ev.clientX, y: ev.clientY };
    pad.setPointerCapture(ev.pointerId);
  });
  pad.addEventListener('pointermove', (ev) => {
    if (last === null) return;
    const dx = ev.clientX - last.x;
    const dy = ev.clientY - last.y;
    if (Math.abs(dx) + Math.abs(dy) >= 6) {
      send(dragToMessage(dx, dy));
      last = { x: ev.clientX, y: ev.clientY };
    }
  });
  const stop = () => {
    last = null;
  };
  pad.addEventListener('pointerup', stop);
  pad.addEventListener('pointercancel', stop);
}

async function start(): Promise<void> {
  const resp = await fetch('/api/datasets');
  const { datasets } = (await resp.json()) as { datasets: string[] };
  const picker = el('dataset') as HTMLSelectElement;
  picker.replaceChildren(
    ...datasets.map((name) => {
      const option = document.createElement('option');
      option.value = name;
      option.textContent = name;
      return option;
    }),
  );
  const reconnect = () => {
    ws?.close();
    connect(picker.value);
  };
  picker.addEventListener('change', reconnect);
  el('layout').addEventListener('change', reconnect);
  setupKeyboard();
  setupJoystickButtons();
  setupTrackballDrag();
  connect(picker.value);
}

start().catch((err) => {
  el('status').textContent = `failed to start: ${err}`;
});
