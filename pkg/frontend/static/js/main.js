// Browser wiring: websocket connection, input capture, DOM painting.
import { dragToMessage, keyToMessage } from './protocol.js';
import { highlightSegments, render } from './render.js';
const state = {
    snapshot: null,
    connected: false,
    inputMode: 'keys',
    banner: null,
};
let ws = null;
function send(message) {
    if (ws !== null && ws.readyState === WebSocket.OPEN) {
        ws.send(JSON.stringify(message));
    }
}
function el(id) {
    const node = document.getElementById(id);
    if (node === null)
        throw new Error(`missing #${id}`);
    return node;
}
function paint() {
    el('status').textContent = state.connected ? 'connected' : 'disconnected';
    el('banner').textContent = state.banner ?? '';
    el('banner').classList.toggle('hidden', state.banner === null);
    if (state.snapshot === null)
        return;
    const screen = render(state.snapshot);
    el('mode').textContent = screen.mode;
    el('prefix').textContent = screen.prefixLabel || '(empty)';
    for (const dir of ['up', 'down', 'left', 'right']) {
        const box = el(`group-${dir}`);
        box.replaceChildren(...screen.groups[dir].map((cell) => {
            const span = document.createElement('span');
            span.textContent = cell.letter;
            span.className = cell.grayed ? 'letter grayed' : 'letter';
            return span;
        }));
    }
    const list = el('entries');
    list.replaceChildren(...screen.rows.map((row) => {
        const li = document.createElement('li');
        li.className = row.cursor ? 'entry cursor' : 'entry';
        for (const seg of highlightSegments(row.text, row.highlights)) {
            const span = document.createElement('span');
            span.textContent = seg.text;
            if (seg.highlighted)
                span.className = 'matched';
            li.appendChild(span);
        }
        return li;
    }));
}
function handleMessage(message) {
    if (message.type === 'state') {
        state.snapshot = message;
        state.banner = null;
    }
    else if (message.type === 'selected') {
        state.banner = `Selected: ${message.text}`;
    }
    else if (message.type === 'rejected') {
        flashRejection(message.reason);
    }
    else {
        state.banner = `Error: ${message.message}`;
    }
    paint();
}
function flashRejection(reason) {
    const status = el('status');
    status.textContent = reason;
    setTimeout(() => paint(), 400);
}
function connect(dataset) {
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
        handleMessage(JSON.parse(ev.data));
    };
}
function layoutChoice() {
    return el('layout').value;
}
function setupKeyboard() {
    document.addEventListener('keydown', (ev) => {
        if (ev.target.tagName === 'SELECT')
            return;
        const message = keyToMessage(ev.key);
        if (message !== null) {
            ev.preventDefault();
            send(message);
        }
    });
}
function setupJoystickButtons() {
    for (const dir of ['up', 'down', 'left', 'right']) {
        el(`btn-${dir}`).addEventListener('click', () => send({ type: 'event', event: dir }));
    }
    el('btn-select').addEventListener('click', () => send({ type: 'event', event: 'select' }));
    el('btn-backspace').addEventListener('click', () => send({ type: 'event', event: 'backspace' }));
    el('btn-reset').addEventListener('click', () => send({ type: 'event', event: 'reset' }));
}
function setupTrackballDrag() {
    const pad = el('trackpad');
    let last = null;
    pad.addEventListener('pointerdown', (ev) => {
        last = { x: ev.clientX, y: ev.clientY };
        pad.setPointerCapture(ev.pointerId);
    });
    pad.addEventListener('pointermove', (ev) => {
        if (last === null)
            return;
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
async function start() {
    const resp = await fetch('/api/datasets');
    const { datasets } = (await resp.json());
    const picker = el('dataset');
    picker.replaceChildren(...datasets.map((name) => {
        const option = document.createElement('option');
        option.value = name;
        option.textContent = name;
        return option;
    }));
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
