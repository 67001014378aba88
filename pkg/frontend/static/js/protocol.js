// Message schema shared with the demo server, plus input-to-message mapping.
const KEY_EVENTS = {
    ArrowUp: 'up',
    ArrowDown: 'down',
    ArrowLeft: 'left',
    ArrowRight: 'right',
    Enter: 'select',
    Backspace: 'backspace',
    Escape: 'reset',
};
/** Map a keyboard key name to a protocol message, or null to ignore it. */
export function keyToMessage(key) {
    const event = KEY_EVENTS[key];
    if (event !== undefined) {
        return { type: 'event', event };
    }
    if (/^[2-9]$/.test(key)) {
        return { type: 'event', event: 'keypad', key };
    }
    if (/^[a-zA-Z]$/.test(key)) {
        return { type: 'event', event: 'literal', letter: key };
    }
    return null;
}
/**
 * Map a mouse drag in screen coordinates to a trackball message.
 * Screen y grows downwards; the protocol wants positive dy for upward moves.
 */
export function dragToMessage(dxScreen, dyScreen) {
    return { type: 'trackball', dx: dxScreen, dy: -dyScreen };
}
