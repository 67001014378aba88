// Message schema shared with the demo server, plus input-to-message mapping.

export type DirectionName = 'up' | 'down' | 'left' | 'right';

export interface PrefixToken {
  kind: 'direction' | 'keypad' | 'literal';
  direction?: DirectionName;
  key?: string;
  letter?: string;
  letters?: string[];
}

export interface EntrySnapshot {
  text: string;
  highlights: number[];
}

export interface StateSnapshot {
  type: 'state';
  mode: 'selection' | 'scrolling';
  prefix: PrefixToken[];
  entries: EntrySnapshot[];
  cursor: number | null;
  viable: Record<DirectionName, string[]>;
  layout: Record<DirectionName, string[]>;
}

export interface SelectedMessage {
  type: 'selected';
  text: string;
}

export interface RejectedMessage {
  type: 'rejected';
  reason: string;
}

export interface ErrorMessage {
  type: 'error';
  message: string;
}

export type ServerMessage =
  | StateSnapshot
  | SelectedMessage
  | RejectedMessage
  | ErrorMessage;

export type ClientMessage =
  | {
      type: 'hello';
      dataset: string;
      layout: string;
      options?: { span_words?: boolean; wrap?: boolean; word_mode?: boolean };
      cursor?: 'first' | 'middle';
    }
  | { type: 'event'; event: string; key?: string; letter?: string }
  | { type: 'trackball'; dx: number; dy: number };

const KEY_EVENTS: Record<string, string> = {
  ArrowUp: 'up',
  ArrowDown: 'down',
  ArrowLeft: 'left',
  ArrowRight: 'right',
  Enter: 'select',
  Backspace: 'backspace',
  Escape: 'reset',
};

/** Map a keyboard key name to a protocol message, or null to ignore it. */
export function keyToMessage(key: string): ClientMessage | null {
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
export function dragToMessage(dxScreen: number, dyScreen: number): ClientMessage {
  return { type: 'trackball', dx: dxScreen, dy: -dyScreen };
}
