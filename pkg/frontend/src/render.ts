// Pure view model: a screen description computed from the last snapshot.
// DOM code consumes this; tests assert on it without a browser.

import type { DirectionName, StateSnapshot } from './protocol.js';

export interface LetterCell {
  letter: string;
  grayed: boolean;
}

export interface ListRow {
  text: string;
  highlights: number[];
  cursor: boolean;
}

export interface Screen {
  mode: 'selection' | 'scrolling';
  rows: ListRow[];
  groups: Record<DirectionName, LetterCell[]>;
  prefixLabel: string;
}

const DIRECTIONS: DirectionName[] = ['up', 'down', 'left', 'right'];

export function render(snapshot: StateSnapshot): Screen {
  const groups = {} as Record<DirectionName, LetterCell[]>;
  for (const d of DIRECTIONS) {
    const viable = new Set(snapshot.viable?.[d] ?? []);
    groups[d] = (snapshot.layout?.[d] ?? []).map((letter) => ({
      letter,
      grayed: !viable.has(letter),
    }));
  }
  const rows = (snapshot.entries ?? []).map((entry, i) => ({
    text: entry.text,
    highlights: entry.highlights ?? [],
    cursor: snapshot.mode === 'scrolling' && snapshot.cursor === i,
  }));
  return {
    mode: snapshot.mode,
    rows,
    groups,
    prefixLabel: (snapshot.prefix ?? []).map(tokenLabel).join(' '),
  };
}

function tokenLabel(token: {
  kind: string;
  direction?: string;
  key?: string;
  letter?: string;
}): string {
  if (token.kind === 'direction') {
    return { up: '↑', down: '↓', left: '←', right: '→' }[
      token.direction ?? ''
    ] ?? '?';
  }
  if (token.kind === 'keypad') {
    return `[${token.key}]`;
  }
  return token.letter ?? '?';
}

/** Split entry text into plain/highlighted segments for display. */
export function highlightSegments(
  text: string,
  highlights: number[],
): { text: string; highlighted: boolean }[] {
  const marked = new Set(highlights);
  const segments: { text: string; highlighted: boolean }[] = [];
  for (let i = 0; i < text.length; i++) {
    const highlighted = marked.has(i);
    const last = segments[segments.length - 1];
    if (last !== undefined && last.highlighted === highlighted) {
      last.text += text[i];
    } else {
      segments.push({ text: text[i], highlighted });
    }
  }
  return segments;
}
