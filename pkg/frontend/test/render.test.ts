import { describe, expect, it } from 'vitest';

import type { StateSnapshot } from '../src/protocol.js';
import { highlightSegments, render } from '../src/render.js';

function snapshot(overrides: Partial<StateSnapshot> = {}): StateSnapshot {
  return {
    type: 'state',
    mode: 'selection',
    prefix: [],
    entries: [
      { text: 'T.S., Eliot', highlights: [] },
      { text: 'Joyce', highlights: [] },
    ],
    cursor: null,
    viable: { up: ['E'], down: [], left: [], right: ['J'] },
    layout: {
      up: 'QWERTYUIOP'.split(''),
      left: 'ASDFG'.split(''),
      right: 'HJKL'.split(''),
      down: 'ZXCVBNM'.split(''),
    },
    ...overrides,
  };
}

describe('render', () => {
  it('grays exactly the complement of the viable set in each group', () => {
    const screen = render(snapshot());
    for (const dir of ['up', 'down', 'left', 'right'] as const) {
      const grayed = screen.groups[dir]
        .filter((c) => c.grayed)
        .map((c) => c.letter);
      const viable = new Set(snapshot().viable[dir]);
      const expected = snapshot().layout[dir].filter((l) => !viable.has(l));
      expect(grayed).toEqual(expected);
    }
  });

  it('keeps letter order of the layout groups', () => {
    const screen = render(snapshot());
    expect(screen.groups.up.map((c) => c.letter).join('')).toBe('QWERTYUIOP');
  });

  it('initial snapshot has no highlights', () => {
    const screen = render(snapshot());
    expect(screen.rows.every((r) => r.highlights.length === 0)).toBe(true);
    expect(screen.rows.every((r) => !r.cursor)).toBe(true);
  });

  it('passes highlight offsets through', () => {
    const screen = render(
      snapshot({ entries: [{ text: 'T.S., Eliot', highlights: [0, 2] }] }),
    );
    expect(screen.rows[0].highlights).toEqual([0, 2]);
  });

  it('marks the cursor row in scrolling mode', () => {
    const screen = render(
      snapshot({
        mode: 'scrolling',
        cursor: 2,
        entries: [
          { text: 'a', highlights: [] },
          { text: 'b', highlights: [] },
          { text: 'c', highlights: [] },
        ],
      }),
    );
    expect(screen.rows.map((r) => r.cursor)).toEqual([false, false, true]);
  });

  it('does not mark a cursor in selection mode', () => {
    const screen = render(snapshot({ cursor: 0 }));
    expect(screen.rows.every((r) => !r.cursor)).toBe(true);
  });

  it('labels direction prefix tokens with arrows', () => {
    const screen = render(
      snapshot({
        prefix: [
          { kind: 'direction', direction: 'up', letters: [] },
          { kind: 'keypad', key: '7', letters: [] },
          { kind: 'literal', letter: 'Z' },
        ],
      }),
    );
    expect(screen.prefixLabel).toBe('↑ [7] Z');
  });

  it('is a pure function: same snapshot, same screen', () => {
    const s = snapshot({ entries: [{ text: 'X', highlights: [] }] });
    expect(render(s)).toEqual(render(s));
  });

  it('renders defensively when fields are missing', () => {
    const partial = { type: 'state', mode: 'selection' } as StateSnapshot;
    const screen = render(partial);
    expect(screen.rows).toEqual([]);
    expect(screen.prefixLabel).toBe('');
  });
});

describe('highlightSegments', () => {
  it('splits text into highlighted runs', () => {
    expect(highlightSegments('T.S., Eliot', [0, 2])).toEqual([
      { text: 'T', highlighted: true },
      { text: '.', highlighted: false },
      { text: 'S', highlighted: true },
      { text: '., Eliot', highlighted: false },
    ]);
  });

  it('handles empty highlights', () => {
    expect(highlightSegments('ab', [])).toEqual([
      { text: 'ab', highlighted: false },
    ]);
  });

  it('round-trips the original text', () => {
    const segments = highlightSegments('John Updike', [0, 1, 2, 3, 5]);
    expect(segments.map((s) => s.text).join('')).toBe('John Updike');
  });
});
