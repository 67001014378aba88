// Pure view model: a screen description computed from the last snapshot.
// DOM code consumes this; tests assert on it without a browser.
const DIRECTIONS = ['up', 'down', 'left', 'right'];
export function render(snapshot) {
    const groups = {};
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
function tokenLabel(token) {
    if (token.kind === 'direction') {
        return { up: '↑', down: '↓', left: '←', right: '→' }[token.direction ?? ''] ?? '?';
    }
    if (token.kind === 'keypad') {
        return `[${token.key}]`;
    }
    return token.letter ?? '?';
}
/** Split entry text into plain/highlighted segments for display. */
export function highlightSegments(text, highlights) {
    const marked = new Set(highlights);
    const segments = [];
    for (let i = 0; i < text.length; i++) {
        const highlighted = marked.has(i);
        const last = segments[segments.length - 1];
        if (last !== undefined && last.highlighted === highlighted) {
            last.text += text[i];
        }
        else {
            segments.push({ text: text[i], highlighted });
        }
    }
    return segments;
}
