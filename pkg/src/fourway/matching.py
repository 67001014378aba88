"""Prefix constraints, entry normalization, and list matching.

An entry matches a prefix when some word's letter stream, read from its
first letter (optionally continuing across following words, optionally
wrapping back to the first word), satisfies every constraint of the
prefix position by position. Characters outside the layout alphabet act
as word separators and are never matched.
"""

from __future__ import annotations

from dataclasses import dataclass

from .layouts import Direction, KeypadLayout, Layout, LayoutError


@dataclass(frozen=True)
class DirectionGroup:
    direction: Direction


@dataclass(frozen=True)
class KeypadGroup:
    key: str


@dataclass(frozen=True)
class Literal:
    letter: str


Constraint = DirectionGroup | KeypadGroup | Literal
Prefix = tuple[Constraint, ...]


@dataclass(frozen=True)
class MatchOptions:
    """Knobs for the matcher.

    wrap implies span_words; word_mode=False restricts matching to the
    whole-entry stream starting at the first word.
    """

    case_sensitive: bool = False
    span_words: bool = True
    wrap: bool = False
    word_mode: bool = True

    def __post_init__(self) -> None:
        if self.wrap and not self.span_words:
            raise ValueError("wrap requires span_words")


def letter_set(
    constraint: Constraint, layout: Layout, keypad: KeypadLayout | None = None
) -> frozenset[str]:
    """The set of letters a single constraint stands for."""
    if isinstance(constraint, DirectionGroup):
        return frozenset(layout.group(constraint.direction))
    if isinstance(constraint, KeypadGroup):
        if keypad is None:
            raise LayoutError("keypad constraint used without a keypad layout")
        return frozenset(keypad.group(constraint.key))
    if constraint.letter not in layout.alphabet:
        raise LayoutError(f"insignificant literal {constraint.letter!r}")
    return frozenset((constraint.letter,))


@dataclass(frozen=True)
class Entry:
    """One selectable list item with its significant-letter streams.

    streams holds, per word, the (letter, offset) pairs pointing back
    into display_text; offsets strictly increase.
    """

    display_text: str
    streams: tuple[tuple[tuple[str, int], ...], ...]

    @property
    def words(self) -> tuple[str, ...]:
        return tuple("".join(c for c, _ in s) for s in self.streams)

    @property
    def whole_stream(self) -> tuple[tuple[str, int], ...]:
        return tuple(p for s in self.streams for p in s)


def normalize_entry(raw_text: str, layout: Layout, options: MatchOptions) -> Entry:
    """Split raw text into words of significant letters.

    Anything outside the layout alphabet (punctuation, whitespace,
    digits) is a separator. Without case_sensitive, letters are folded
    to upper case; offsets always refer to the original text.
    """
    streams: list[tuple[tuple[str, int], ...]] = []
    current: list[tuple[str, int]] = []
    for offset, ch in enumerate(raw_text):
        c = ch if options.case_sensitive else ch.upper()
        if c in layout.alphabet:
            current.append((c, offset))
        elif current:
            streams.append(tuple(current))
            current = []
    if current:
        streams.append(tuple(current))
    return Entry(display_text=raw_text, streams=tuple(streams))


def _candidate_streams(entry: Entry, options: MatchOptions):
    """Yield, per permitted start word, the readable (letter, offset) sequence."""
    n = len(entry.streams)
    if n == 0:
        yield ()
        return
    starts = range(n) if options.word_mode else (0,)
    for i in starts:
        seq = list(entry.streams[i])
        if options.span_words:
            for j in range(i + 1, n):
                seq.extend(entry.streams[j])
            if options.wrap:
                for j in range(i):
                    seq.extend(entry.streams[j])
        yield tuple(seq)


def _satisfies(
    seq: tuple[tuple[str, int], ...],
    sets: list[frozenset[str]],
) -> bool:
    if len(sets) > len(seq):
        return False
    return all(seq[k][0] in sets[k] for k in range(len(sets)))


def _constraint_sets(
    prefix: Prefix, layout: Layout, keypad: KeypadLayout | None
) -> list[frozenset[str]]:
    return [letter_set(c, layout, keypad) for c in prefix]


def matches(
    entry: Entry,
    prefix: Prefix,
    layout: Layout,
    keypad: KeypadLayout | None = None,
    options: MatchOptions = MatchOptions(),
) -> bool:
    """True when some permitted start word satisfies the whole prefix."""
    if not prefix:
        return True
    sets = _constraint_sets(prefix, layout, keypad)
    return any(_satisfies(seq, sets) for seq in _candidate_streams(entry, options))


def match_positions(
    entry: Entry,
    prefix: Prefix,
    layout: Layout,
    keypad: KeypadLayout | None = None,
    options: MatchOptions = MatchOptions(),
) -> tuple[int, ...] | None:
    """Witness offsets for a match: leftmost start word, read greedily.

    Returns one display_text offset per prefix position, or None when
    the entry does not match.
    """
    sets = _constraint_sets(prefix, layout, keypad)
    for seq in _candidate_streams(entry, options):
        if _satisfies(seq, sets):
            return tuple(seq[k][1] for k in range(len(sets)))
    return None


def next_letters(
    entries: list[Entry],
    prefix: Prefix,
    layout: Layout,
    keypad: KeypadLayout | None = None,
    options: MatchOptions = MatchOptions(),
) -> dict[Direction, frozenset[str]]:
    """Per direction, the letters that keep at least one entry alive.

    Letters absent from every returned set would dead-end the list if
    appended as a literal; UIs gray them out.
    """
    viable: dict[Direction, set[str]] = {d: set() for d in Direction}
    live = [e for e in entries if matches(e, prefix, layout, keypad, options)]
    for direction in Direction:
        for c in layout.group(direction):
            extended = prefix + (Literal(c),)
            if any(matches(e, extended, layout, keypad, options) for e in live):
                viable[direction].add(c)
    return {d: frozenset(s) for d, s in viable.items()}
