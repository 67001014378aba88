"""The live selection state machine.

Two modes: selection (directional/keypad/literal events grow the
prefix and filter the list) and scrolling (up/down move a cursor,
left/right return to selection with the prefix intact). Dead-end
events are rejected so the filtered list is never empty.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .layouts import Direction, KeypadLayout, Layout
from .matching import (
    Constraint,
    DirectionGroup,
    Entry,
    KeypadGroup,
    Literal,
    MatchOptions,
    Prefix,
    match_positions,
    matches,
    next_letters,
    normalize_entry,
)

SELECTION = "selection"
SCROLLING = "scrolling"

CURSOR_FIRST = "first"
CURSOR_MIDDLE = "middle"


@dataclass(frozen=True)
class DirectionalEvent:
    direction: Direction


@dataclass(frozen=True)
class SelectEvent:
    pass


@dataclass(frozen=True)
class BackspaceEvent:
    pass


@dataclass(frozen=True)
class ResetEvent:
    pass


@dataclass(frozen=True)
class KeypadEvent:
    key: str


@dataclass(frozen=True)
class LiteralEvent:
    letter: str


InputEvent = (
    DirectionalEvent
    | SelectEvent
    | BackspaceEvent
    | ResetEvent
    | KeypadEvent
    | LiteralEvent
)


@dataclass(frozen=True)
class EntryView:
    text: str
    highlights: tuple[int, ...]


@dataclass(frozen=True)
class View:
    """Complete render state derived from a session."""

    mode: str
    prefix: Prefix
    entries: tuple[EntryView, ...]
    cursor: int | None
    viable: dict[Direction, frozenset[str]]


@dataclass(frozen=True)
class Continue:
    view: View


@dataclass(frozen=True)
class Selected:
    entry: Entry


@dataclass(frozen=True)
class Rejected:
    reason: str


Outcome = Continue | Selected | Rejected


@dataclass(frozen=True)
class _State:
    mode: str
    prefix: Prefix
    cursor: int | None


class Session:
    """Single-writer state machine over a fixed, normalized entry list."""

    def __init__(
        self,
        entries: list[str],
        layout: Layout,
        keypad: KeypadLayout | None = None,
        options: MatchOptions = MatchOptions(),
        cursor_policy: str = CURSOR_FIRST,
    ):
        if not entries:
            raise ValueError("entry list must not be empty")
        if cursor_policy not in (CURSOR_FIRST, CURSOR_MIDDLE):
            raise ValueError(f"unknown cursor policy {cursor_policy!r}")
        self.layout = layout
        self.keypad = keypad
        self.options = options
        self.cursor_policy = cursor_policy
        self.entries = [normalize_entry(t, layout, options) for t in entries]
        self._state = _State(mode=SELECTION, prefix=(), cursor=None)
        self._history: list[_State] = []

    @property
    def mode(self) -> str:
        return self._state.mode

    @property
    def prefix(self) -> Prefix:
        return self._state.prefix

    @property
    def cursor(self) -> int | None:
        return self._state.cursor

    def filtered(self) -> list[Entry]:
        return [
            e
            for e in self.entries
            if matches(e, self._state.prefix, self.layout, self.keypad, self.options)
        ]

    def _initial_cursor(self, length: int) -> int:
        if self.cursor_policy == CURSOR_MIDDLE:
            return (length - 1) // 2
        return 0

    def _commit(self, new_state: _State) -> None:
        self._history.append(self._state)
        self._state = new_state

    def _event_constraint(self, event: InputEvent) -> Constraint:
        if isinstance(event, DirectionalEvent):
            return DirectionGroup(event.direction)
        if isinstance(event, KeypadEvent):
            return KeypadGroup(event.key)
        assert isinstance(event, LiteralEvent)
        return Literal(event.letter)

    def apply(self, event: InputEvent) -> Outcome:
        if isinstance(event, BackspaceEvent):
            if self._history:
                self._state = self._history.pop()
            return Continue(self.view())

        if isinstance(event, ResetEvent):
            self._history.clear()
            self._state = _State(mode=SELECTION, prefix=(), cursor=None)
            return Continue(self.view())

        state = self._state
        if state.mode == SELECTION:
            if isinstance(event, SelectEvent):
                filtered = self.filtered()
                if len(filtered) == 1:
                    return Selected(filtered[0])
                self._commit(
                    replace(
                        state,
                        mode=SCROLLING,
                        cursor=self._initial_cursor(len(filtered)),
                    )
                )
                return Continue(self.view())
            constraint = self._event_constraint(event)
            candidate = state.prefix + (constraint,)
            alive = any(
                matches(e, candidate, self.layout, self.keypad, self.options)
                for e in self.entries
            )
            if not alive:
                return Rejected("dead end")
            self._commit(replace(state, prefix=candidate))
            return Continue(self.view())

        # scrolling mode
        if isinstance(event, SelectEvent):
            return Selected(self.filtered()[state.cursor])
        if isinstance(event, DirectionalEvent):
            if event.direction in (Direction.LEFT, Direction.RIGHT):
                self._commit(replace(state, mode=SELECTION, cursor=None))
                return Continue(self.view())
            length = len(self.filtered())
            delta = -1 if event.direction is Direction.UP else 1
            cursor = min(max(state.cursor + delta, 0), length - 1)
            self._commit(replace(state, cursor=cursor))
            return Continue(self.view())
        # keypad/literal while scrolling: return to selection and extend
        # the prefix in one committed transition, so backspace stays a
        # single-step inverse
        constraint = self._event_constraint(event)
        candidate = state.prefix + (constraint,)
        alive = any(
            matches(e, candidate, self.layout, self.keypad, self.options)
            for e in self.entries
        )
        if not alive:
            return Rejected("dead end")
        self._commit(_State(mode=SELECTION, prefix=candidate, cursor=None))
        return Continue(self.view())

    def view(self) -> View:
        state = self._state
        entry_views = []
        for e in self.filtered():
            offsets = match_positions(
                e, state.prefix, self.layout, self.keypad, self.options
            )
            entry_views.append(EntryView(text=e.display_text, highlights=offsets or ()))
        viable = next_letters(
            self.entries, state.prefix, self.layout, self.keypad, self.options
        )
        return View(
            mode=state.mode,
            prefix=state.prefix,
            entries=tuple(entry_views),
            cursor=state.cursor,
            viable=viable,
        )
