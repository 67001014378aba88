"""4-way list selection: engine, device adapters, evaluation harness."""

from .adapters import (
    JitterConfig,
    TrackballDelta,
    keyboard_to_event,
    keypad_to_event,
    trackball_to_event,
)
from .layouts import (
    Direction,
    KeypadLayout,
    Layout,
    LayoutError,
    builtin_layout,
    load_layout_file,
    standard_keypad,
)
from .matching import (
    Constraint,
    DirectionGroup,
    Entry,
    KeypadGroup,
    Literal,
    MatchOptions,
    Prefix,
    letter_set,
    match_positions,
    matches,
    next_letters,
    normalize_entry,
)
from .session import (
    BackspaceEvent,
    Continue,
    DirectionalEvent,
    InputEvent,
    KeypadEvent,
    LiteralEvent,
    Outcome,
    Rejected,
    ResetEvent,
    Selected,
    SelectEvent,
    Session,
    View,
)

__all__ = [
    "BackspaceEvent",
    "Constraint",
    "Continue",
    "Direction",
    "DirectionGroup",
    "DirectionalEvent",
    "Entry",
    "InputEvent",
    "JitterConfig",
    "KeypadEvent",
    "KeypadGroup",
    "KeypadLayout",
    "Layout",
    "LayoutError",
    "Literal",
    "LiteralEvent",
    "MatchOptions",
    "Outcome",
    "Prefix",
    "Rejected",
    "ResetEvent",
    "Selected",
    "SelectEvent",
    "Session",
    "TrackballDelta",
    "View",
    "builtin_layout",
    "keyboard_to_event",
    "keypad_to_event",
    "letter_set",
    "load_layout_file",
    "match_positions",
    "matches",
    "next_letters",
    "normalize_entry",
    "standard_keypad",
    "trackball_to_event",
]
