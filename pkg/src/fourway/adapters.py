"""Device signal adapters: trackball deltas, keypad keys, keyboard letters."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .layouts import Direction, Layout, LayoutError
from .session import KeypadEvent, LiteralEvent

DEFAULT_JITTER_THRESHOLD = 2.0


@dataclass(frozen=True)
class TrackballDelta:
    """Signed motion: dx negative=left/positive=right, dy negative=down/positive=up."""

    dx: float
    dy: float


@dataclass(frozen=True)
class JitterConfig:
    threshold: float = DEFAULT_JITTER_THRESHOLD

    def __post_init__(self) -> None:
        if self.threshold < 0:
            raise ValueError("jitter threshold must be non-negative")


def trackball_to_event(
    delta: TrackballDelta, jitter: JitterConfig = JitterConfig()
) -> Direction | None:
    """Quantize a trackball delta to a direction, or None when suppressed.

    Horizontal wins strictly (|dx| > |dy|); ties go to the vertical
    branch. Deltas below the jitter threshold are dropped.
    """
    if math.hypot(delta.dx, delta.dy) < jitter.threshold:
        return None
    if abs(delta.dx) > abs(delta.dy):
        return Direction.RIGHT if delta.dx > 0 else Direction.LEFT
    return Direction.UP if delta.dy > 0 else Direction.DOWN


def keypad_to_event(key: str) -> KeypadEvent:
    """Map a phone key press ('2'-'9') to a keypad group event."""
    if key not in "23456789" or len(key) != 1:
        raise LayoutError(f"unmapped key {key!r}")
    return KeypadEvent(key=key)


def keyboard_to_event(letter: str, layout: Layout) -> LiteralEvent:
    """Map a keyboard letter press to a literal event, folding case."""
    folded = letter.upper() if letter.upper() in layout.alphabet else letter
    if folded not in layout.alphabet:
        raise LayoutError(f"insignificant literal {letter!r}")
    return LiteralEvent(letter=folded)
