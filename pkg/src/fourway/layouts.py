"""Letter-to-direction layouts and phone keypad groups.

A layout assigns each letter of an alphabet to one of the four
directional events. Letters absent from the layout are "insignificant"
and invisible to matching. Keypad groups model the standard ITU
phone keys 2-9 for mixed directional/keypad input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path


class Direction(Enum):
    UP = "up"
    DOWN = "down"
    LEFT = "left"
    RIGHT = "right"


class LayoutError(ValueError):
    """Raised for malformed or unknown layouts."""


@dataclass(frozen=True)
class Layout:
    """Disjoint assignment of letters to the four directions."""

    name: str
    groups: dict[Direction, tuple[str, ...]]

    alphabet: frozenset[str] = field(init=False)

    def __post_init__(self) -> None:
        seen: dict[str, Direction] = {}
        for direction, letters in self.groups.items():
            for c in letters:
                if c in seen:
                    raise LayoutError(
                        f"letter {c!r} assigned to both {seen[c].value} and {direction.value}"
                    )
                seen[c] = direction
        if not seen:
            raise LayoutError("layout has an empty alphabet")
        object.__setattr__(self, "alphabet", frozenset(seen))
        object.__setattr__(self, "_letter_to_direction", seen)

    def direction_of(self, letter: str) -> Direction | None:
        return self._letter_to_direction.get(letter)  # type: ignore[attr-defined]

    def group(self, direction: Direction) -> tuple[str, ...]:
        return self.groups.get(direction, ())


_ABC = Layout(
    name="abc",
    groups={
        Direction.UP: tuple("ABCDEFG"),
        Direction.LEFT: tuple("HIJKLMN"),
        Direction.RIGHT: tuple("OPQRSTU"),
        Direction.DOWN: tuple("VWXYZ"),
    },
)

_QWERTY = Layout(
    name="qwerty",
    groups={
        Direction.UP: tuple("QWERTYUIOP"),
        Direction.LEFT: tuple("ASDFG"),
        Direction.RIGHT: tuple("HJKL"),
        Direction.DOWN: tuple("ZXCVBNM"),
    },
)

BUILTIN_LAYOUTS = {"abc": _ABC, "qwerty": _QWERTY}


def builtin_layout(name: str) -> Layout:
    """Return a built-in layout by name ('abc' or 'qwerty')."""
    try:
        return BUILTIN_LAYOUTS[name]
    except KeyError:
        raise LayoutError(
            f"unknown layout {name!r}; valid choices: {', '.join(sorted(BUILTIN_LAYOUTS))}"
        ) from None


# Standard ITU key groups. Key 4 is [G,H,I]: G/H/I in spelling order,
# with J on key 5 only, keeping the groups disjoint.
STANDARD_KEYPAD: dict[str, tuple[str, ...]] = {
    "2": tuple("ABC"),
    "3": tuple("DEF"),
    "4": tuple("GHI"),
    "5": tuple("JKL"),
    "6": tuple("MNO"),
    "7": tuple("PQRS"),
    "8": tuple("TUV"),
    "9": tuple("WXYZ"),
}


@dataclass(frozen=True)
class KeypadLayout:
    """Phone keys '2'-'9' mapped to ordered, disjoint letter groups.

    Letter order within a group is the multi-tap press order.
    """

    keys: dict[str, tuple[str, ...]]

    def __post_init__(self) -> None:
        seen: dict[str, str] = {}
        for key, letters in self.keys.items():
            if not letters:
                raise LayoutError(f"keypad key {key!r} has an empty group")
            for c in letters:
                if c in seen:
                    raise LayoutError(
                        f"letter {c!r} on both key {seen[c]!r} and key {key!r}"
                    )
                seen[c] = key
        object.__setattr__(self, "_letter_to_key", seen)

    def group(self, key: str) -> tuple[str, ...]:
        try:
            return self.keys[key]
        except KeyError:
            raise LayoutError(f"unmapped key {key!r}") from None

    def key_of(self, letter: str) -> str:
        key = self._letter_to_key.get(letter)  # type: ignore[attr-defined]
        if key is None:
            raise LayoutError(f"letter {letter!r} not on any key")
        return key

    def tap_count(self, letter: str) -> int:
        """1-based position of the letter on its key (multi-tap press count)."""
        return self.keys[self.key_of(letter)].index(letter) + 1


def standard_keypad() -> KeypadLayout:
    return KeypadLayout(keys=dict(STANDARD_KEYPAD))


_DIRECTION_BY_LABEL = {d.value: d for d in Direction}


def load_layout_file(path: str | Path) -> Layout:
    """Load a custom layout from a UTF-8 text file.

    Format: four lines `up:`, `left:`, `right:`, `down:`, each followed
    on the same line by a run of letters. Disjointness is enforced.
    """
    path = Path(path)
    groups: dict[Direction, tuple[str, ...]] = {}
    for lineno, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        label, sep, letters = line.partition(":")
        if not sep or label.strip().lower() not in _DIRECTION_BY_LABEL:
            raise LayoutError(f"{path}:{lineno}: expected 'up|down|left|right: LETTERS'")
        direction = _DIRECTION_BY_LABEL[label.strip().lower()]
        if direction in groups:
            raise LayoutError(f"{path}:{lineno}: duplicate {direction.value} line")
        groups[direction] = tuple(letters.strip())
    missing = [d.value for d in Direction if d not in groups]
    if missing:
        raise LayoutError(f"{path}: missing direction lines: {', '.join(missing)}")
    return Layout(name=path.stem, groups=groups)
