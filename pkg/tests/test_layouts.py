from __future__ import annotations

import string

import pytest

from fourway.layouts import (
    Direction,
    KeypadLayout,
    Layout,
    LayoutError,
    builtin_layout,
    load_layout_file,
    standard_keypad,
)


def test_abc_groups():
    abc = builtin_layout("abc")
    assert abc.group(Direction.UP) == tuple("ABCDEFG")
    assert abc.group(Direction.LEFT) == tuple("HIJKLMN")
    assert abc.group(Direction.RIGHT) == tuple("OPQRSTU")
    assert abc.group(Direction.DOWN) == tuple("VWXYZ")
    assert abc.direction_of("G") is Direction.UP


def test_qwerty_groups():
    q = builtin_layout("qwerty")
    assert q.group(Direction.UP) == tuple("QWERTYUIOP")
    assert q.group(Direction.LEFT) == tuple("ASDFG")
    assert q.group(Direction.RIGHT) == tuple("HJKL")
    assert q.group(Direction.DOWN) == tuple("ZXCVBNM")
    assert q.direction_of("L") is Direction.RIGHT


@pytest.mark.parametrize("name", ["abc", "qwerty"])
def test_builtin_partition(name):
    layout = builtin_layout(name)
    assert layout.alphabet == frozenset(string.ascii_uppercase)
    # every letter in exactly one group
    for c in string.ascii_uppercase:
        homes = [d for d in Direction if c in layout.group(d)]
        assert len(homes) == 1


def test_unknown_layout_names_choices():
    with pytest.raises(LayoutError, match="abc.*qwerty|qwerty.*abc"):
        builtin_layout("dvorak")


def test_overlapping_groups_rejected():
    with pytest.raises(LayoutError, match="'A'"):
        Layout("bad", {Direction.UP: ("A", "B"), Direction.DOWN: ("A",)})


def test_empty_layout_rejected():
    with pytest.raises(LayoutError):
        Layout("empty", {})


def test_standard_keypad():
    kp = standard_keypad()
    assert kp.group("2") == tuple("ABC")
    assert kp.group("7") == tuple("PQRS")
    assert kp.group("4") == tuple("GHI")  # disjoint from key 5's JKL
    assert kp.group("5") == tuple("JKL")
    assert kp.tap_count("S") == 4
    assert kp.tap_count("A") == 1
    with pytest.raises(LayoutError):
        kp.group("1")


def test_keypad_overlap_rejected():
    with pytest.raises(LayoutError):
        KeypadLayout({"2": ("A", "B"), "3": ("B",)})


def test_layout_file_roundtrip(tmp_path):
    path = tmp_path / "cyr.layout"
    path.write_text(
        "up: АБВГДЕЖЗ\nleft: ИЙКЛМНОП\nright: РСТУФХЦЧ\ndown: ШЩЪЫЬЭЮЯ\n",
        encoding="utf-8",
    )
    layout = load_layout_file(path)
    assert layout.name == "cyr"
    assert layout.direction_of("Д") is Direction.UP
    assert layout.direction_of("Я") is Direction.DOWN
    assert len(layout.alphabet) == 32


def test_layout_file_overlap_rejected(tmp_path):
    path = tmp_path / "bad.layout"
    path.write_text("up: AB\nleft: BC\nright: D\ndown: E\n", encoding="utf-8")
    with pytest.raises(LayoutError):
        load_layout_file(path)


def test_layout_file_missing_line(tmp_path):
    path = tmp_path / "short.layout"
    path.write_text("up: AB\nleft: CD\n", encoding="utf-8")
    with pytest.raises(LayoutError, match="missing"):
        load_layout_file(path)
