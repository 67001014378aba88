from __future__ import annotations

import random

import pytest

from fourway.layouts import Direction, builtin_layout, standard_keypad
from fourway.matching import Literal, MatchOptions
from fourway.session import (
    BackspaceEvent,
    Continue,
    DirectionalEvent,
    KeypadEvent,
    LiteralEvent,
    Rejected,
    ResetEvent,
    Selected,
    SelectEvent,
    Session,
)

QWERTY = builtin_layout("qwerty")

UP = DirectionalEvent(Direction.UP)
DOWN = DirectionalEvent(Direction.DOWN)
LEFT = DirectionalEvent(Direction.LEFT)
RIGHT = DirectionalEvent(Direction.RIGHT)
SELECT = SelectEvent()
BACK = BackspaceEvent()
RESET = ResetEvent()

WRITERS3 = ["ELIOT", "JOYCE", "ORWELL"]


def make(entries=None, **kwargs):
    return Session(entries or WRITERS3, QWERTY, keypad=standard_keypad(), **kwargs)


def texts(view):
    return [e.text for e in view.entries]


class TestBasics:
    def test_initial_view(self):
        session = make()
        view = session.view()
        assert view.mode == "selection"
        assert texts(view) == WRITERS3
        assert view.cursor is None
        assert all(e.highlights == () for e in view.entries)
        assert view.viable[Direction.UP] == frozenset("EO")
        assert view.viable[Direction.RIGHT] == frozenset("J")

    def test_empty_entry_list_rejected(self):
        with pytest.raises(ValueError):
            Session([], QWERTY)

    def test_directional_filters(self):
        session = make()
        outcome = session.apply(UP)
        assert isinstance(outcome, Continue)
        assert texts(outcome.view) == ["ELIOT", "ORWELL"]

    def test_select_on_unique_completes(self):
        session = make(["Eliot"])
        outcome = session.apply(SELECT)
        assert isinstance(outcome, Selected)
        assert outcome.entry.display_text == "Eliot"

    def test_select_enters_scrolling_first_policy(self):
        session = make()
        session.apply(UP)
        outcome = session.apply(SELECT)
        assert session.mode == "scrolling"
        assert outcome.view.cursor == 0
        assert texts(outcome.view)[0] == "ELIOT"

    def test_middle_cursor_policy(self):
        session = make(cursor_policy="middle")
        session.apply(SELECT)
        assert session.cursor == (3 - 1) // 2

    def test_scroll_clamps_at_top(self):
        session = make()
        session.apply(SELECT)
        outcome = session.apply(UP)
        assert outcome.view.cursor == 0

    def test_scroll_clamps_at_bottom(self):
        session = make()
        session.apply(SELECT)
        for _ in range(5):
            outcome = session.apply(DOWN)
        assert outcome.view.cursor == 2

    def test_left_returns_to_selection_keeping_prefix(self):
        session = make()
        session.apply(UP)
        session.apply(SELECT)
        outcome = session.apply(LEFT)
        assert outcome.view.mode == "selection"
        assert len(outcome.view.prefix) == 1

    def test_scroll_then_select(self):
        session = make()
        session.apply(SELECT)
        session.apply(DOWN)
        outcome = session.apply(SELECT)
        assert isinstance(outcome, Selected)
        assert outcome.entry.display_text == "JOYCE"

    def test_dead_end_rejected_and_state_unchanged(self):
        session = make(["ELIOT"])
        before = session.view()
        outcome = session.apply(DOWN)  # no entry starts with Z,X,C,V,B,N,M
        assert isinstance(outcome, Rejected)
        assert outcome.reason == "dead end"
        assert session.view() == before

    def test_literal_and_keypad_events(self):
        session = make()
        outcome = session.apply(LiteralEvent("J"))
        assert texts(outcome.view) == ["JOYCE"]
        session2 = make()
        outcome2 = session2.apply(KeypadEvent("5"))  # JKL
        assert texts(outcome2.view) == ["JOYCE"]

    def test_backspace_restores_previous(self):
        session = make()
        session.apply(UP)
        session.apply(BACK)
        assert session.prefix == ()
        assert texts(session.view()) == WRITERS3

    def test_backspace_at_initial_state_is_noop(self):
        session = make()
        outcome = session.apply(BACK)
        assert isinstance(outcome, Continue)
        assert texts(outcome.view) == WRITERS3

    def test_reset_restores_initial(self):
        session = make()
        session.apply(UP)
        session.apply(SELECT)
        session.apply(DOWN)
        outcome = session.apply(RESET)
        assert outcome.view == make().view()

    def test_highlights_after_prefix(self):
        session = make(["T.S., Eliot", "Joyce"])
        session.apply(UP)
        session.apply(LEFT)
        view = session.view()
        assert texts(view) == ["T.S., Eliot"]
        assert view.entries[0].highlights == (0, 2)

    def test_viable_letters_in_scrolling_mode(self):
        session = make()
        session.apply(UP)
        session.apply(SELECT)
        view = session.view()
        assert view.cursor is not None
        # viable map still reflects the committed prefix
        assert view.viable[Direction.RIGHT] <= frozenset("HJKL")


# --- randomized state-machine properties ---

EVENT_POOL = [UP, DOWN, LEFT, RIGHT, SELECT, BACK, RESET] + [
    LiteralEvent(c) for c in "EJOW"
]

ENTRY_POOLS = [
    WRITERS3,
    ["T.S., Eliot", "John Updike", "Smith, John", "Jorge Luis Borges"],
    ["A", "AB", "ABC", "B", "BC"],
]


def random_walk(rng, session, steps):
    outcomes = []
    for _ in range(steps):
        event = rng.choice(EVENT_POOL)
        outcome = session.apply(event)
        outcomes.append((event, outcome))
        if isinstance(outcome, Selected):
            break
    return outcomes


@pytest.mark.parametrize("seed", range(30))
def test_backspace_inverts_every_committed_event(seed):
    rng = random.Random(seed)
    entries = rng.choice(ENTRY_POOLS)
    session = make(entries)
    for _ in range(40):
        event = rng.choice(EVENT_POOL[:7])
        if isinstance(event, (BackspaceEvent, ResetEvent)):
            session.apply(event)
            continue
        before = session.view()
        outcome = session.apply(event)
        if isinstance(outcome, Selected):
            break
        if isinstance(outcome, Continue) and outcome.view != before:
            session.apply(BACK)
            assert session.view() == before

def test_filtered_never_empty_over_random_walks():
    rng = random.Random(1234)
    for _ in range(50):
        session = make(rng.choice(ENTRY_POOLS))
        for event, outcome in random_walk(rng, session, 30):
            if isinstance(outcome, Continue):
                assert len(outcome.view.entries) >= 1


def test_monotone_filtering():
    rng = random.Random(99)
    for _ in range(40):
        session = make(rng.choice(ENTRY_POOLS))
        previous = set(texts(session.view()))
        for _ in range(20):
            event = rng.choice([UP, DOWN, LEFT, RIGHT] + [LiteralEvent(c) for c in "EJO"])
            outcome = session.apply(event)
            if isinstance(outcome, Selected):
                break
            if session.mode == "selection" and isinstance(outcome, Continue):
                current = set(texts(outcome.view))
                assert current <= previous or previous == set()
                previous = current


def test_reset_after_any_walk_reproduces_initial_view():
    rng = random.Random(7)
    for _ in range(30):
        entries = rng.choice(ENTRY_POOLS)
        session = make(entries)
        initial = session.view()
        random_walk(rng, session, 25)
        session.apply(RESET)
        assert session.view() == initial


def test_determinism():
    rng = random.Random(5)
    for _ in range(20):
        entries = rng.choice(ENTRY_POOLS)
        script = [rng.choice(EVENT_POOL) for _ in range(25)]
        runs = []
        for _ in range(2):
            session = make(entries)
            runs.append([repr(session.apply(e)) for e in script])
        assert runs[0] == runs[1]


def test_selection_reachability():
    for entries in ENTRY_POOLS:
        for target in entries:
            session = make(entries)
            stream = [
                c for c in target.upper() if c in QWERTY.alphabet
            ]
            for c in stream:
                outcome = session.apply(LiteralEvent(c))
                assert not isinstance(outcome, Rejected)
            outcome = session.apply(SELECT)
            if isinstance(outcome, Selected):
                assert outcome.entry.display_text == target
                continue
            # several entries share the stream: scroll to the target
            view = session.view()
            names = texts(view)
            assert target in names
            steps = names.index(target) - view.cursor
            step_event = DOWN if steps > 0 else UP
            for _ in range(abs(steps)):
                session.apply(step_event)
            outcome = session.apply(SELECT)
            assert isinstance(outcome, Selected)
            assert outcome.entry.display_text == target
