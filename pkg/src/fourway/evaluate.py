"""Keystroke-cost models and the method/layout comparison harness.

Each cost model returns the optimal number of counted events (select
presses excluded) needed to land on a given entry of a sorted list:

- scroll: down-presses from the top of the list.
- multitap_first: multi-tap at least the first letter, then finish
  with the cheapest mix of further taps and scrolling.
- multitap_match: multi-tap any prefix, cursor jumps to the first
  matching entry, then scroll; the best switch point is taken.
- fourway: type direction-group constraints for a prefix of the
  entry's letter stream, then scroll inside the filtered list.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from statistics import mean

from .layouts import KeypadLayout, Layout
from .matching import Entry, MatchOptions, normalize_entry
from .session import CURSOR_FIRST, CURSOR_MIDDLE

METHOD_FOURWAY = "fourway"
METHOD_SCROLL = "scroll"
METHOD_MULTITAP_FIRST = "multitap_first"
METHOD_MULTITAP_MATCH = "multitap_match"

ALL_METHODS = (
    METHOD_FOURWAY,
    METHOD_SCROLL,
    METHOD_MULTITAP_FIRST,
    METHOD_MULTITAP_MATCH,
)

EVAL_OPTIONS = MatchOptions(word_mode=False, span_words=True, wrap=False)


def prepare_dataset(raw: list[str], layout: Layout) -> list[Entry]:
    """Normalize and sort entries case-insensitively, ties by input order."""
    entries = [normalize_entry(t, layout, EVAL_OPTIONS) for t in raw]
    return sorted(entries, key=lambda e: e.display_text.upper())


def _stream_letters(entry: Entry) -> str:
    return "".join(c for c, _ in entry.whole_stream)


def _lcp(a: str, b: str) -> int:
    n = min(len(a), len(b))
    for i in range(n):
        if a[i] != b[i]:
            return i
    return n


def cost_scroll(dataset: list[Entry], target_index: int) -> int:
    """Down-presses from the first element to the target."""
    if not 0 <= target_index < len(dataset):
        raise IndexError(f"target index {target_index} out of range")
    return target_index


def multitap_letter_cost(letter: str, keypad: KeypadLayout) -> int:
    """Presses needed to reach a letter on its phone key (1-based position)."""
    return keypad.tap_count(letter)


def cost_multitap_first(
    dataset: list[Entry], target_index: int, keypad: KeypadLayout
) -> int:
    """Tap at least the first letter, then finish optimally.

    Same strategy space as multitap_match except the pure-scroll play
    (typing nothing) is not available: the first letter is always typed.
    """
    if not 0 <= target_index < len(dataset):
        raise IndexError(f"target index {target_index} out of range")
    streams = [_stream_letters(e) for e in dataset]
    if not streams[target_index]:
        raise ValueError("target entry has no significant letters")
    return _multitap_cost(streams, target_index, keypad, min_typed=1)


def cost_multitap_match(
    dataset: list[Entry], target_index: int, keypad: KeypadLayout
) -> int:
    """Best mix of multi-tap typing and scrolling from the first match."""
    if not 0 <= target_index < len(dataset):
        raise IndexError(f"target index {target_index} out of range")
    streams = [_stream_letters(e) for e in dataset]
    return _multitap_cost(streams, target_index, keypad, min_typed=0)


def _multitap_cost(
    streams: list[str], target_index: int, keypad: KeypadLayout, min_typed: int
) -> int:
    letters = streams[target_index]
    best: int | None = target_index if min_typed == 0 else None
    taps = 0
    jump = 0
    for k in range(1, len(letters) + 1):
        taps += multitap_letter_cost(letters[k - 1], keypad)
        if best is not None and taps >= best:
            break
        # the first entry matching a longer prefix can only move down
        prefix = letters[:k]
        while streams[jump][:k] != prefix:
            jump += 1
        cost = taps + abs(target_index - jump)
        if best is None or cost < best:
            best = cost
    assert best is not None
    return best


def _initial_cursor(length: int, cursor_policy: str) -> int:
    return (length - 1) // 2 if cursor_policy == CURSOR_MIDDLE else 0


def cost_fourway(
    dataset: list[Entry],
    target_index: int,
    layout: Layout,
    cursor_policy: str = CURSOR_FIRST,
) -> int:
    """Optimal direction-group typing plus scrolling in the filtered list.

    For each prefix length k of the target's letter stream, the list is
    filtered by the first k direction groups; the cost is k plus the
    scroll distance from the initial cursor to the target.
    """
    if not 0 <= target_index < len(dataset):
        raise IndexError(f"target index {target_index} out of range")
    dirs = [_direction_string(e, layout) for e in dataset]
    return _fourway_cost(dirs, target_index, cursor_policy)


def _fourway_cost(dirs: list[str], target_index: int, cursor_policy: str) -> int:
    target_dirs = dirs[target_index]
    if not target_dirs:
        raise ValueError("target entry has no significant letters")
    depth = len(target_dirs)
    # an entry survives filtering at prefix length k iff its direction
    # string shares at least k leading symbols with the target's
    length_at = [0] * (depth + 2)
    position_at = [0] * (depth + 2)
    for i, s in enumerate(dirs):
        v = min(_lcp(target_dirs, s), depth)
        length_at[0] += 1
        length_at[v + 1] -= 1
        if i < target_index:
            position_at[0] += 1
            position_at[v + 1] -= 1
    for k in range(1, depth + 1):
        length_at[k] += length_at[k - 1]
        position_at[k] += position_at[k - 1]
    best: int | None = None
    for k in range(depth + 1):
        cost = k + abs(position_at[k] - _initial_cursor(length_at[k], cursor_policy))
        if best is None or cost < best:
            best = cost
        if k >= best:
            break
    return best


def _direction_string(entry: Entry, layout: Layout) -> str:
    parts = []
    for c, _ in entry.whole_stream:
        d = layout.direction_of(c)
        if d is None:
            continue
        parts.append(d.value[0])
    return "".join(parts)


_COST_NEEDS = {
    METHOD_SCROLL: "none",
    METHOD_MULTITAP_FIRST: "keypad",
    METHOD_MULTITAP_MATCH: "keypad",
    METHOD_FOURWAY: "layout",
}


def entry_costs(
    dataset: list[Entry],
    method: str,
    layout: Layout,
    keypad: KeypadLayout,
    cursor_policy: str = CURSOR_FIRST,
) -> list[int]:
    """Per-entry optimal event counts for one method over a sorted dataset."""
    if method == METHOD_SCROLL:
        return [cost_scroll(dataset, i) for i in range(len(dataset))]
    if method == METHOD_MULTITAP_FIRST:
        streams = [_stream_letters(e) for e in dataset]
        return [
            _multitap_cost(streams, i, keypad, min_typed=1)
            for i in range(len(dataset))
        ]
    if method == METHOD_MULTITAP_MATCH:
        streams = [_stream_letters(e) for e in dataset]
        return [
            _multitap_cost(streams, i, keypad, min_typed=0)
            for i in range(len(dataset))
        ]
    if method == METHOD_FOURWAY:
        dirs = [_direction_string(e, layout) for e in dataset]
        return [_fourway_cost(dirs, i, cursor_policy) for i in range(len(dataset))]
    raise ValueError(f"unknown method {method!r}; valid: {', '.join(ALL_METHODS)}")


def average_events(
    dataset: list[Entry],
    method: str,
    layout: Layout,
    keypad: KeypadLayout,
    cursor_policy: str = CURSOR_FIRST,
) -> float:
    """Arithmetic mean of per-entry costs."""
    if not dataset:
        raise ValueError("dataset is empty")
    return mean(entry_costs(dataset, method, layout, keypad, cursor_policy))


@dataclass(frozen=True)
class ReportRow:
    dataset: str
    method: str
    layout: str
    average: float
    count: int
    costs: tuple[int, ...]


@dataclass
class EvalReport:
    rows: list[ReportRow] = field(default_factory=list)

    def row(self, dataset: str, method: str, layout: str) -> ReportRow:
        for r in self.rows:
            if (r.dataset, r.method, r.layout) == (dataset, method, layout):
                return r
        raise KeyError((dataset, method, layout))


def compare(
    datasets: dict[str, list[str]],
    methods: list[str],
    layouts: list[Layout],
    keypad: KeypadLayout,
    cursor_policy: str = CURSOR_FIRST,
) -> EvalReport:
    """Full cross-product of datasets x methods x layouts."""
    report = EvalReport()
    for name, raw in datasets.items():
        for layout in layouts:
            prepared = prepare_dataset(raw, layout)
            for method in methods:
                costs = entry_costs(prepared, method, layout, keypad, cursor_policy)
                report.rows.append(
                    ReportRow(
                        dataset=name,
                        method=method,
                        layout=layout.name,
                        average=mean(costs),
                        count=len(costs),
                        costs=tuple(costs),
                    )
                )
    return report
