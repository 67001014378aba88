"""Command-line surface: bench, simulate, layouts, serve."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .adapters import keyboard_to_event
from .datasets import BUNDLED, DatasetSpec, bundled_dataset, load_dataset
from .evaluate import ALL_METHODS, EvalReport, compare
from .layouts import (
    BUILTIN_LAYOUTS,
    Direction,
    Layout,
    LayoutError,
    builtin_layout,
    load_layout_file,
    standard_keypad,
)
from .matching import MatchOptions
from .report import render_csv, render_json, render_table, save_figures
from .session import (
    BackspaceEvent,
    Continue,
    DirectionalEvent,
    InputEvent,
    KeypadEvent,
    Rejected,
    ResetEvent,
    Selected,
    SelectEvent,
    Session,
)


class CliError(Exception):
    """Runtime failure reported on stderr with exit code 1."""


class UsageError(CliError):
    """Bad arguments; exit code 2, matching argparse's convention."""


def _resolve_layout(name: str) -> Layout:
    if name in BUILTIN_LAYOUTS:
        return builtin_layout(name)
    if Path(name).exists():
        return load_layout_file(name)
    raise UsageError(
        f"unknown layout {name!r}: not a builtin ({', '.join(sorted(BUILTIN_LAYOUTS))}) "
        "and no such file"
    )


def _load_one(name: str, fmt: str, csv_column: str | None) -> tuple[str, list[str]]:
    if name in BUNDLED:
        return name, bundled_dataset(name)
    spec = DatasetSpec(
        path=name,
        format=fmt,
        csv_column=csv_column if fmt == "csv" else None,
    )
    return spec.label, load_dataset(spec)


def _match_options(args: argparse.Namespace) -> MatchOptions:
    span = args.span_words or args.wrap
    return MatchOptions(span_words=span, wrap=args.wrap)


def cmd_bench(args: argparse.Namespace) -> int:
    names = args.dataset or list(BUNDLED)
    datasets = dict(
        _load_one(n, args.format, args.csv_column) for n in names
    )
    layouts = [_resolve_layout(n) for n in (args.layout or ["qwerty"])]
    methods = args.methods.split(",") if args.methods else list(ALL_METHODS)
    for m in methods:
        if m not in ALL_METHODS:
            raise CliError(f"unknown method {m!r}; valid: {', '.join(ALL_METHODS)}")
    report = compare(datasets, methods, layouts, standard_keypad(), args.cursor)
    _emit(report, args.output)
    if args.figures:
        for path in save_figures(report, args.figures):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def _emit(report: EvalReport, output: str) -> None:
    if output == "table":
        sys.stdout.write(render_table(report))
    elif output == "csv":
        sys.stdout.write(render_csv(report))
    else:
        sys.stdout.write(render_json(report))


_EVENT_TOKENS = {
    "U": DirectionalEvent(Direction.UP),
    "D": DirectionalEvent(Direction.DOWN),
    "L": DirectionalEvent(Direction.LEFT),
    "R": DirectionalEvent(Direction.RIGHT),
    "S": SelectEvent(),
    "B": BackspaceEvent(),
    "X": ResetEvent(),
}


def parse_event_script(script: str, layout: Layout) -> list[InputEvent]:
    """Parse a comma-separated event script: U,D,L,R,S,B,X, 2-9, a-z."""
    events: list[InputEvent] = []
    if not script.strip():
        return events
    for pos, token in enumerate(script.split(","), 1):
        token = token.strip()
        if token in _EVENT_TOKENS:
            events.append(_EVENT_TOKENS[token])
        elif token in "23456789" and len(token) == 1:
            events.append(KeypadEvent(token))
        elif len(token) == 1 and token.islower():
            try:
                events.append(keyboard_to_event(token, layout))
            except LayoutError as exc:
                raise CliError(f"bad event token at position {pos}: {exc}") from exc
        else:
            raise CliError(f"unparseable event token {token!r} at position {pos}")
    return events


def cmd_simulate(args: argparse.Namespace) -> int:
    name, entries = _load_one(args.dataset, args.format, args.csv_column)
    layout = _resolve_layout(args.layout)
    events = parse_event_script(args.events, layout)
    session = Session(
        entries,
        layout,
        keypad=standard_keypad(),
        options=_match_options(args),
        cursor_policy=args.cursor,
    )
    view = session.view()
    print(f"dataset {name}: {len(entries)} entries, mode {view.mode}")
    for event in events:
        outcome = session.apply(event)
        label = type(event).__name__.removesuffix("Event").lower()
        detail = getattr(event, "direction", None)
        if detail is not None:
            label = detail.value
        elif isinstance(event, KeypadEvent):
            label = f"key {event.key}"
        elif hasattr(event, "letter"):
            label = f"letter {event.letter}"
        if isinstance(outcome, Selected):
            print(f"{label:12s} -> selected {outcome.entry.display_text!r}")
            return 0
        if isinstance(outcome, Rejected):
            print(f"{label:12s} -> rejected ({outcome.reason})")
            continue
        assert isinstance(outcome, Continue)
        v = outcome.view
        print(f"{label:12s} -> mode {v.mode}, {len(v.entries)} entries"
              + (f", cursor {v.cursor}" if v.cursor is not None else ""))
    return 0


def cmd_layouts(args: argparse.Namespace) -> int:
    for name in sorted(BUILTIN_LAYOUTS):
        layout = BUILTIN_LAYOUTS[name]
        print(name)
        for direction in (Direction.UP, Direction.LEFT, Direction.RIGHT, Direction.DOWN):
            print(f"  {direction.value:5s} {''.join(layout.group(direction))}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import build_app

    names = args.dataset or list(BUNDLED)
    datasets = dict(_load_one(n, args.format, args.csv_column) for n in names)
    app = build_app(datasets)
    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourway",
        description="4-way list selection: engine, benchmark, demo server",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_dataset_flags(p: argparse.ArgumentParser, multi: bool) -> None:
        if multi:
            p.add_argument(
                "--dataset",
                action="append",
                help="bundled name (writers/representatives/graduates) or file path; repeatable",
            )
        else:
            p.add_argument("--dataset", required=True, help="bundled name or file path")
        p.add_argument("--format", choices=("lines", "csv"), default="lines")
        p.add_argument("--csv-column", default=None)

    bench = sub.add_parser("bench", help="run the method/layout comparison")
    add_dataset_flags(bench, multi=True)
    bench.add_argument("--layout", action="append", default=None,
                       help="abc, qwerty, or a layout file; repeatable")
    bench.add_argument("--methods", default=None,
                       help=f"comma-separated subset of: {', '.join(ALL_METHODS)}")
    bench.add_argument("--cursor", choices=("first", "middle"), default="first")
    bench.add_argument("--output", choices=("table", "csv", "json"), default="table")
    bench.add_argument("--figures", default=None, metavar="DIR",
                       help="also write one bar-chart PNG per dataset")
    bench.set_defaults(func=cmd_bench)

    sim = sub.add_parser("simulate", help="replay a scripted event sequence")
    add_dataset_flags(sim, multi=False)
    sim.add_argument("--layout", default="qwerty")
    sim.add_argument("--cursor", choices=("first", "middle"), default="first")
    sim.add_argument("--span-words", action="store_true", default=True)
    sim.add_argument("--no-span-words", dest="span_words", action="store_false")
    sim.add_argument("--wrap", action="store_true")
    sim.add_argument("--events", default="", help="comma-separated: U,D,L,R,S,B,X,2-9,a-z")
    sim.set_defaults(func=cmd_simulate)

    layouts = sub.add_parser("layouts", help="list builtin layouts")
    layouts.set_defaults(func=cmd_layouts)

    serve = sub.add_parser("serve", help="run the interactive demo server")
    add_dataset_flags(serve, multi=True)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (CliError, LayoutError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
