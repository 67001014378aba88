"""Dataset loading: plain line files, CSV columns, and bundled lists."""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path


@dataclass(frozen=True)
class DatasetSpec:
    path: str
    format: str = "lines"  # lines | csv
    csv_column: str | None = None
    name: str | None = None

    def __post_init__(self) -> None:
        if self.format not in ("lines", "csv"):
            raise ValueError(f"unknown dataset format {self.format!r}")
        if (self.format == "csv") != (self.csv_column is not None):
            raise ValueError("csv_column is required iff format is csv")

    @property
    def label(self) -> str:
        return self.name or Path(self.path).stem


def load_dataset(spec: DatasetSpec) -> list[str]:
    """Read entries from a file; duplicates preserved, order kept.

    Lines format skips blank lines and '#' comments. CSV format takes
    the named column's cells in row order.
    """
    path = Path(spec.path)
    if not path.exists():
        raise FileNotFoundError(f"dataset file not found: {path}")
    text = path.read_text(encoding="utf-8")
    if spec.format == "lines":
        entries = [
            line.strip()
            for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        ]
    else:
        reader = csv.DictReader(text.splitlines())
        if reader.fieldnames is None or spec.csv_column not in reader.fieldnames:
            raise ValueError(
                f"csv column {spec.csv_column!r} not found in {path}"
            )
        entries = [row[spec.csv_column] for row in reader]
    if not entries:
        raise ValueError(f"dataset {path} produced no entries")
    return entries


BUNDLED = ("writers", "representatives", "graduates")


def bundled_dataset(name: str) -> list[str]:
    """One of the packaged surname lists (~96, ~400, ~1400 entries)."""
    if name not in BUNDLED:
        raise ValueError(f"unknown bundled dataset {name!r}; valid: {', '.join(BUNDLED)}")
    text = resources.files("fourway.data").joinpath(f"{name}.txt").read_text("utf-8")
    return [line for line in text.splitlines() if line and not line.startswith("#")]


def bundled_datasets() -> dict[str, list[str]]:
    return {name: bundled_dataset(name) for name in BUNDLED}
