"""Rendering of evaluation reports: text table, CSV, JSON, figures."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

from .evaluate import EvalReport, ReportRow

CSV_HEADER = ["dataset", "method", "layout", "average", "count"]


def render_table(report: EvalReport) -> str:
    """Aligned text table, one row per (dataset, method, layout)."""
    header = ["Dataset", "Method", "Layout", "Average", "Count"]
    rows = [
        [r.dataset, r.method, r.layout, f"{r.average:.2f}", str(r.count)]
        for r in report.rows
    ]
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h)
              for i, h in enumerate(header)]
    lines = []
    lines.append("  ".join(h.ljust(widths[i]) for i, h in enumerate(header)))
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(row[i].ljust(widths[i]) for i in range(len(row))))
    return "\n".join(lines) + "\n"


def render_csv(report: EvalReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in report.rows:
        writer.writerow([r.dataset, r.method, r.layout, repr(r.average), r.count])
    return buf.getvalue()


def parse_csv(text: str) -> EvalReport:
    """Inverse of render_csv, minus the per-entry cost vectors."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != CSV_HEADER:
        raise ValueError(f"unexpected CSV header: {header!r}")
    report = EvalReport()
    for row in reader:
        dataset, method, layout, average, count = row
        report.rows.append(
            ReportRow(
                dataset=dataset,
                method=method,
                layout=layout,
                average=float(average),
                count=int(count),
                costs=(),
            )
        )
    return report


def render_json(report: EvalReport) -> str:
    """Machine-readable report including per-entry cost vectors."""
    payload = [
        {
            "dataset": r.dataset,
            "method": r.method,
            "layout": r.layout,
            "average": r.average,
            "count": r.count,
            "costs": list(r.costs),
        }
        for r in report.rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def save_figures(report: EvalReport, outdir: str | Path) -> list[Path]:
    """One bar chart per dataset: average events by method and layout.

    Written as PNG files next to the delimited output; returns the paths.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []
    datasets = sorted({r.dataset for r in report.rows})
    for dataset in datasets:
        rows = [r for r in report.rows if r.dataset == dataset]
        labels = [f"{r.method}\n({r.layout})" for r in rows]
        values = [r.average for r in rows]
        fig, ax = plt.subplots(figsize=(1.6 + 1.2 * len(rows), 4.0))
        ax.bar(range(len(rows)), values, color="#4878a8")
        ax.set_xticks(range(len(rows)))
        ax.set_xticklabels(labels, fontsize=8)
        ax.set_ylabel("average events per entry")
        ax.set_title(dataset)
        if values and max(values) / max(min(values), 0.1) > 50:
            ax.set_yscale("log")
        for x, v in enumerate(values):
            ax.annotate(f"{v:.2f}", (x, v), ha="center", va="bottom", fontsize=8)
        fig.tight_layout()
        path = outdir / f"{dataset}.png"
        fig.savefig(path, dpi=120)
        plt.close(fig)
        written.append(path)
    return written
