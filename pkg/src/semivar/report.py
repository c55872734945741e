"""Reports for check suites: JSON, delimited CSV, and rendered figures.

A report is a flat list of named checks with pass/fail/unknown status,
an optional witness string and a duration.  The JSON schema is stable:
{"suite": ..., "checks": [{"id", "status", "witness"?, "millis"}]}.
Figures are written to files with the Agg backend, so the suite runs
headless.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .lattices import FiniteLattice

STATUS_COLORS = {"pass": "#2a9d44", "fail": "#c0392b", "unknown": "#7f8c8d"}


@dataclass(frozen=True)
class CheckRecord:
    id: str
    status: str  # "pass" | "fail" | "unknown"
    witness: str | None
    millis: float


@dataclass
class Report:
    suite: str
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_dict(self) -> dict:
        out = {"suite": self.suite, "checks": []}
        for c in self.checks:
            entry: dict = {"id": c.id, "status": c.status, "millis": round(c.millis, 3)}
            if c.witness is not None:
                entry["witness"] = c.witness
            out["checks"].append(entry)
        return out

    def write_json(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n")

    def write_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["id", "status", "millis", "witness"])
            for c in self.checks:
                writer.writerow([c.id, c.status, f"{c.millis:.3f}", c.witness or ""])

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            mark = {"pass": "PASS", "fail": "FAIL", "unknown": "????"}[c.status]
            line = f"[{mark}] {c.id} ({c.millis:.0f} ms)"
            if c.witness and c.status != "pass":
                line += f"  witness: {c.witness}"
            lines.append(line)
        n_pass = sum(1 for c in self.checks if c.status == "pass")
        lines.append(f"{n_pass}/{len(self.checks)} checks passed")
        return lines


def render_report_figure(report: Report, path: str | Path) -> None:
    """Horizontal bar chart of check durations, colored by status."""
    ids = [c.id for c in report.checks]
    millis = [max(c.millis, 0.01) for c in report.checks]
    colors = [STATUS_COLORS.get(c.status, "#7f8c8d") for c in report.checks]
    height = max(2.0, 0.35 * len(ids) + 1.2)
    fig, ax = plt.subplots(figsize=(9, height))
    ypos = range(len(ids))
    ax.barh(list(ypos), millis, color=colors)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(ids, fontsize=8)
    ax.invert_yaxis()
    ax.set_xscale("log")
    ax.set_xlabel("milliseconds (log scale)")
    ax.set_title(f"{report.suite}: {'all green' if report.ok else 'FAILURES PRESENT'}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def _rank_layout(lat: FiniteLattice) -> tuple[list[int], list[float]]:
    # longest-path rank from the bottom, elements spread evenly per rank
    n = lat.size
    covers = lat.covers()
    rank = [0] * n
    changed = True
    while changed:
        changed = False
        for i, j in covers:
            if rank[j] < rank[i] + 1:
                rank[j] = rank[i] + 1
                changed = True
    xs = [0.0] * n
    by_rank: dict[int, list[int]] = {}
    for e in range(n):
        by_rank.setdefault(rank[e], []).append(e)
    for members in by_rank.values():
        k = len(members)
        for pos, e in enumerate(sorted(members)):
            xs[e] = (pos - (k - 1) / 2.0)
    return rank, xs


def render_hasse_figure(
    lat: FiniteLattice,
    path: str | Path,
    highlight: set[int] | None = None,
    caption: str = "",
) -> None:
    """Draw the cover diagram; highlighted elements are marked in red."""
    rank, xs = _rank_layout(lat)
    fig, ax = plt.subplots(figsize=(6, 5))
    for i, j in lat.covers():
        ax.plot([xs[i], xs[j]], [rank[i], rank[j]], color="#555555", lw=1, zorder=1)
    for e in range(lat.size):
        color = "#c0392b" if highlight and e in highlight else "#2c3e50"
        ax.scatter([xs[e]], [rank[e]], s=180, color=color, zorder=2)
        ax.annotate(
            lat.label(e),
            (xs[e], rank[e]),
            textcoords="offset points",
            xytext=(8, 6),
            fontsize=9,
        )
    ax.set_axis_off()
    title = caption or str(lat)
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
