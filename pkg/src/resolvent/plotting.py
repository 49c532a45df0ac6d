"""Figures for run reports; rendered off-screen to PNG files."""

from __future__ import annotations

from pathlib import Path
from typing import List

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .report import Report  # noqa: E402

plt.rcParams.update({
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "svg.hashsalt": "resolvent",
})


def _save(fig, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def _bars(values: List[int], title: str, xlabel: str, ylabel: str, path: Path) -> Path:
    fig, ax = plt.subplots(figsize=(4.5, 3.0))
    ax.bar(range(len(values)), values, color="#4c72b0", width=0.7)
    for n, v in enumerate(values):
        ax.annotate(str(v), (n, v), ha="center", va="bottom", fontsize=8)
    ax.set_xticks(range(len(values)))
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    return _save(fig, path)


def write_figures(report: Report, directory: str | Path) -> List[Path]:
    """Write the figures that apply to ``report`` into ``directory``; return their paths."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    if report.betti is not None:
        paths.append(_bars(report.betti, f"cohomology of {report.source}", "n",
                           "dim H^n", out / "betti.png"))
    if report.hilbert is not None:
        paths.append(_bars(report.hilbert, f"normal words of {report.source}", "degree",
                           "count", out / "hilbert.png"))
    if report.verdicts:
        groups: dict = {}
        for v in report.verdicts:
            g = groups.setdefault(v.group or "checks", [0, 0, 0])
            g[("pass", "fail", "skipped").index(v.status)] += 1
        names = list(groups)
        fig, ax = plt.subplots(figsize=(5.0, 0.4 * len(names) + 1.2))
        left = [0] * len(names)
        for idx, (label, color) in enumerate((("pass", "#55a868"), ("fail", "#c44e52"), ("skipped", "#999999"))):
            vals = [groups[n][idx] for n in names]
            ax.barh(names, vals, left=left, color=color, label=label)
            left = [a + b for a, b in zip(left, vals)]
        ax.set_xlabel("checks")
        ax.invert_yaxis()
        ax.legend(loc="lower right", fontsize=7, frameon=False)
        paths.append(_save(fig, out / "verdicts.png"))
    return paths
