"""Matplotlib renderings of rank tables and scan summaries.

Everything draws to files through the Agg backend so the CLI can emit
figures next to its delimited output without a display.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .khovanov import BigradedRanks
from .pipeline import ScanResult


def rank_grid(ranks: BigradedRanks, title: str, path: str) -> str:
    """Draw the (i, j) rank table as an annotated grid and save it."""
    support = sorted(ranks.support())
    i_vals = sorted({i for i, _ in support})
    j_vals = sorted({j for _, j in support})
    fig, ax = plt.subplots(figsize=(1.0 + 0.6 * len(i_vals), 1.0 + 0.4 * len(j_vals)))
    for (i, j) in support:
        ax.add_patch(plt.Rectangle((i - 0.5, j - 1), 1, 2, color="#cfe3f5"))
        ax.text(i, j, str(ranks.rank(i, j)), ha="center", va="center", fontsize=9)
    ax.set_xlim(min(i_vals) - 1, max(i_vals) + 1)
    ax.set_ylim(min(j_vals) - 2, max(j_vals) + 2)
    ax.set_xticks(i_vals)
    ax.set_yticks(j_vals)
    ax.set_xlabel("homological grading i")
    ax.set_ylabel("quantum grading j")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def scan_summary(result: ScanResult, path: str) -> str:
    """Bar chart of the scan summary counters."""
    summary = result.summary()
    labels = list(summary)
    values = [summary[k] for k in labels]
    fig, ax = plt.subplots(figsize=(1.5 + 0.9 * len(labels), 4))
    ax.bar(range(len(labels)), values, color="#4c72b0")
    ax.set_xticks(range(len(labels)))
    ax.set_xticklabels([k.replace("_", "\n") for k in labels], fontsize=8)
    for x, v in enumerate(values):
        ax.text(x, v, str(v), ha="center", va="bottom", fontsize=9)
    ax.set_ylabel("knots")
    ax.set_title("sliceness scan summary")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def s_by_knot(result: ScanResult, path: str) -> str:
    """Scatter of determined s values across the scanned corpus."""
    names, values = [], []
    for r in result.reports:
        if r.error is None and r.s is not None and r.s.is_determined:
            names.append(r.name)
            values.append(r.s.determined)
    fig, ax = plt.subplots(figsize=(1.5 + 0.5 * max(len(names), 1), 4))
    ax.axhline(0, color="gray", lw=0.8)
    ax.plot(range(len(names)), values, "o", color="#dd8452")
    ax.set_xticks(range(len(names)))
    ax.set_xticklabels(names, rotation=60, ha="right", fontsize=8)
    ax.set_ylabel("s")
    ax.set_title("s across the corpus")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_scan(result: ScanResult, directory: str) -> list[str]:
    """Write the standard pair of scan figures into a directory."""
    os.makedirs(directory, exist_ok=True)
    return [
        scan_summary(result, os.path.join(directory, "summary.png")),
        s_by_knot(result, os.path.join(directory, "s_values.png")),
    ]
