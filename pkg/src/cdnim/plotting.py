"""Figure rendering for grid verification reports.

One entry point, `save_grid_figure`: given a VerifyReport it draws the
Grundy values of the swept grid and writes the figure to a file, next to
whatever text or JSONL the CLI printed. One-pile grids become a step
chart, two-pile grids a heatmap with any mismatching cells marked, and
higher dimensions a histogram of value frequencies.
"""

from __future__ import annotations

from collections import Counter

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib import colormaps

from . import core
from .oracle import VerifyReport, positions_by_sum


def save_grid_figure(report: VerifyReport, path: str) -> str:
    """Render the Grundy values covered by ``report`` and save to ``path``.

    Values are recomputed with the closed form, which the report has just
    checked against the recursion; mismatch positions from the report are
    highlighted on two-pile heatmaps.
    """
    n = report.bound
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    if report.dims == 1:
        values = [core.grundy_value((k,)) for k in range(n + 1)]
        ax.step(range(n + 1), values, where="mid")
        ax.plot(range(n + 1), values, "o", markersize=3)
        ax.set_xlabel("pile size")
        ax.set_ylabel("grundy value")
    elif report.dims == 2:
        table = [[core.grundy_value((x, y)) for x in range(n + 1)] for y in range(n + 1)]
        top = max(max(row) for row in table)
        image = ax.imshow(
            table,
            origin="lower",
            cmap=colormaps["viridis"],
            interpolation="nearest",
        )
        fig.colorbar(image, ax=ax, label="grundy value", ticks=range(top + 1))
        if report.mismatches:
            xs = [m.position[0] for m in report.mismatches]
            ys = [m.position[1] for m in report.mismatches]
            ax.plot(xs, ys, "rx", markersize=6, label="mismatch")
            ax.legend(loc="upper right")
        ax.set_xlabel("pile 1")
        ax.set_ylabel("pile 2")
    else:
        counts = Counter(
            core.grundy_value(p) for p in positions_by_sum(report.dims, n)
        )
        values = sorted(counts)
        ax.bar(values, [counts[v] for v in values])
        ax.set_xticks(values)
        ax.set_xlabel("grundy value")
        ax.set_ylabel("positions")
    status = "ok" if report.passed else f"{len(report.mismatches)} mismatches"
    ax.set_title(f"grundy values on {{0..{n}}}^{report.dims} ({status})")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
