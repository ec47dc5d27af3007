"""Figure rendering for the report commands: coefficient bar charts to files."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def save_coefficient_figure(path: str, series, title: str) -> None:
    """Render one bar group per polynomial in `series` and write it to path.

    series is a list of (label, polynomial) pairs; the output format follows
    the file extension (png, pdf, svg, ...).
    """
    fig, ax = plt.subplots(figsize=(8, 4.5))
    width = 0.8 / max(len(series), 1)
    for s_idx, (label, poly) in enumerate(series):
        offset = (s_idx - (len(series) - 1) / 2) * width
        xs = [k + offset for k in range(len(poly.coeffs))]
        ax.bar(xs, poly.coeffs, width=width, label=label)
    ax.set_xlabel("exponent of q")
    ax.set_ylabel("number of elements")
    ax.set_title(title)
    if len(series) > 1:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
