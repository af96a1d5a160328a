"""Figure renderers for the three experiment CSV kinds.

Styling is fixed (no rcfile or environment influence) and the PNG metadata
is pinned, so rendering the same CSV twice yields byte-identical files.
All renderers return a Figure; nothing touches the filesystem until
``save_figure``, so a validation error never leaves a partial output behind.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
from matplotlib.figure import Figure

from .loader import ExperimentData, FigureDataError, require_columns

_STYLE = {
    "figure.figsize": (7.2, 4.6),
    "font.size": 10.0,
    "axes.grid": True,
    "grid.alpha": 0.3,
    "legend.framealpha": 0.9,
}

_COLORS = ("tab:blue", "tab:orange", "tab:green", "tab:red", "tab:purple")

# exact speed of light, and the rounded value wideband guide work often
# assumes; selected by the `rounded_c` provenance flag
_C_EXACT = 299792458.0
_C_ROUNDED = 3.0e8


def _cutoff_from_provenance(provenance: dict) -> float | None:
    width_a = provenance.get("width_a")
    if not isinstance(width_a, (int, float)) or isinstance(width_a, bool):
        return None
    if width_a <= 0:
        return None
    c = _C_ROUNDED if provenance.get("rounded_c") is True else _C_EXACT
    return c / (2.0 * width_a)


def render_fig2(data: ExperimentData) -> Figure:
    """Per-subcarrier rate for the three model variants, with cutoff marker."""
    require_columns(data, "fig2")
    f_ghz = [row["frequency_hz"] / 1e9 for row in data.rows]
    series = (
        ("rate_practical_bits", "practical", "tab:blue", "-"),
        ("rate_ideal_phase_matched_bits", "ideal phase matched", "tab:green", "--"),
        ("rate_freq_independent_fmax_bits", "flat at band top", "tab:orange", ":"),
    )
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        for column, label, color, style in series:
            ax.plot(
                f_ghz,
                [row[column] for row in data.rows],
                color=color,
                linestyle=style,
                label=label,
            )
        cutoff = _cutoff_from_provenance(data.provenance)
        if cutoff is not None:
            ax.axvline(
                cutoff / 1e9,
                color="gray",
                linestyle="--",
                linewidth=1.0,
                label="guide cutoff",
            )
        ax.set_xlabel("subcarrier frequency [GHz]")
        ax.set_ylabel("achievable rate [bits]")
        ax.set_title("Per-subcarrier rate by model variant")
        ax.legend()
        fig.tight_layout()
    return fig


def render_fig3(data: ExperimentData) -> Figure:
    """Adjacent-pair phase variation vs. bandwidth, one pair of lines per N."""
    require_columns(data, "fig3")
    counts = sorted({row["pa_count"] for row in data.rows})
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        for index, count in enumerate(counts):
            rows = sorted(
                (row for row in data.rows if row["pa_count"] == count),
                key=lambda row: row["bandwidth_hz"],
            )
            b_ghz = [row["bandwidth_hz"] / 1e9 for row in rows]
            color = _COLORS[index % len(_COLORS)]
            ax.plot(
                b_ghz,
                [row["variation_exact_rad"] for row in rows],
                color=color,
                marker="o",
                label=f"N = {count}, exact",
            )
            ax.plot(
                b_ghz,
                [row["variation_linearized_rad"] for row in rows],
                color=color,
                linestyle="--",
                label=f"N = {count}, linearized",
            )
        ax.set_xlabel("bandwidth [GHz]")
        ax.set_ylabel("max adjacent-pair phase variation [rad]")
        ax.set_title("Band-edge phase misalignment vs. bandwidth")
        ax.legend()
        fig.tight_layout()
    return fig


def render_fig4(data: ExperimentData) -> Figure:
    """CP overhead vs. bandwidth per center frequency (log overhead axis).

    Rows flagged ``no_propagating`` carry no overhead figure and are skipped;
    if nothing remains the input is rejected before any file is written.
    """
    require_columns(data, "fig4")
    rows = [
        row
        for row in data.rows
        if row["band_status"] != "no_propagating" and row["overhead_percent"] is not None
    ]
    if not rows:
        raise FigureDataError("fig4 input has no rows with a propagating band")
    frequencies = sorted({row["center_frequency_hz"] for row in rows})
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots()
        for index, f_c in enumerate(frequencies):
            group = sorted(
                (row for row in rows if row["center_frequency_hz"] == f_c),
                key=lambda row: row["bandwidth_hz"],
            )
            ax.plot(
                [row["bandwidth_hz"] / 1e9 for row in group],
                [row["overhead_percent"] for row in group],
                color=_COLORS[index % len(_COLORS)],
                marker="o",
                label=f"f_c = {f_c / 1e9:g} GHz",
            )
        ax.set_yscale("log")
        ax.set_xlabel("bandwidth [GHz]")
        ax.set_ylabel("cyclic-prefix overhead [% of symbol]")
        ax.set_title("Cyclic-prefix cost vs. bandwidth")
        ax.legend()
        fig.tight_layout()
    return fig


RENDERERS = {"fig2": render_fig2, "fig3": render_fig3, "fig4": render_fig4}


def save_figure(fig: Figure, path: str | Path) -> None:
    """Write the figure; fixed dpi and metadata keep repeat runs identical."""
    try:
        fig.savefig(path, dpi=150, metadata={"Software": "pinchsim-figures"})
    finally:
        plt.close(fig)
