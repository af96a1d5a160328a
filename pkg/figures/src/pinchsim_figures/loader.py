"""Read experiment CSV files: provenance comment, header row, typed cells.

The input format is the one the ``pinchsim`` CLI emits: a first line holding
``# `` plus the resolved run configuration as JSON, a header row, then data
rows.  Cells parse to int, float, ``None`` (blank) or string, in that order
of preference.  This package never imports the simulator; the CSV file is
the entire interface.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any


class FigureDataError(ValueError):
    """Malformed, incomplete, or empty experiment CSV input."""


REQUIRED_COLUMNS: dict[str, tuple[str, ...]] = {
    "fig2": (
        "subcarrier",
        "frequency_hz",
        "rate_practical_bits",
        "rate_ideal_phase_matched_bits",
        "rate_freq_independent_fmax_bits",
    ),
    "fig3": (
        "pa_count",
        "bandwidth_hz",
        "variation_exact_rad",
        "variation_linearized_rad",
    ),
    "fig4": (
        "center_frequency_hz",
        "bandwidth_hz",
        "overhead_percent",
        "band_status",
    ),
}


@dataclass(frozen=True)
class ExperimentData:
    """Provenance mapping, column names, and rows as column->value dicts."""

    provenance: dict[str, Any]
    columns: tuple[str, ...]
    rows: tuple[dict[str, Any], ...]


def _parse_cell(text: str) -> Any:
    if text == "":
        return None
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def load_csv(path: str | Path) -> ExperimentData:
    """Load one experiment CSV, validating the overall file structure."""
    with open(path, newline="") as stream:
        first = stream.readline()
        if not first.startswith("# "):
            raise FigureDataError(
                f"{path}: expected a '# ' provenance comment on the first line"
            )
        try:
            provenance = json.loads(first[2:])
        except json.JSONDecodeError as exc:
            raise FigureDataError(f"{path}: provenance line is not valid JSON") from exc
        if not isinstance(provenance, dict):
            raise FigureDataError(f"{path}: provenance must be a JSON object")

        reader = csv.reader(stream)
        header = next(reader, None)
        if not header:
            raise FigureDataError(f"{path}: missing header row")
        rows = tuple(
            dict(zip(header, (_parse_cell(cell) for cell in row)))
            for row in reader
            if row
        )
    return ExperimentData(provenance=provenance, columns=tuple(header), rows=rows)


def require_columns(data: ExperimentData, kind: str) -> None:
    """Check the column set and non-emptiness for one figure kind."""
    required = REQUIRED_COLUMNS[kind]
    missing = [name for name in required if name not in data.columns]
    if missing:
        raise FigureDataError(
            f"{kind} input is missing required columns: {', '.join(missing)}"
        )
    if not data.rows:
        raise FigureDataError(f"{kind} input has no data rows")
