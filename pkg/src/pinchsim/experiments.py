"""Named experiment presets and deterministic CSV emission.

Each runner returns an ExperimentResult carrying the resolved scenario
(provenance), the column names, and the data rows.  write_csv renders that
as a comment line with the provenance JSON, a header row, and one data row
per point, with floats at full round-trip precision so identical inputs
yield byte-identical files.

Runners:
  run_fig2   per-subcarrier rate under the three model variants
  run_fig3   adjacent-antenna phase variation over a bandwidth scan per N
  run_fig4   delay spread and CP overhead over bandwidth and center frequency
  run_sweep  generic Cartesian sweep over up to two scalar config fields
"""

from __future__ import annotations

import csv
import dataclasses
import itertools
import json
from dataclasses import dataclass
from typing import Any, Iterable, TextIO

import numpy as np

from .errors import (
    ConfigError,
    EvaluationError,
    NoPropagatingSubcarriersError,
    UnknownFieldError,
    ValidationError,
)
from .link import ModelVariant, cp_requirement, delay_spread, evaluate, subcarrier_rates
from .phase import max_adjacent_variation
from .scenario import (
    DEFAULT_CONFIG,
    EXPERIMENT_CONFIG,
    SystemScenario,
    resolved_config,
    scenario_from_config,
)

FIG2_COLUMNS = (
    "subcarrier",
    "frequency_hz",
    "rate_practical_bits",
    "rate_ideal_phase_matched_bits",
    "rate_freq_independent_fmax_bits",
)

FIG3_COLUMNS = (
    "pa_count",
    "bandwidth_hz",
    "variation_exact_rad",
    "variation_linearized_rad",
)

FIG4_COLUMNS = (
    "center_frequency_hz",
    "bandwidth_hz",
    "delay_guide_s",
    "delay_freespace_s",
    "delay_total_s",
    "cp_samples",
    "overhead_percent",
    "band_status",
)

SWEEP_SUMMARY_COLUMNS = (
    "propagating_subcarriers",
    "rate_sum_bits",
    "total_rate_bits_per_sample",
    "delay_guide_s",
    "delay_freespace_s",
    "delay_total_s",
    "cp_samples",
    "overhead_percent",
    "phase_variation_exact_rad",
    "phase_variation_linearized_rad",
    "error",
)


@dataclass(frozen=True)
class ExperimentResult:
    """Provenance, column names and data rows of one experiment run."""

    provenance: dict[str, Any]
    columns: tuple[str, ...]
    rows: tuple[tuple[Any, ...], ...]


def _format_cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def write_csv(result: ExperimentResult, stream: TextIO) -> None:
    """Render the result deterministically: provenance comment, header, rows."""
    stream.write("# " + json.dumps(result.provenance, sort_keys=True) + "\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(result.columns)
    for row in result.rows:
        writer.writerow([_format_cell(value) for value in row])


def _with_overrides(scenario: SystemScenario, **overrides: Any) -> SystemScenario:
    cfg = resolved_config(scenario)
    cfg.update(overrides)
    return scenario_from_config(cfg)


def run_fig2(scenario: SystemScenario) -> ExperimentResult:
    """Per-subcarrier achievable rate under all three model variants."""
    frequencies = scenario.grid.frequencies()
    rates = {
        variant: subcarrier_rates(dataclasses.replace(scenario, variant=variant))
        for variant in ModelVariant
    }
    rows = tuple(
        (
            p + 1,
            float(frequencies[p]),
            float(rates[ModelVariant.PRACTICAL][p]),
            float(rates[ModelVariant.IDEAL_PHASE_MATCHED][p]),
            float(rates[ModelVariant.FREQ_INDEPENDENT_FMAX][p]),
        )
        for p in range(scenario.grid.subcarrier_count)
    )
    return ExperimentResult(resolved_config(scenario), FIG2_COLUMNS, rows)


def run_fig3(
    scenario: SystemScenario,
    bandwidths: Iterable[float] | None = None,
    pa_counts: Iterable[int] | None = None,
) -> ExperimentResult:
    """Maximum adjacent-pair phase variation over a bandwidth scan per N."""
    bandwidths = list(EXPERIMENT_CONFIG["fig3_bandwidths"] if bandwidths is None else bandwidths)
    pa_counts = list(EXPERIMENT_CONFIG["fig3_pa_counts"] if pa_counts is None else pa_counts)
    rows = []
    for count in pa_counts:
        for bandwidth in bandwidths:
            variation = max_adjacent_variation(
                _with_overrides(scenario, pa_count=count, bandwidth=bandwidth)
            )
            rows.append((count, float(bandwidth), variation.exact, variation.linearized))
    provenance = resolved_config(scenario)
    provenance["fig3_bandwidths"] = [float(b) for b in bandwidths]
    provenance["fig3_pa_counts"] = [int(n) for n in pa_counts]
    return ExperimentResult(provenance, FIG3_COLUMNS, tuple(rows))


def run_fig4(
    scenario: SystemScenario,
    bandwidths: Iterable[float] | None = None,
    center_frequencies: Iterable[float] | None = None,
) -> ExperimentResult:
    """Delay spread and CP overhead over bandwidth per center frequency.

    Bands with no propagating subcarrier are reported as a flagged row with
    blank numeric cells rather than aborting the scan; partially evanescent
    bands carry their delay spread over the propagating part only.
    """
    bandwidths = list(EXPERIMENT_CONFIG["fig4_bandwidths"] if bandwidths is None else bandwidths)
    if center_frequencies is None:
        center_frequencies = EXPERIMENT_CONFIG["fig4_center_frequencies"]
    center_frequencies = list(center_frequencies)
    rows = []
    for f_c in center_frequencies:
        for bandwidth in bandwidths:
            point = _with_overrides(
                scenario, center_frequency=f_c, bandwidth=bandwidth
            )
            try:
                spread = delay_spread(point)
                cp_samples, overhead = cp_requirement(point)
            except NoPropagatingSubcarriersError:
                rows.append(
                    (float(f_c), float(bandwidth), None, None, None, None, None, "no_propagating")
                )
                continue
            rows.append(
                (
                    float(f_c),
                    float(bandwidth),
                    spread.guide,
                    spread.freespace,
                    spread.total,
                    cp_samples,
                    overhead,
                    "partial" if spread.partial_band else "full",
                )
            )
    provenance = resolved_config(scenario)
    provenance["fig4_bandwidths"] = [float(b) for b in bandwidths]
    provenance["fig4_center_frequencies"] = [float(f) for f in center_frequencies]
    return ExperimentResult(provenance, FIG4_COLUMNS, tuple(rows))


_UNSWEEPABLE = {"positions", "coupling_table"}


def run_sweep(
    scenario: SystemScenario, axes: dict[str, list[Any]] | None = None
) -> ExperimentResult:
    """Cartesian sweep over up to two scalar config fields.

    Each row carries the axis values and the channel summary; rows whose
    evaluation fails record the message in the error column instead of
    aborting the sweep.  An empty axes mapping yields the single-row summary
    of the base scenario.
    """
    axes = {} if axes is None else dict(axes)
    if len(axes) > 2:
        raise ConfigError(f"sweep supports at most 2 axes, got {len(axes)}")
    for name, values in axes.items():
        if name in _UNSWEEPABLE or name not in DEFAULT_CONFIG:
            raise UnknownFieldError(f"unknown sweep axis: {name!r}")
        if not isinstance(values, (list, tuple)) or not values:
            raise ConfigError(f"sweep axis {name!r} needs a non-empty list of values")
        for value in values:
            if isinstance(value, float) and not np.isfinite(value):
                raise ConfigError(f"sweep axis {name!r} has non-finite value {value!r}")

    names = tuple(axes)
    base = resolved_config(scenario)
    rows = []
    for point in itertools.product(*(axes[name] for name in names)):
        cfg = dict(base)
        cfg.update(zip(names, point))
        try:
            row = point + _sweep_summary(scenario_from_config(cfg))
        except (ValidationError, EvaluationError) as exc:
            row = point + (None,) * (len(SWEEP_SUMMARY_COLUMNS) - 1) + (str(exc),)
        rows.append(row)

    provenance = dict(base)
    provenance["sweep_axes"] = {name: list(values) for name, values in axes.items()}
    return ExperimentResult(provenance, names + SWEEP_SUMMARY_COLUMNS, tuple(rows))


def _sweep_summary(scenario: SystemScenario) -> tuple[Any, ...]:
    response = evaluate(scenario)
    try:
        variation = max_adjacent_variation(scenario)
        variation_exact: float | None = variation.exact
        variation_linearized: float | None = variation.linearized
    except (ValidationError, EvaluationError):
        # single antenna or partially evanescent band: no phase metric
        variation_exact = None
        variation_linearized = None
    return (
        int(np.count_nonzero(response.propagating)),
        response.rate_sum,
        response.total_rate,
        response.delay_spread.guide,
        response.delay_spread.freespace,
        response.delay_spread.total,
        response.cp_samples,
        response.cp_overhead_percent,
        variation_exact,
        variation_linearized,
        "",
    )
