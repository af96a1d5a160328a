"""Scenario assembly and JSON configuration.

A scenario bundles the waveguide, pinch coupler, OFDM grid, power budget,
user geometry and antenna placement into one validated, immutable object.
Configuration is a flat JSON object; every key has a default, so an empty
config reproduces the reference operating point (N = 8 antennas, P = 64
subcarriers, B = 2 GHz, 30 dBm per subcarrier, a 20 m guide of width 1 cm,
user at (5, 2, 0) m under a 5 m mounting height).

Three named presets adjust that baseline for the bundled experiments:
``fig2`` (per-subcarrier rate profile straddling cutoff), ``fig3``
(adjacent-antenna phase misalignment vs. bandwidth at 28 GHz) and ``fig4``
(cyclic-prefix overhead vs. bandwidth for several center frequencies).
Presets use the rounded speed of light so cutoff lands exactly on 15 GHz.
"""

from __future__ import annotations

import json
import math
import numbers
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import numpy as np

from .constants import C_ROUNDED, C_VACUUM
from .coupling import PinchSpec
from .errors import ConfigError, PlacementError, UnknownFieldError, ValidationError
from .link import ModelVariant, OfdmGrid, PowerBudget
from .placement import PlacementRule, approx_locations, unimodality_check
from .radiation import PaPlacement, UserGeometry, pa_user_distance
from .waveguide import WaveguideSpec, cutoff_frequency

DEFAULT_CONFIG: dict[str, Any] = {
    "width_a": 0.01,
    "waveguide_length": 20.0,
    "waveguide_attenuation": 0.0,
    "coupling_length": math.pi / 20.0,  # quarter beat at the default coupling_coefficient
    "coupling_coefficient": 10.0,
    "effective_index": 1.5,
    "coupling_table": None,
    "subcarrier_count": 64,
    "bandwidth": 2.0e9,
    "center_frequency": 15.5e9,
    "tx_power_dbm": 30.0,
    "noise_psd_dbm_hz": -174.0,
    "user_x": 5.0,
    "user_y": 2.0,
    "height": 5.0,
    "pa_count": 8,
    "min_spacing": None,  # defaults to coupling_length + guard_gap
    "guard_gap": 0.05,
    "positions": None,  # explicit placement; overrides the spacing rule
    "variant": "practical",
    "rounded_c": False,
}

_BANDWIDTH_SCAN = [0.25e9, 0.5e9, 0.75e9, 1.0e9, 1.25e9, 1.5e9, 1.75e9, 2.0e9]

EXPERIMENT_CONFIG: dict[str, Any] = {
    "fig3_bandwidths": _BANDWIDTH_SCAN,
    "fig3_pa_counts": [4, 8, 12],
    "fig4_bandwidths": _BANDWIDTH_SCAN,
    "fig4_center_frequencies": [16.0e9, 18.0e9, 22.0e9, 30.0e9],
    "sweep_axes": None,
}

PRESETS: dict[str, dict[str, Any]] = {
    "fig2": {"rounded_c": True},
    "fig3": {"rounded_c": True, "center_frequency": 28.0e9},
    "fig4": {"rounded_c": True},
}

_VARIANTS = {variant.value: variant for variant in ModelVariant}

_NUMERIC_KEYS = {
    "width_a",
    "waveguide_length",
    "waveguide_attenuation",
    "coupling_length",
    "coupling_coefficient",
    "effective_index",
    "bandwidth",
    "center_frequency",
    "tx_power_dbm",
    "noise_psd_dbm_hz",
    "user_x",
    "user_y",
    "height",
    "min_spacing",
    "guard_gap",
}

_INTEGER_KEYS = {"subcarrier_count", "pa_count"}


@dataclass(frozen=True)
class SystemScenario:
    """Validated, immutable system description."""

    waveguide: WaveguideSpec
    pinch: PinchSpec
    grid: OfdmGrid
    budget: PowerBudget
    user: UserGeometry
    placement: PaPlacement | PlacementRule
    variant: ModelVariant = ModelVariant.PRACTICAL
    rounded_c: bool = False

    def __post_init__(self) -> None:
        if isinstance(self.placement, PlacementRule):
            if self.placement.min_spacing < self.pinch.coupling_length:
                raise ValidationError(
                    f"min_spacing {self.placement.min_spacing:.6g} m is smaller "
                    f"than coupling_length {self.pinch.coupling_length:.6g} m"
                )
        self.positions  # resolve once so placement errors surface at build time

    @property
    def speed_of_light(self) -> float:
        return C_ROUNDED if self.rounded_c else C_VACUUM

    @property
    def positions(self) -> PaPlacement:
        """Antenna positions, resolved from the rule when not explicit."""
        if isinstance(self.placement, PaPlacement):
            first = self.placement.positions[0]
            last = self.placement.positions[-1]
            if first < 0.0 or last > self.waveguide.total_length:
                raise PlacementError(
                    f"positions [{first:.6g}, {last:.6g}] m fall outside the "
                    f"waveguide [0, {self.waveguide.total_length:.6g}] m"
                )
            return self.placement
        return approx_locations(self.placement, self.user.x, self.waveguide)


def _require_number(key: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise ConfigError(f"{key} must be a number, got {value!r}")
    return float(value)


def _require_integer(key: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise ConfigError(f"{key} must be an integer, got {value!r}")
    return int(value)


def _merged_config(config: dict[str, Any]) -> dict[str, Any]:
    merged = dict(DEFAULT_CONFIG)
    for key, value in config.items():
        if key in EXPERIMENT_CONFIG:
            continue
        if key not in DEFAULT_CONFIG:
            raise UnknownFieldError(f"unknown config field: {key!r}")
        if value is None:
            continue
        if key in _NUMERIC_KEYS:
            value = _require_number(key, value)
        elif key in _INTEGER_KEYS:
            value = _require_integer(key, value)
        merged[key] = value
    return merged


def scenario_from_config(config: dict[str, Any]) -> SystemScenario:
    """Build a scenario from a flat config dict, applying defaults.

    Recognized experiment keys (scan lists, sweep axes) are ignored here;
    anything else unrecognized raises UnknownFieldError.
    """
    cfg = _merged_config(config)

    table = cfg["coupling_table"]
    if table is not None:
        try:
            table = tuple(
                (_require_number("coupling_table", f), _require_number("coupling_table", k))
                for f, k in table
            )
        except (TypeError, ValueError) as exc:
            raise ConfigError(
                "coupling_table must be a list of [frequency_hz, kappa] pairs"
            ) from exc

    variant_name = cfg["variant"]
    if variant_name not in _VARIANTS:
        raise ConfigError(
            f"variant must be one of {sorted(_VARIANTS)}, got {variant_name!r}"
        )

    if not isinstance(cfg["rounded_c"], bool):
        raise ConfigError(f"rounded_c must be true or false, got {cfg['rounded_c']!r}")

    placement: PaPlacement | PlacementRule
    if cfg["positions"] is not None:
        raw = cfg["positions"]
        if not isinstance(raw, (list, tuple)) or not raw:
            raise ConfigError("positions must be a non-empty list of locations in m")
        placement = PaPlacement(tuple(_require_number("positions", x) for x in raw))
    else:
        spacing = cfg["min_spacing"]
        if spacing is None:
            spacing = cfg["coupling_length"] + cfg["guard_gap"]
        placement = PlacementRule(
            count=cfg["pa_count"],
            min_spacing=spacing,
            guard_gap=cfg["guard_gap"],
        )

    return SystemScenario(
        waveguide=WaveguideSpec(
            width_a=cfg["width_a"],
            total_length=cfg["waveguide_length"],
            attenuation=cfg["waveguide_attenuation"],
        ),
        pinch=PinchSpec(
            coupling_length=cfg["coupling_length"],
            kappa_center=cfg["coupling_coefficient"],
            effective_index=cfg["effective_index"],
            kappa_table=table,
        ),
        grid=OfdmGrid(
            subcarrier_count=cfg["subcarrier_count"],
            bandwidth=cfg["bandwidth"],
            center_frequency=cfg["center_frequency"],
        ),
        budget=PowerBudget(
            per_subcarrier_power_dbm=cfg["tx_power_dbm"],
            noise_psd_dbm_hz=cfg["noise_psd_dbm_hz"],
        ),
        user=UserGeometry(
            position=(cfg["user_x"], cfg["user_y"], 0.0),
            waveguide_height=cfg["height"],
        ),
        placement=placement,
        variant=_VARIANTS[variant_name],
        rounded_c=cfg["rounded_c"],
    )


def split_config(config: dict[str, Any]) -> tuple[dict[str, Any], dict[str, Any]]:
    """Separate scenario fields from experiment scan fields, validating keys."""
    scenario_cfg: dict[str, Any] = {}
    experiment_cfg: dict[str, Any] = {}
    for key, value in config.items():
        if key in EXPERIMENT_CONFIG:
            if value is not None:
                experiment_cfg[key] = value
        elif key in DEFAULT_CONFIG:
            scenario_cfg[key] = value
        else:
            raise UnknownFieldError(f"unknown config field: {key!r}")
    return scenario_cfg, experiment_cfg


def load_config(path: str | Path) -> dict[str, Any]:
    """Read a JSON config file; an empty file means all defaults."""
    text = Path(path).read_text()
    if not text.strip():
        return {}
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"{path}: config must be a JSON object")
    return raw


def load_scenario(path: str | Path) -> SystemScenario:
    """Load and fully validate a scenario from a JSON config file."""
    scenario_cfg, _ = split_config(load_config(path))
    return scenario_from_config(scenario_cfg)


def resolved_config(scenario: SystemScenario) -> dict[str, Any]:
    """Flat config dict reproducing the scenario (used for CSV provenance)."""
    rule = scenario.placement if isinstance(scenario.placement, PlacementRule) else None
    table = scenario.pinch.kappa_table
    return {
        "width_a": scenario.waveguide.width_a,
        "waveguide_length": scenario.waveguide.total_length,
        "waveguide_attenuation": scenario.waveguide.attenuation,
        "coupling_length": scenario.pinch.coupling_length,
        "coupling_coefficient": scenario.pinch.kappa_center,
        "effective_index": scenario.pinch.effective_index,
        "coupling_table": None if table is None else [list(pair) for pair in table],
        "subcarrier_count": scenario.grid.subcarrier_count,
        "bandwidth": scenario.grid.bandwidth,
        "center_frequency": scenario.grid.center_frequency,
        "tx_power_dbm": scenario.budget.per_subcarrier_power_dbm,
        "noise_psd_dbm_hz": scenario.budget.noise_psd_dbm_hz,
        "user_x": scenario.user.x,
        "user_y": scenario.user.y,
        "height": scenario.user.waveguide_height,
        "pa_count": rule.count if rule else len(scenario.positions),
        "min_spacing": rule.min_spacing if rule else None,
        "guard_gap": rule.guard_gap if rule else None,
        "positions": None if rule else list(scenario.positions.positions),
        "variant": scenario.variant.value,
        "rounded_c": scenario.rounded_c,
    }


def scenario_diagnostics(scenario: SystemScenario) -> dict[str, Any]:
    """Derived figures of merit reported by the validate command."""
    c = scenario.speed_of_light
    f0 = cutoff_frequency(scenario.waveguide, c)
    f = scenario.grid.frequencies()
    positions = np.asarray(scenario.positions.positions)
    distances = pa_user_distance(scenario.user, positions)
    spacing = np.diff(positions)
    half_wavelength = c / scenario.grid.center_frequency / 2.0
    rule = scenario.placement if isinstance(scenario.placement, PlacementRule) else None
    return {
        "speed_of_light": c,
        "cutoff_hz": f0,
        "lowest_subcarrier_hz": float(f[0]),
        "highest_subcarrier_hz": float(f[-1]),
        "propagating_subcarriers": int(np.count_nonzero(f > f0)),
        "evanescent_subcarriers": int(np.count_nonzero(f <= f0)),
        "half_wavelength_at_center_m": half_wavelength,
        "min_pair_spacing_m": float(spacing.min()) if spacing.size else None,
        "spacing_exceeds_half_wavelength": (
            bool(spacing.min() > half_wavelength) if spacing.size else None
        ),
        "array_length_m": scenario.positions.array_length,
        "first_position_m": float(positions[0]),
        "last_position_m": float(positions[-1]),
        "distance_min_m": float(distances.min()),
        "distance_max_m": float(distances.max()),
        "unimodal_gain_region": (
            bool(unimodality_check(rule, scenario.user)) if rule else None
        ),
    }
