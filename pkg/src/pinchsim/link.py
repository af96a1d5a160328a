"""End-to-end per-subcarrier channel, SNR/rate, delay spread and CP analysis.

The channel to the user through antenna n at subcarrier frequency f_p is the
product of three stages,

  h_eff(n, p) = T(f_p; x_n) * a''_n(f_p) * g(f_p, d_n),

i.e. in-guide propagation to the antenna, cascaded coupling extraction, and
free-space radiation.  Subcarriers below the guide cutoff are evaluated with
the evanescent transfer function and are suppressed rather than rejected.

Three model variants are supported: the practical frequency-dependent model,
an idealized one with perfect phase matching (mismatch forced to zero), and a
frequency-independent approximation that freezes every frequency-dependent
factor at the highest subcarrier.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .coupling import cascade_factors, local_amplitude_factors, pa_phase_constant
from .errors import NoPropagatingSubcarriersError, ValidationError
from .radiation import freespace_gain, pa_user_distance
from .waveguide import (
    WaveguideSpec,
    cutoff_frequency,
    group_velocity,
    phase_constant,
    transfer_function,
)

if TYPE_CHECKING:  # pragma: no cover
    from .scenario import SystemScenario


class ModelVariant(enum.Enum):
    """Channel model variants compared against each other in rate profiles."""

    PRACTICAL = "practical"
    IDEAL_PHASE_MATCHED = "ideal_phase_matched"
    FREQ_INDEPENDENT_FMAX = "freq_independent_fmax"


@dataclass(frozen=True)
class OfdmGrid:
    """OFDM numerology: P subcarriers over bandwidth B around f_c.

    Subcarrier p (1-based) sits at f_c - B/2 + (p - 1/2) * B/P, so the first
    and last subcarriers lie half a spacing inside the band edges.
    """

    subcarrier_count: int
    bandwidth: float
    center_frequency: float

    def __post_init__(self) -> None:
        if self.subcarrier_count < 1:
            raise ValidationError(
                f"subcarrier_count must be >= 1, got {self.subcarrier_count}"
            )
        if not self.bandwidth > 0:
            raise ValidationError(f"bandwidth must be > 0, got {self.bandwidth}")
        if not self.center_frequency > 0:
            raise ValidationError(
                f"center_frequency must be > 0, got {self.center_frequency}"
            )
        if self.frequencies()[0] <= 0:
            raise ValidationError("lowest subcarrier frequency must be > 0")

    def frequencies(self) -> np.ndarray:
        """Per-subcarrier frequencies in Hz, ascending."""
        p = np.arange(1, self.subcarrier_count + 1, dtype=float)
        spacing = self.bandwidth / self.subcarrier_count
        return self.center_frequency - self.bandwidth / 2.0 + (p - 0.5) * spacing

    @property
    def subcarrier_spacing(self) -> float:
        return self.bandwidth / self.subcarrier_count

    @property
    def symbol_duration(self) -> float:
        """Useful OFDM symbol duration P/B in seconds (no CP)."""
        return self.subcarrier_count / self.bandwidth


@dataclass(frozen=True)
class PowerBudget:
    """Uniform per-subcarrier transmit power and receiver noise density."""

    per_subcarrier_power_dbm: float = 30.0
    noise_psd_dbm_hz: float = -174.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.per_subcarrier_power_dbm):
            raise ValidationError("per_subcarrier_power_dbm must be finite")
        if not math.isfinite(self.noise_psd_dbm_hz):
            raise ValidationError("noise_psd_dbm_hz must be finite")

    @property
    def power_watts(self) -> float:
        return 10.0 ** ((self.per_subcarrier_power_dbm - 30.0) / 10.0)

    def noise_power_watts(self, grid: OfdmGrid) -> float:
        """Per-subcarrier noise power N0 * (B/P) in watts."""
        psd = 10.0 ** ((self.noise_psd_dbm_hz - 30.0) / 10.0)
        return psd * grid.subcarrier_spacing


@dataclass(frozen=True)
class DelaySpread:
    """Guide-dispersion and free-space contributions to the delay spread."""

    guide: float
    freespace: float
    partial_band: bool = False

    @property
    def total(self) -> float:
        return self.guide + self.freespace


@dataclass(frozen=True)
class ChannelResponse:
    """Full per-subcarrier evaluation of a scenario."""

    frequencies: np.ndarray
    gains: np.ndarray
    snr: np.ndarray
    rates: np.ndarray
    propagating: np.ndarray
    delay_spread: DelaySpread
    cp_samples: int
    cp_overhead_percent: float
    total_rate: float

    @property
    def rate_sum(self) -> float:
        return float(np.sum(self.rates))


def effective_gains(scenario: "SystemScenario") -> np.ndarray:
    """Complex end-to-end gains h_eff as an (N, P) matrix.

    Below cutoff the coupling mismatch is evaluated with a vanishing guide
    phase constant; the evanescent transfer function suppresses those entries
    to (numerical) zero regardless.
    """
    c = scenario.speed_of_light
    wg = scenario.waveguide
    f = scenario.grid.frequencies()
    positions = np.asarray(scenario.positions.positions)[:, None]

    if scenario.variant is ModelVariant.FREQ_INDEPENDENT_FMAX:
        f = np.full_like(f, f[-1])

    guide = transfer_function(wg, f, positions, c)

    kappa = np.broadcast_to(scenario.pinch.kappa(f), (len(scenario.positions), f.size))
    if scenario.variant is ModelVariant.IDEAL_PHASE_MATCHED:
        dbeta = np.zeros_like(kappa)
    else:
        dbeta = phase_constant(wg, f, c) - pa_phase_constant(scenario.pinch, f, c)
        dbeta = np.broadcast_to(dbeta, kappa.shape)
    a_pa, a_wg = local_amplitude_factors(kappa, dbeta, scenario.pinch.coupling_length)
    extraction = cascade_factors(a_pa, a_wg)

    radiated = freespace_gain(scenario.user, positions, f, c)

    return guide * extraction * radiated


def total_gains(scenario: "SystemScenario") -> np.ndarray:
    """Coherent sum over the array: H_p = sum_n h_eff(n, p), shape (P,)."""
    return effective_gains(scenario).sum(axis=0)


def subcarrier_snr(scenario: "SystemScenario") -> np.ndarray:
    """Linear per-subcarrier SNR_p = P_tx * |H_p|^2 / sigma^2."""
    h = total_gains(scenario)
    budget = scenario.budget
    return budget.power_watts * np.abs(h) ** 2 / budget.noise_power_watts(scenario.grid)


def subcarrier_rates(scenario: "SystemScenario") -> np.ndarray:
    """Per-subcarrier achievable rate log2(1 + SNR_p) in bits/symbol."""
    return np.log2(1.0 + subcarrier_snr(scenario))


def waveguide_delay_spread(
    wg: WaveguideSpec,
    f_low: float,
    f_high: float,
    array_length: float,
    c: float | None = None,
) -> float:
    """Differential group delay |1/v_g(f_low) - 1/v_g(f_high)| * L_array in seconds."""
    from .constants import C_VACUUM

    c = C_VACUUM if c is None else c
    inv_low = 1.0 / group_velocity(wg, f_low, c)
    inv_high = 1.0 / group_velocity(wg, f_high, c)
    return abs(inv_low - inv_high) * array_length


def delay_spread(scenario: "SystemScenario") -> DelaySpread:
    """Guide and free-space delay spreads over the propagating subcarriers.

    Raises
    ------
    NoPropagatingSubcarriersError
        If every subcarrier lies at or below cutoff.
    """
    c = scenario.speed_of_light
    f = scenario.grid.frequencies()
    f0 = cutoff_frequency(scenario.waveguide, c)
    propagating = f > f0
    if not propagating.any():
        raise NoPropagatingSubcarriersError(
            f"all {f.size} subcarriers lie at or below cutoff f0 = {f0:.6g} Hz"
        )
    f_prop = f[propagating]
    guide = waveguide_delay_spread(
        scenario.waveguide,
        float(f_prop[0]),
        float(f_prop[-1]),
        scenario.positions.array_length,
        c,
    )
    distances = pa_user_distance(scenario.user, np.asarray(scenario.positions.positions))
    freespace = (np.max(distances) - np.min(distances)) / c
    return DelaySpread(
        guide=guide,
        freespace=float(freespace),
        partial_band=bool((~propagating).any()),
    )


def cp_requirement(scenario: "SystemScenario") -> tuple[int, float]:
    """Minimum CP length in samples and the CP overhead in percent.

    The sample count is ceil(delay_spread * B); the overhead is the unrounded
    ratio of the delay spread to the useful symbol duration P/B.
    """
    spread = delay_spread(scenario)
    cp_samples = math.ceil(spread.total * scenario.grid.bandwidth)
    overhead = spread.total / scenario.grid.symbol_duration * 100.0
    return cp_samples, overhead


def total_rate(scenario: "SystemScenario", cp_samples: int | None = None) -> float:
    """CP-normalized rate (1/(P + L_cp)) * sum_p R_p in bits per sample."""
    if cp_samples is None:
        cp_samples, _ = cp_requirement(scenario)
    rates = subcarrier_rates(scenario)
    return float(rates.sum() / (scenario.grid.subcarrier_count + cp_samples))


def evaluate(scenario: "SystemScenario") -> ChannelResponse:
    """Complete link evaluation of a scenario."""
    c = scenario.speed_of_light
    f = scenario.grid.frequencies()
    f0 = cutoff_frequency(scenario.waveguide, c)
    gains = total_gains(scenario)
    budget = scenario.budget
    snr = budget.power_watts * np.abs(gains) ** 2 / budget.noise_power_watts(scenario.grid)
    rates = np.log2(1.0 + snr)
    spread = delay_spread(scenario)
    cp_samples, overhead = cp_requirement(scenario)
    return ChannelResponse(
        frequencies=f,
        gains=gains,
        snr=snr,
        rates=rates,
        propagating=f > f0,
        delay_spread=spread,
        cp_samples=cp_samples,
        cp_overhead_percent=overhead,
        total_rate=float(rates.sum() / (scenario.grid.subcarrier_count + cp_samples)),
    )
