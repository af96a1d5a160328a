"""Accumulated-phase bookkeeping and adjacent-antenna misalignment metrics.

The per-antenna phase delay splits into four analytic terms: in-guide
propagation, residual phase from upstream extraction, the local coupling
phase, and the free-space path.  Each term is evaluated analytically (not as
the argument of a complex product), so the total is continuous in frequency
and differences across the band carry no 2*pi wrapping artifacts.  The one
exception is the residual extraction angle, which uses the principal value
per pinch; it stays far from +-pi in any weakly-coupled regime.

For adjacent antennas the difference admits a first-order model in the
offset from the band center.  Its slope combines the guide group delay over
one spacing with the free-space path-length difference, and the deviation of
the exact difference from this model shrinks quadratically with the offset.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .coupling import local_amplitude_factors, pa_phase_constant
from .errors import EvanescentFrequencyError, ValidationError
from .link import ModelVariant
from .radiation import pa_user_distance
from .waveguide import cutoff_frequency, group_velocity, phase_constant

if TYPE_CHECKING:  # pragma: no cover
    from .scenario import SystemScenario

TAU = 2.0 * math.pi


@dataclass(frozen=True)
class PhaseBreakdown:
    """Signed terms of the accumulated phase delay at one antenna.

    The total is guide - residual - coupling + freespace.  The coupling term
    is always the analytic half-mismatch expression; when the interaction
    argument exceeds pi the local extraction amplitude may change sign, which
    is flagged rather than folded into the phase (differences between
    identically-pinched antennas are unaffected).
    """

    guide_phase: float
    accumulated_residual_phase: float
    coupling_phase: float
    freespace_phase: float
    coupling_sign_flipped: bool = False

    @property
    def total(self) -> float:
        return (
            self.guide_phase
            - self.accumulated_residual_phase
            - self.coupling_phase
            + self.freespace_phase
        )


@dataclass(frozen=True)
class PhaseVariation:
    """Largest adjacent-pair phase swing across the band, both models."""

    exact: float
    linearized: float


def _eval_frequencies(scenario: "SystemScenario", f: np.ndarray) -> np.ndarray:
    if scenario.variant is ModelVariant.FREQ_INDEPENDENT_FMAX:
        return np.full_like(f, scenario.grid.frequencies()[-1])
    return f


def _require_propagating(scenario: "SystemScenario", f: np.ndarray) -> None:
    f0 = cutoff_frequency(scenario.waveguide, scenario.speed_of_light)
    if np.any(f <= f0):
        raise EvanescentFrequencyError(
            f"phase analysis requires frequencies above cutoff {f0:.6g} Hz"
        )


def _coupling_terms(
    scenario: "SystemScenario", f: np.ndarray
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Mismatch, residual extraction angle, and sign-flip flag per frequency."""
    c = scenario.speed_of_light
    if scenario.variant is ModelVariant.IDEAL_PHASE_MATCHED:
        dbeta = np.zeros_like(f)
    else:
        dbeta = phase_constant(scenario.waveguide, f, c) - pa_phase_constant(
            scenario.pinch, f, c
        )
    kappa = scenario.pinch.kappa(f)
    length = scenario.pinch.coupling_length
    _, a_wg = local_amplitude_factors(kappa, dbeta, length)
    flipped = np.sin(np.hypot(kappa, dbeta / 2.0) * length) < 0.0
    return dbeta, np.angle(a_wg), flipped


def accumulated_phase(scenario: "SystemScenario", n: int, p: int) -> PhaseBreakdown:
    """Phase delay terms for antenna n at subcarrier p (both 1-based).

    Raises
    ------
    EvanescentFrequencyError
        If the evaluated subcarrier lies at or below cutoff.
    """
    positions = np.asarray(scenario.positions.positions)
    if not 1 <= n <= positions.size:
        raise ValidationError(f"antenna index {n} outside 1..{positions.size}")
    grid_f = scenario.grid.frequencies()
    if not 1 <= p <= grid_f.size:
        raise ValidationError(f"subcarrier index {p} outside 1..{grid_f.size}")
    f = _eval_frequencies(scenario, grid_f[p - 1 : p])
    _require_propagating(scenario, f)
    c = scenario.speed_of_light
    beta = phase_constant(scenario.waveguide, f, c)
    dbeta, residual_angle, flipped = _coupling_terms(scenario, f)
    x = float(positions[n - 1])
    d = pa_user_distance(scenario.user, x)
    return PhaseBreakdown(
        guide_phase=float(beta[0]) * x,
        accumulated_residual_phase=(n - 1) * float(residual_angle[0]),
        coupling_phase=float(dbeta[0]) * scenario.pinch.coupling_length / 2.0
        - math.pi / 2.0,
        freespace_phase=TAU * float(f[0]) * d / c,
        coupling_sign_flipped=bool(flipped[0]),
    )


def adjacent_pair_differences(
    scenario: "SystemScenario", frequencies: np.ndarray
) -> np.ndarray:
    """Exact adjacent-pair phase differences, shape (N - 1, F).

    Element (i, k) is the phase delay of antenna i + 2 minus antenna i + 1 at
    frequencies[k].  The local coupling phase is identical at both antennas
    and cancels; the residual term contributes one upstream extraction angle.
    """
    positions = np.asarray(scenario.positions.positions)
    if positions.size < 2:
        raise ValidationError("adjacent-pair analysis needs at least 2 antennas")
    f = _eval_frequencies(scenario, np.atleast_1d(np.asarray(frequencies, float)))
    _require_propagating(scenario, f)
    c = scenario.speed_of_light
    beta = phase_constant(scenario.waveguide, f, c)
    _, residual_angle, _ = _coupling_terms(scenario, f)
    dx = np.diff(positions)[:, None]
    dd = np.diff(pa_user_distance(scenario.user, positions))[:, None]
    return beta[None, :] * dx - residual_angle[None, :] + TAU * f[None, :] / c * dd


def pair_slopes(scenario: "SystemScenario") -> np.ndarray:
    """First-order sensitivity of each pair difference to frequency offset.

    The slope is 2*pi*spacing/v_g(f_c) + (2*pi/c)*(d_n - d_{n-1}); it is zero
    under the frequency-independent variant, whose difference is constant.
    """
    positions = np.asarray(scenario.positions.positions)
    if positions.size < 2:
        raise ValidationError("adjacent-pair analysis needs at least 2 antennas")
    if scenario.variant is ModelVariant.FREQ_INDEPENDENT_FMAX:
        return np.zeros(positions.size - 1)
    c = scenario.speed_of_light
    v_g = group_velocity(scenario.waveguide, scenario.grid.center_frequency, c)
    dd = np.diff(pa_user_distance(scenario.user, positions))
    return TAU * np.diff(positions) / v_g + TAU / c * dd


def adjacent_pair_linearized(
    scenario: "SystemScenario", frequencies: np.ndarray
) -> np.ndarray:
    """Linear-in-offset model of the pair differences, shape (N - 1, F).

    Anchored to the exact difference at the band center, so the model is
    exact at zero offset by construction.
    """
    f = np.atleast_1d(np.asarray(frequencies, dtype=float))
    f_c = scenario.grid.center_frequency
    anchor = adjacent_pair_differences(scenario, np.array([f_c]))[:, 0]
    slopes = pair_slopes(scenario)
    return anchor[:, None] + slopes[:, None] * (f[None, :] - f_c)


def adjacent_phase_difference_exact(scenario: "SystemScenario", n: int, p: int) -> float:
    """Exact phase difference between antennas n and n - 1 at subcarrier p."""
    _check_pair_indices(scenario, n, p)
    f_p = scenario.grid.frequencies()[p - 1]
    return float(adjacent_pair_differences(scenario, np.array([f_p]))[n - 2, 0])


def adjacent_phase_difference_linearized(
    scenario: "SystemScenario", n: int, p: int
) -> float:
    """Linearized phase difference between antennas n and n - 1 at subcarrier p."""
    _check_pair_indices(scenario, n, p)
    f_p = scenario.grid.frequencies()[p - 1]
    return float(adjacent_pair_linearized(scenario, np.array([f_p]))[n - 2, 0])


def _check_pair_indices(scenario: "SystemScenario", n: int, p: int) -> None:
    count = len(scenario.positions)
    if not 2 <= n <= count:
        raise ValidationError(f"pair index {n} outside 2..{count}")
    if not 1 <= p <= scenario.grid.subcarrier_count:
        raise ValidationError(
            f"subcarrier index {p} outside 1..{scenario.grid.subcarrier_count}"
        )


def max_adjacent_variation(scenario: "SystemScenario") -> PhaseVariation:
    """Largest band swing of the adjacent-pair difference over all pairs.

    The exact figure scans the subcarrier grid for the max-minus-min swing;
    the linearized figure is the closed-form range |slope| * B of the linear
    model across the occupied band.
    """
    exact = adjacent_pair_differences(scenario, scenario.grid.frequencies())
    swing = exact.max(axis=1) - exact.min(axis=1)
    linear = np.abs(pair_slopes(scenario)) * scenario.grid.bandwidth
    return PhaseVariation(exact=float(swing.max()), linearized=float(linear.max()))


def linearization_error(scenario: "SystemScenario", offset: float) -> np.ndarray:
    """Per-pair |exact - linearized| difference at f_c + offset.

    Halving the offset should shrink the error by roughly four, the signature
    of the second-order remainder the linear model drops.
    """
    f = np.array([scenario.grid.center_frequency + offset])
    exact = adjacent_pair_differences(scenario, f)[:, 0]
    linear = adjacent_pair_linearized(scenario, f)[:, 0]
    return np.abs(exact - linear)
