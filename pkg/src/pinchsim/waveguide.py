"""TE10 dispersion of a rectangular dielectric waveguide.

Cutoff, phase constant, group velocity/delay, and the in-guide transfer
function, including the evanescent regime below cutoff.  Only the dominant
TE10 mode is modeled; for it the cutoff reduces to f0 = c / (2a).

Conventions:
  beta_g(f) = sqrt((2*pi*f/c)^2 - (pi/a)^2)        for f > f0  [rad/m]
  v_g(f)    = c * sqrt(1 - (f0/f)^2)               for f > f0  [m/s]
  T(f, x)   = exp(-(alpha_g + j*beta_g) * x)       propagating
            = exp(-sqrt((pi/a)^2 - (2*pi*f/c)^2) * x)   evanescent (real)

All functions accept scalars or numpy arrays for the frequency argument and
broadcast over distance.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import C_VACUUM
from .errors import EvanescentFrequencyError, ValidationError


@dataclass(frozen=True)
class WaveguideSpec:
    """Rectangular waveguide geometry and loss model.

    Parameters
    ----------
    width_a : float
        Broad transverse dimension a in meters; sets the TE10 cutoff.
    total_length : float
        Physical guide length in meters (feed at x = 0).
    attenuation : float
        Amplitude attenuation of the propagating mode in nepers/meter,
        frequency-flat.  Defaults to a lossless guide.
    """

    width_a: float
    total_length: float
    attenuation: float = 0.0

    def __post_init__(self) -> None:
        if not self.width_a > 0:
            raise ValidationError(f"width_a must be > 0, got {self.width_a}")
        if not self.total_length > 0:
            raise ValidationError(f"total_length must be > 0, got {self.total_length}")
        if self.attenuation < 0:
            raise ValidationError(f"attenuation must be >= 0, got {self.attenuation}")


@dataclass(frozen=True)
class GuidedWaveState:
    """Propagation state of the TE10 mode at a single frequency.

    Exactly one of ``phase_constant``/``decay_constant`` is nonzero except at
    cutoff, where both vanish.  ``group_velocity`` is the cutoff-limit value 0
    at f = f0 and is ``None`` below cutoff (no energy transport).
    """

    frequency: float
    phase_constant: float
    decay_constant: float
    group_velocity: float | None

    @property
    def is_propagating(self) -> bool:
        return self.phase_constant > 0.0


def cutoff_frequency(spec: WaveguideSpec, c: float = C_VACUUM) -> float:
    """TE10 cutoff frequency f0 = c / (2a) in Hz."""
    return c / (2.0 * spec.width_a)


def phase_constant(spec: WaveguideSpec, f, c: float = C_VACUUM):
    """Phase constant beta_g in rad/m; 0 at and below cutoff."""
    f = np.asarray(f, dtype=float)
    k2 = (2.0 * np.pi * f / c) ** 2 - (np.pi / spec.width_a) ** 2
    return np.sqrt(np.maximum(k2, 0.0))


def decay_constant(spec: WaveguideSpec, f, c: float = C_VACUUM):
    """Evanescent amplitude decay in nepers/m; 0 at and above cutoff."""
    f = np.asarray(f, dtype=float)
    k2 = (np.pi / spec.width_a) ** 2 - (2.0 * np.pi * f / c) ** 2
    return np.sqrt(np.maximum(k2, 0.0))


def group_velocity(spec: WaveguideSpec, f, c: float = C_VACUUM):
    """Group velocity v_g = c * sqrt(1 - (f0/f)^2) in m/s.

    Raises
    ------
    EvanescentFrequencyError
        If any frequency is at or below cutoff (no propagating energy).
    """
    f = np.asarray(f, dtype=float)
    f0 = cutoff_frequency(spec, c)
    if np.any(f <= f0):
        raise EvanescentFrequencyError(
            f"group velocity undefined at or below cutoff f0 = {f0:.6g} Hz"
        )
    return c * np.sqrt(1.0 - (f0 / f) ** 2)


def guided_state(spec: WaveguideSpec, f: float, c: float = C_VACUUM) -> GuidedWaveState:
    """Classify a frequency as propagating / evanescent / exactly at cutoff."""
    if not f > 0:
        raise ValidationError(f"frequency must be > 0, got {f}")
    f0 = cutoff_frequency(spec, c)
    if f > f0:
        return GuidedWaveState(
            frequency=f,
            phase_constant=float(phase_constant(spec, f, c)),
            decay_constant=0.0,
            group_velocity=float(group_velocity(spec, f, c)),
        )
    if f < f0:
        return GuidedWaveState(
            frequency=f,
            phase_constant=0.0,
            decay_constant=float(decay_constant(spec, f, c)),
            group_velocity=None,
        )
    return GuidedWaveState(frequency=f, phase_constant=0.0, decay_constant=0.0, group_velocity=0.0)


def group_delay(spec: WaveguideSpec, f, distance, c: float = C_VACUUM):
    """Propagation delay distance / v_g(f) in seconds.

    Requires f strictly above cutoff; the delay is undefined for evanescent
    frequencies.
    """
    distance = np.asarray(distance, dtype=float)
    if np.any(distance < 0):
        raise ValidationError("distance must be >= 0")
    return distance / group_velocity(spec, f, c)


def transfer_function(spec: WaveguideSpec, f, distance, c: float = C_VACUUM):
    """In-guide complex amplitude ratio T(f) = exp(-gamma(f) * distance).

    Propagating frequencies pick up the loss factor exp(-alpha_g * d) and the
    phase exp(-j * beta_g * d); evanescent frequencies decay as a real
    positive exponential that underflows to zero for any appreciable distance.
    Frequencies and distances broadcast against each other.
    """
    f = np.asarray(f, dtype=float)
    distance = np.asarray(distance, dtype=float)
    if np.any(distance < 0) or np.any(distance > spec.total_length):
        raise ValidationError(
            f"distance must lie within [0, {spec.total_length}] m"
        )
    f0 = cutoff_frequency(spec, c)
    beta = phase_constant(spec, f, c)
    decay = decay_constant(spec, f, c)
    propagating = np.exp(-(spec.attenuation + 1j * beta) * distance)
    evanescent = np.exp(-decay * distance) + 0.0j
    result = np.where(f > f0, propagating, evanescent)
    if result.ndim == 0:
        return complex(result)
    return result
