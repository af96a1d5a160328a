"""Coupled-mode power transfer from the guide into pinching antennas.

Two-mode amplitude exchange over a coupling length L with coupling strength
kappa and phase mismatch dbeta = beta_g - beta_p.  With the guide launched at
unit amplitude and the antenna mode empty, the closed-form solutions are

  S      = sqrt(kappa^2 + (dbeta/2)^2)
  a_pa   = -j * (kappa/S) * sin(S*L) * exp(+j*dbeta*L/2)   (into the antenna)
  a_wg   = (cos(S*L) + j*(dbeta/2/S)*sin(S*L)) * exp(-j*dbeta*L/2)   (remaining)

which conserve power exactly: |a_pa|^2 + |a_wg|^2 = 1.  A cascade of antennas
multiplies the residual guide factors of all upstream elements; inter-antenna
propagation phase is intentionally *not* part of the cascade (it enters the
end-to-end gain through the guide transfer function instead).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .constants import C_VACUUM
from .errors import EvanescentFrequencyError, ValidationError
from .waveguide import WaveguideSpec, cutoff_frequency, phase_constant


@dataclass(frozen=True)
class PinchSpec:
    """Per-antenna coupling parameters.

    Parameters
    ----------
    coupling_length : float
        Interaction length L on the guide in meters.
    kappa_center : float
        Coupling coefficient in 1/m at the design (center) frequency.
    effective_index : float
        Effective refractive index n_p of the antenna mode (>= 1).
    kappa_table : tuple of (frequency_hz, kappa) pairs, optional
        Frequency-dependent coupling strength; linearly interpolated and
        clamped at the table ends.  When absent, kappa is frequency-flat at
        ``kappa_center``.
    """

    coupling_length: float
    kappa_center: float
    effective_index: float = 1.5
    kappa_table: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self) -> None:
        if not self.coupling_length > 0:
            raise ValidationError(f"coupling_length must be > 0, got {self.coupling_length}")
        if not self.kappa_center > 0:
            raise ValidationError(f"kappa_center must be > 0, got {self.kappa_center}")
        if self.effective_index < 1:
            raise ValidationError(f"effective_index must be >= 1, got {self.effective_index}")
        if self.kappa_table is not None:
            table = tuple((float(f), float(k)) for f, k in self.kappa_table)
            if any(k <= 0 for _, k in table) or any(f <= 0 for f, _ in table):
                raise ValidationError("kappa_table entries must have positive frequency and kappa")
            if list(f for f, _ in table) != sorted(set(f for f, _ in table)):
                raise ValidationError("kappa_table frequencies must be strictly increasing")
            object.__setattr__(self, "kappa_table", table)

    def kappa(self, f):
        """Coupling strength kappa(f) in 1/m (scalar or array in f)."""
        if self.kappa_table is None:
            return np.full_like(np.asarray(f, dtype=float), self.kappa_center)
        freqs = np.array([row[0] for row in self.kappa_table])
        values = np.array([row[1] for row in self.kappa_table])
        return np.interp(np.asarray(f, dtype=float), freqs, values)


@dataclass(frozen=True)
class CouplingFactors:
    """Result of one guide/antenna interaction at a single frequency."""

    local_pa_factor: complex
    residual_wg_factor: complex
    phase_mismatch: float
    interaction_parameter: float
    effective_factor: complex | None = None


def pa_phase_constant(spec: PinchSpec, f, c: float = C_VACUUM):
    """Antenna-mode propagation constant beta_p = (2*pi*f/c) * n_p in rad/m."""
    return 2.0 * np.pi * np.asarray(f, dtype=float) / c * spec.effective_index


def phase_mismatch(wg: WaveguideSpec, spec: PinchSpec, f, c: float = C_VACUUM):
    """Mismatch dbeta = beta_g(f) - beta_p(f) in rad/m; requires f above cutoff."""
    f = np.asarray(f, dtype=float)
    f0 = cutoff_frequency(wg, c)
    if np.any(f <= f0):
        raise EvanescentFrequencyError(
            f"phase mismatch undefined at or below cutoff f0 = {f0:.6g} Hz"
        )
    result = phase_constant(wg, f, c) - pa_phase_constant(spec, f, c)
    return float(result) if result.ndim == 0 else result


def local_amplitude_factors(kappa, dbeta, length):
    """Closed-form (a_pa, a_wg) pair; arguments broadcast elementwise."""
    kappa = np.asarray(kappa, dtype=float)
    dbeta = np.asarray(dbeta, dtype=float)
    s = np.hypot(kappa, dbeta / 2.0)
    sl = s * length
    half_twist = np.exp(0.5j * dbeta * length)
    a_pa = -1j * (kappa / s) * np.sin(sl) * half_twist
    a_wg = (np.cos(sl) + 1j * (dbeta / (2.0 * s)) * np.sin(sl)) / half_twist
    return a_pa, a_wg


def local_factors(spec: PinchSpec, dbeta: float, f: float) -> CouplingFactors:
    """Coupling factors of a single antenna at mismatch ``dbeta`` and frequency ``f``."""
    kappa = float(spec.kappa(f))
    a_pa, a_wg = local_amplitude_factors(kappa, dbeta, spec.coupling_length)
    return CouplingFactors(
        local_pa_factor=complex(a_pa),
        residual_wg_factor=complex(a_wg),
        phase_mismatch=float(dbeta),
        interaction_parameter=float(np.hypot(kappa, dbeta / 2.0)),
    )


def cascade_factors(a_pa, a_wg):
    """Effective extraction factors of an ordered cascade.

    ``a_pa``/``a_wg`` hold the local factors per antenna along the first axis;
    antenna n radiates the product of all upstream residuals times its own
    extraction factor.  Returns an array of the same shape.
    """
    a_pa = np.asarray(a_pa)
    a_wg = np.asarray(a_wg)
    upstream = np.cumprod(a_wg, axis=0)
    upstream = np.concatenate([np.ones_like(a_wg[:1]), upstream[:-1]], axis=0)
    return upstream * a_pa


def cascaded_coupling(
    array: Sequence[PinchSpec],
    wg: WaveguideSpec,
    f: float,
    c: float = C_VACUUM,
    dbeta_override: float | None = None,
) -> np.ndarray:
    """Effective complex coupling factor per antenna, feed side first.

    ``dbeta_override`` replaces the physical mismatch (0 models perfect phase
    matching).  Inter-antenna guide propagation is excluded by construction.
    """
    if not array:
        raise ValidationError("antenna array must be non-empty")
    a_pa = np.empty(len(array), dtype=complex)
    a_wg = np.empty(len(array), dtype=complex)
    for i, pinch in enumerate(array):
        dbeta = phase_mismatch(wg, pinch, f, c) if dbeta_override is None else dbeta_override
        factors = local_factors(pinch, dbeta, f)
        a_pa[i] = factors.local_pa_factor
        a_wg[i] = factors.residual_wg_factor
    return cascade_factors(a_pa, a_wg)
