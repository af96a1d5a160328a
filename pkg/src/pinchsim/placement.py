"""Frequency-independent antenna placement along the guide.

Placing N antennas symmetrically about the user's x-coordinate with uniform
spacing delta maximizes the geometric path gain

  f(x) = sum_n ((x_n - x_u)^2 + C)^(-1/2),   C = y_u^2 + h^2,

provided the restricted objective is unimodal, which holds when
C >= (N-1)^2 * delta^2.  The rule deliberately ignores signal phase; the phase
penalty it incurs across an OFDM band is quantified in :mod:`pinchsim.phase`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PlacementError, ValidationError
from .radiation import PaPlacement, UserGeometry
from .waveguide import WaveguideSpec


@dataclass(frozen=True)
class PlacementRule:
    """Uniform symmetric placement: N antennas at minimum spacing delta.

    ``min_spacing`` is the center-to-center spacing (coupling length plus the
    physical guard gap between adjacent elements).
    """

    count: int
    min_spacing: float
    guard_gap: float = 0.0

    def __post_init__(self) -> None:
        if self.count < 1:
            raise ValidationError(f"count must be >= 1, got {self.count}")
        if not self.min_spacing > 0:
            raise ValidationError(f"min_spacing must be > 0, got {self.min_spacing}")
        if self.guard_gap < 0:
            raise ValidationError(f"guard_gap must be >= 0, got {self.guard_gap}")


def approx_locations(rule: PlacementRule, x_u: float, wg: WaveguideSpec) -> PaPlacement:
    """Spacing-constrained optimum: x_n = x_u + (n - 1 - (N-1)/2) * delta.

    Raises
    ------
    PlacementError
        If any resulting position falls outside [0, total_length]; positions
        are never silently clamped.
    """
    n = np.arange(rule.count, dtype=float)
    positions = x_u + (n - (rule.count - 1) / 2.0) * rule.min_spacing
    if positions[0] < 0.0 or positions[-1] > wg.total_length:
        raise PlacementError(
            f"placement [{positions[0]:.6g}, {positions[-1]:.6g}] m exceeds "
            f"the waveguide [0, {wg.total_length}] m"
        )
    return PaPlacement(tuple(positions))


def unimodality_check(rule: PlacementRule, user: UserGeometry) -> bool:
    """True when C = y_u^2 + h^2 >= (N-1)^2 * delta^2 (placement rule provably optimal)."""
    c_offset = user.y**2 + user.waveguide_height**2
    return c_offset >= ((rule.count - 1) * rule.min_spacing) ** 2


def geometric_path_gain(positions, user: UserGeometry) -> float:
    """Sum of inverse antenna/user distances (the placement objective)."""
    if isinstance(positions, PaPlacement):
        positions = positions.positions
    x = np.asarray(positions, dtype=float)
    c_offset = user.y**2 + user.waveguide_height**2
    return float(np.sum(1.0 / np.sqrt((x - user.x) ** 2 + c_offset)))
