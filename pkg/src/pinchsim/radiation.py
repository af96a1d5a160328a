"""Free-space propagation from a pinching antenna to the user.

Each antenna sits at (x_n, 0, h) on the guide and radiates isotropically; the
user terminal is a single antenna at (x_u, y_u, 0).  The complex line-of-sight
channel at frequency f over distance d is

  g(f, d) = c / (4*pi*f*d) * exp(-j * 2*pi*f/c * d)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import C_VACUUM
from .errors import ValidationError


@dataclass(frozen=True)
class UserGeometry:
    """User position (x_u, y_u, 0) and deployment height h of the guide."""

    position: tuple[float, float, float]
    waveguide_height: float

    def __post_init__(self) -> None:
        if len(self.position) != 3:
            raise ValidationError("position must be a 3-vector (x, y, 0)")
        if self.position[2] != 0.0:
            raise ValidationError("position must lie in the ground plane z = 0")
        if not self.waveguide_height > 0:
            raise ValidationError(
                f"waveguide_height must be > 0, got {self.waveguide_height}"
            )
        object.__setattr__(self, "position", tuple(float(v) for v in self.position))

    @property
    def x(self) -> float:
        return self.position[0]

    @property
    def y(self) -> float:
        return self.position[1]


@dataclass(frozen=True)
class PaPlacement:
    """Ordered antenna x-coordinates along the guide (strictly increasing)."""

    positions: tuple[float, ...]

    def __post_init__(self) -> None:
        pos = tuple(float(x) for x in self.positions)
        if not pos:
            raise ValidationError("positions must be non-empty")
        if any(b <= a for a, b in zip(pos, pos[1:])):
            raise ValidationError("positions must be strictly increasing")
        object.__setattr__(self, "positions", pos)

    def __len__(self) -> int:
        return len(self.positions)

    @property
    def array_length(self) -> float:
        return self.positions[-1] - self.positions[0]


def pa_user_distance(user: UserGeometry, x_n):
    """Euclidean distance from the antenna at x_n to the user, in meters."""
    x_n = np.asarray(x_n, dtype=float)
    d = np.sqrt((x_n - user.x) ** 2 + user.y**2 + user.waveguide_height**2)
    return float(d) if d.ndim == 0 else d


def freespace_gain(user: UserGeometry, x_n, f, c: float = C_VACUUM):
    """Complex free-space channel from the antenna at x_n at frequency f."""
    f = np.asarray(f, dtype=float)
    d = pa_user_distance(user, x_n)
    if np.any(np.asarray(d) <= 0):
        raise ValidationError("antenna/user distance must be > 0")
    gain = c / (4.0 * np.pi * f * d) * np.exp(-2j * np.pi * f / c * d)
    if np.ndim(gain) == 0:
        return complex(gain)
    return gain
