"""Free-space geometry and the per-antenna complex channel to the user."""

import math
from types import SimpleNamespace

import numpy as np
import pytest

from pinchsim import (
    C_ROUNDED,
    PaPlacement,
    UserGeometry,
    ValidationError,
    freespace_gain,
    pa_user_distance,
)

USER = UserGeometry(position=(5.0, 2.0, 0.0), waveguide_height=5.0)


class TestUserGeometry:
    def test_nonzero_z_rejected(self):
        with pytest.raises(ValidationError, match="z"):
            UserGeometry(position=(5.0, 2.0, 1.0), waveguide_height=5.0)

    def test_height_must_be_positive(self):
        with pytest.raises(ValidationError, match="waveguide_height"):
            UserGeometry(position=(5.0, 2.0, 0.0), waveguide_height=0.0)

    def test_coordinate_accessors(self):
        assert USER.x == 5.0
        assert USER.y == 2.0


class TestPaPlacement:
    def test_positions_strictly_increasing(self):
        with pytest.raises(ValidationError, match="increasing"):
            PaPlacement((1.0, 1.0, 2.0))

    def test_non_empty(self):
        with pytest.raises(ValidationError):
            PaPlacement(())

    def test_array_length_is_span(self):
        placement = PaPlacement((4.0, 4.5, 6.0))
        assert placement.array_length == pytest.approx(2.0, rel=1e-15)
        assert len(placement) == 3

    def test_single_antenna_zero_span(self):
        assert PaPlacement((5.0,)).array_length == 0.0


class TestDistance:
    def test_reference_geometry(self):
        # sqrt((5-5)^2 + 2^2 + 5^2) = sqrt(29)
        assert pa_user_distance(USER, 5.0) == pytest.approx(
            5.3851648071345037, rel=1e-15
        )

    def test_even_in_axial_offset(self):
        rng = np.random.default_rng(43)
        for delta in rng.uniform(0.0, 10.0, 50):
            left = pa_user_distance(USER, 5.0 - delta)
            right = pa_user_distance(USER, 5.0 + delta)
            assert left == pytest.approx(right, rel=1e-15)

    def test_degenerate_collocation(self):
        # collapsed geometry is useful for limit checks even though the
        # validated type requires a positive mounting height
        flat = SimpleNamespace(x=5.0, y=0.0, waveguide_height=0.0)
        assert pa_user_distance(flat, 5.0) == 0.0

    def test_vectorized_over_positions(self):
        d = pa_user_distance(USER, np.array([4.0, 5.0, 6.0]))
        assert d.shape == (3,)
        assert d[0] == pytest.approx(d[2], rel=1e-15)


class TestFreespaceGain:
    def test_reference_magnitude(self):
        # |h| = c / (4*pi*f*d) at f = 15.5 GHz, d = 5 m
        user = UserGeometry(position=(0.0, 3.0, 0.0), waveguide_height=4.0)
        gain = freespace_gain(user, 0.0, 15.5e9, c=C_ROUNDED)
        assert abs(gain) == pytest.approx(0.00030804182533915227, rel=1e-12)

    def test_inverse_scaling(self):
        user_near = UserGeometry(position=(0.0, 3.0, 0.0), waveguide_height=4.0)
        user_far = UserGeometry(position=(0.0, 6.0, 0.0), waveguide_height=8.0)
        f = 20.0e9
        near = abs(freespace_gain(user_near, 0.0, f, c=C_ROUNDED))
        far = abs(freespace_gain(user_far, 0.0, f, c=C_ROUNDED))
        assert near == pytest.approx(2.0 * far, rel=1e-12)
        double_f = abs(freespace_gain(user_near, 0.0, 2.0 * f, c=C_ROUNDED))
        assert double_f == pytest.approx(near / 2.0, rel=1e-12)

    def test_phase_wraps_to_zero_at_integer_cycles(self):
        # f*d/c integer puts the phase on a full turn
        user = UserGeometry(position=(0.0, 3.0, 0.0), waveguide_height=4.0)
        f = 2.0e9  # f*d/c = 2e9*5/3e8 = 100/3 -> pick f making it integer
        f = 3.0e8 * 7.0 / 5.0  # f*d/c = 7 exactly
        gain = freespace_gain(user, 0.0, f, c=C_ROUNDED)
        assert math.remainder(np.angle(gain), 2.0 * math.pi) == pytest.approx(
            0.0, abs=1e-9
        )

    def test_phase_linear_in_frequency(self):
        # unwrapped arg(h) = -(2*pi*d/c) * f; regression residuals ~ 0
        user = UserGeometry(position=(0.0, 3.0, 0.0), waveguide_height=4.0)
        f = np.linspace(10.0e9, 11.0e9, 401)
        phase = np.unwrap(np.angle(freespace_gain(user, 0.0, f, c=C_ROUNDED)))
        slope, intercept = np.polyfit(f, phase, 1)
        assert slope == pytest.approx(-2.0 * math.pi * 5.0 / C_ROUNDED, rel=1e-9)
        residual = phase - (slope * f + intercept)
        assert np.abs(residual).max() < 1e-9

    def test_magnitude_decreasing_in_f_and_d(self):
        f = np.linspace(10.0e9, 40.0e9, 100)
        g_f = np.abs(freespace_gain(USER, 5.0, f, c=C_ROUNDED))
        assert np.all(np.diff(g_f) < 0.0)
        x = np.linspace(5.0, 15.0, 100)  # moving away axially
        g_d = np.abs(freespace_gain(USER, x, 20.0e9, c=C_ROUNDED))
        assert np.all(np.diff(g_d) < 0.0)

    def test_zero_distance_rejected(self):
        flat = SimpleNamespace(x=5.0, y=0.0, waveguide_height=0.0)
        with pytest.raises(ValidationError, match="distance"):
            freespace_gain(flat, 5.0, 10.0e9, c=C_ROUNDED)
