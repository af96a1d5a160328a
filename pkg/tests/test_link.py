"""End-to-end channel assembly, SNR/rate, delay spread and CP analysis.

Scenarios are built through the config path so every test also exercises
validation.  The reference operating point puts 16 of 64 subcarriers below
the 15 GHz cutoff of the 1 cm guide.
"""

import dataclasses
import math

import numpy as np
import pytest

from pinchsim import (
    C_ROUNDED,
    ModelVariant,
    NoPropagatingSubcarriersError,
    OfdmGrid,
    PowerBudget,
    ValidationError,
    WaveguideSpec,
    cp_requirement,
    delay_spread,
    effective_gains,
    evaluate,
    freespace_gain,
    subcarrier_rates,
    subcarrier_snr,
    total_gains,
    total_rate,
    waveguide_delay_spread,
)
from pinchsim.scenario import PRESETS, scenario_from_config

FIG2 = scenario_from_config(PRESETS["fig2"])


class TestOfdmGrid:
    def test_reference_grid_endpoints(self):
        f = FIG2.grid.frequencies()
        assert f[0] == pytest.approx(14.515625e9, rel=1e-15)
        assert f[-1] == pytest.approx(16.484375e9, rel=1e-15)
        assert f.size == 64
        np.testing.assert_allclose(np.diff(f), 2.0e9 / 64.0, rtol=1e-12)

    def test_symmetric_about_center(self):
        f = FIG2.grid.frequencies()
        assert (f[0] + f[-1]) / 2.0 == pytest.approx(15.5e9, rel=1e-15)

    def test_single_subcarrier_sits_at_center(self):
        grid = OfdmGrid(subcarrier_count=1, bandwidth=1.0e9, center_frequency=10.0e9)
        assert grid.frequencies()[0] == pytest.approx(10.0e9, rel=1e-15)

    def test_validation(self):
        with pytest.raises(ValidationError, match="subcarrier_count"):
            OfdmGrid(subcarrier_count=0, bandwidth=1.0e9, center_frequency=10.0e9)
        with pytest.raises(ValidationError, match="bandwidth"):
            OfdmGrid(subcarrier_count=8, bandwidth=0.0, center_frequency=10.0e9)
        with pytest.raises(ValidationError):
            # lowest subcarrier would sit below zero
            OfdmGrid(subcarrier_count=8, bandwidth=30.0e9, center_frequency=10.0e9)

    def test_symbol_duration(self):
        assert FIG2.grid.symbol_duration == pytest.approx(32.0e-9, rel=1e-15)


class TestPowerBudget:
    def test_thirty_dbm_is_one_watt(self):
        assert PowerBudget(30.0, -174.0).power_watts == pytest.approx(1.0, rel=1e-15)

    def test_noise_power_per_subcarrier(self):
        budget = PowerBudget(30.0, -174.0)
        sigma2 = budget.noise_power_watts(FIG2.grid)
        assert sigma2 == pytest.approx(10.0 ** (-20.4) * 31.25e6, rel=1e-12)

    def test_non_finite_rejected(self):
        with pytest.raises(ValidationError):
            PowerBudget(math.inf, -174.0)
        with pytest.raises(ValidationError):
            PowerBudget(30.0, math.nan)


class TestEffectiveGains:
    def test_single_matched_antenna_leaves_freespace_magnitude(self):
        # antenna at the feed, perfect matching, quarter-beat length: guide
        # and coupling both contribute unit magnitude
        scenario = scenario_from_config(
            {"positions": [0.0], "variant": "ideal_phase_matched", "rounded_c": True}
        )
        gains = effective_gains(scenario)
        f = scenario.grid.frequencies()
        reference = freespace_gain(scenario.user, 0.0, f, c=C_ROUNDED)
        np.testing.assert_allclose(np.abs(gains[0]), np.abs(reference), rtol=1e-12)

    def test_deep_evanescent_suppression(self):
        # lowest subcarrier at 14.516 GHz decays ~79 Np/m over >4 m of guide
        gains = effective_gains(FIG2)
        assert np.all(np.abs(gains[:, 0]) < 1e-40)

    def test_freq_independent_rows_constant(self):
        scenario = dataclasses.replace(
            FIG2, variant=ModelVariant.FREQ_INDEPENDENT_FMAX
        )
        gains = effective_gains(scenario)
        assert np.all(gains == gains[:, :1])

    def test_shape(self):
        assert effective_gains(FIG2).shape == (8, 64)


class TestTotalGains:
    def test_single_antenna_equals_effective(self):
        scenario = scenario_from_config({"pa_count": 1, "rounded_c": True})
        np.testing.assert_array_equal(
            total_gains(scenario), effective_gains(scenario)[0]
        )

    def test_coherent_sum(self):
        np.testing.assert_array_equal(
            total_gains(FIG2), effective_gains(FIG2).sum(axis=0)
        )

    def test_triangle_inequality_randomized(self):
        rng = np.random.default_rng(53)
        for _ in range(10):
            scenario = scenario_from_config(
                {
                    "user_x": float(rng.uniform(3.0, 17.0)),
                    "user_y": float(rng.uniform(0.5, 6.0)),
                    "center_frequency": float(rng.uniform(15.6e9, 40.0e9)),
                    "bandwidth": float(rng.uniform(0.2e9, 1.0e9)),
                    "pa_count": int(rng.integers(1, 9)),
                }
            )
            coherent = np.abs(total_gains(scenario))
            bound = np.abs(effective_gains(scenario)).sum(axis=0)
            assert np.all(coherent <= bound + 1e-15)


class TestRates:
    def test_rate_is_log2_of_one_plus_snr(self):
        np.testing.assert_array_equal(
            subcarrier_rates(FIG2), np.log2(1.0 + subcarrier_snr(FIG2))
        )

    def test_fully_suppressed_subcarrier_has_zero_rate(self):
        assert subcarrier_rates(FIG2)[0] == 0.0

    def test_snr_scales_linearly_with_power(self):
        louder = dataclasses.replace(
            FIG2, budget=PowerBudget(40.0, -174.0)
        )
        np.testing.assert_allclose(
            subcarrier_snr(louder), 10.0 * subcarrier_snr(FIG2), rtol=1e-14
        )

    def test_snr_non_negative(self):
        assert np.all(subcarrier_snr(FIG2) >= 0.0)


class TestDelaySpread:
    def test_direct_two_frequency_evaluation(self):
        # 1/v_g(15.5 GHz) - 1/v_g(16.5 GHz) = 5.2291e-9 s/m over 1.4496 m
        wg = WaveguideSpec(width_a=0.01, total_length=20.0)
        value = waveguide_delay_spread(wg, 15.5e9, 16.5e9, 1.4496, c=C_ROUNDED)
        assert value == pytest.approx(7.5801830170849055e-09, rel=1e-12)

    def test_single_antenna_has_zero_spread(self):
        scenario = scenario_from_config({"pa_count": 1, "rounded_c": True})
        spread = delay_spread(scenario)
        assert spread.guide == 0.0
        assert spread.freespace == 0.0
        assert spread.total == 0.0

    def test_freespace_hand_geometry(self):
        # user below the first antenna: (sqrt(26) - 5)/c between x = 5 and 6
        scenario = scenario_from_config(
            {
                "positions": [5.0, 6.0],
                "user_x": 5.0,
                "user_y": 0.0,
                "rounded_c": True,
                "center_frequency": 20.0e9,
            }
        )
        spread = delay_spread(scenario)
        assert spread.freespace == pytest.approx(3.3006504530928162e-10, rel=1e-12)

    def test_partial_band_uses_propagating_edges_only(self):
        spread = delay_spread(FIG2)
        assert spread.partial_band
        f = FIG2.grid.frequencies()
        f_low = float(f[f > 15.0e9][0])
        expected = waveguide_delay_spread(
            FIG2.waveguide, f_low, float(f[-1]), FIG2.positions.array_length,
            c=C_ROUNDED,
        )
        assert spread.guide == pytest.approx(expected, rel=1e-15)

    def test_fully_evanescent_band_rejected(self):
        scenario = scenario_from_config(
            {"center_frequency": 14.0e9, "bandwidth": 0.5e9, "rounded_c": True}
        )
        with pytest.raises(NoPropagatingSubcarriersError):
            delay_spread(scenario)

    def test_full_band_not_flagged(self):
        scenario = scenario_from_config(
            {"center_frequency": 28.0e9, "rounded_c": True}
        )
        assert not delay_spread(scenario).partial_band


class TestCpRequirement:
    def test_reference_arithmetic(self):
        # ceil(7.58 ns * 2 GHz) = 16 samples; 7.58 ns over a 32 ns symbol
        wg = WaveguideSpec(width_a=0.01, total_length=20.0)
        spread = waveguide_delay_spread(wg, 15.5e9, 16.5e9, 1.4496, c=C_ROUNDED)
        assert math.ceil(spread * 2.0e9) == 16
        assert spread / 32.0e-9 * 100.0 == pytest.approx(23.688, abs=5e-3)

    def test_zero_spread_zero_cp(self):
        scenario = scenario_from_config(
            {"pa_count": 1, "center_frequency": 28.0e9, "rounded_c": True}
        )
        cp_samples, overhead = cp_requirement(scenario)
        assert cp_samples == 0
        assert overhead == 0.0

    def test_consistent_with_delay_spread(self):
        spread = delay_spread(FIG2)
        cp_samples, overhead = cp_requirement(FIG2)
        assert cp_samples == math.ceil(spread.total * FIG2.grid.bandwidth)
        assert overhead == pytest.approx(
            spread.total / FIG2.grid.symbol_duration * 100.0, rel=1e-15
        )

    def test_overhead_increases_with_bandwidth_near_cutoff(self):
        overheads = []
        for bandwidth in (0.5e9, 1.0e9, 1.5e9, 2.0e9):
            scenario = scenario_from_config(
                {"center_frequency": 16.0e9, "bandwidth": bandwidth, "rounded_c": True}
            )
            overheads.append(cp_requirement(scenario)[1])
        assert np.all(np.diff(overheads) > 0.0)


class TestTotalRate:
    def test_no_cp_flat_rates_pass_through(self):
        scenario = dataclasses.replace(
            FIG2, variant=ModelVariant.FREQ_INDEPENDENT_FMAX
        )
        rates = subcarrier_rates(scenario)
        assert total_rate(scenario, cp_samples=0) == pytest.approx(
            float(rates[0]), rel=1e-12
        )

    def test_longer_cp_strictly_reduces_rate(self):
        assert total_rate(FIG2, cp_samples=10) < total_rate(FIG2, cp_samples=0)

    def test_practical_below_ideal(self):
        ideal = dataclasses.replace(FIG2, variant=ModelVariant.IDEAL_PHASE_MATCHED)
        assert total_rate(FIG2) < total_rate(ideal)


class TestEvaluate:
    def test_response_fields_consistent(self):
        response = evaluate(FIG2)
        np.testing.assert_array_equal(response.rates, np.log2(1.0 + response.snr))
        assert int(np.count_nonzero(response.propagating)) == 48
        assert response.cp_samples == cp_requirement(FIG2)[0]
        assert response.total_rate == pytest.approx(
            response.rate_sum / (64 + response.cp_samples), rel=1e-15
        )
        assert response.delay_spread.total == pytest.approx(
            response.delay_spread.guide + response.delay_spread.freespace, rel=1e-15
        )
