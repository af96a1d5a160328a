"""Handcrafted CSV fixtures mirroring the simulator's output format."""

import pytest

FIG2_TEXT = (
    '# {"width_a": 0.01, "rounded_c": true}\n'
    "subcarrier,frequency_hz,rate_practical_bits,rate_ideal_phase_matched_bits,"
    "rate_freq_independent_fmax_bits\n"
    "1,14600000000,0,0,13.5\n"
    "2,14900000000,1.0000000000000001e-30,2e-30,13.5\n"
    "3,15200000000,12.5,19.199999999999999,13.5\n"
    "4,16100000000,14.1,19,13.5\n"
)

FIG3_TEXT = (
    '# {"rounded_c": true, "center_frequency": 28000000000.0}\n'
    "pa_count,bandwidth_hz,variation_exact_rad,variation_linearized_rad\n"
    "4,500000000,2.6099999999999999,2.6600000000000001\n"
    "4,1000000000,5.2199999999999998,5.3200000000000003\n"
    "8,500000000,2.77,2.8199999999999998\n"
    "8,1000000000,5.54,5.6299999999999999\n"
)

FIG4_TEXT = (
    '# {"rounded_c": true}\n'
    "center_frequency_hz,bandwidth_hz,delay_guide_s,delay_freespace_s,"
    "delay_total_s,cp_samples,overhead_percent,band_status\n"
    "14000000000,500000000,,,,,,no_propagating\n"
    "16000000000,500000000,3.3000000000000002e-09,1.6e-10,3.46e-09,2,"
    "2.6400000000000001,full\n"
    "16000000000,1000000000,7.5e-09,1.6e-10,7.6599999999999996e-09,8,"
    "11.800000000000001,full\n"
    "30000000000,500000000,9.0000000000000004e-11,1.6e-10,2.5e-10,1,"
    "0.14000000000000001,full\n"
    "30000000000,1000000000,2.1e-10,1.6e-10,3.7e-10,1,0.34000000000000002,full\n"
)

FIG4_ALL_EVANESCENT_TEXT = (
    '# {"rounded_c": true}\n'
    "center_frequency_hz,bandwidth_hz,delay_guide_s,delay_freespace_s,"
    "delay_total_s,cp_samples,overhead_percent,band_status\n"
    "14000000000,500000000,,,,,,no_propagating\n"
    "14500000000,500000000,,,,,,no_propagating\n"
)


@pytest.fixture
def write_csv(tmp_path):
    def _write(text: str, name: str = "data.csv"):
        path = tmp_path / name
        path.write_text(text)
        return path

    return _write
