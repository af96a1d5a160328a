"""Link-level simulator for OFDM pinching-antenna systems.

Models the frequency-selective end-to-end channel of pinching antennas fed
by a dispersive rectangular waveguide: single-mode guided propagation,
coupled-mode power extraction at each pinch, and free-space radiation to a
user.  On top of the channel sit per-subcarrier rate evaluation, delay
spread and cyclic-prefix overhead analysis, adjacent-antenna phase
misalignment metrics, and a frequency-independent placement rule.
"""

from .constants import C_ROUNDED, C_VACUUM
from .coupling import (
    CouplingFactors,
    PinchSpec,
    cascade_factors,
    cascaded_coupling,
    local_amplitude_factors,
    local_factors,
    pa_phase_constant,
    phase_mismatch,
)
from .errors import (
    ConfigError,
    EvaluationError,
    EvanescentFrequencyError,
    NoPropagatingSubcarriersError,
    PlacementError,
    UnknownFieldError,
    ValidationError,
)
from .experiments import (
    ExperimentResult,
    run_fig2,
    run_fig3,
    run_fig4,
    run_sweep,
    write_csv,
)
from .link import (
    ChannelResponse,
    DelaySpread,
    ModelVariant,
    OfdmGrid,
    PowerBudget,
    cp_requirement,
    delay_spread,
    effective_gains,
    evaluate,
    subcarrier_rates,
    subcarrier_snr,
    total_gains,
    total_rate,
    waveguide_delay_spread,
)
from .phase import (
    PhaseBreakdown,
    PhaseVariation,
    accumulated_phase,
    adjacent_pair_differences,
    adjacent_pair_linearized,
    adjacent_phase_difference_exact,
    adjacent_phase_difference_linearized,
    linearization_error,
    max_adjacent_variation,
    pair_slopes,
)
from .placement import (
    PlacementRule,
    approx_locations,
    geometric_path_gain,
    unimodality_check,
)
from .radiation import PaPlacement, UserGeometry, freespace_gain, pa_user_distance
from .scenario import (
    DEFAULT_CONFIG,
    PRESETS,
    SystemScenario,
    load_config,
    load_scenario,
    resolved_config,
    scenario_diagnostics,
    scenario_from_config,
    split_config,
)
from .waveguide import (
    GuidedWaveState,
    WaveguideSpec,
    cutoff_frequency,
    decay_constant,
    group_delay,
    group_velocity,
    guided_state,
    phase_constant,
    transfer_function,
)

__version__ = "0.1.0"

__all__ = [
    "C_ROUNDED",
    "C_VACUUM",
    "ChannelResponse",
    "ConfigError",
    "CouplingFactors",
    "DEFAULT_CONFIG",
    "DelaySpread",
    "EvaluationError",
    "EvanescentFrequencyError",
    "ExperimentResult",
    "GuidedWaveState",
    "ModelVariant",
    "NoPropagatingSubcarriersError",
    "OfdmGrid",
    "PRESETS",
    "PaPlacement",
    "PhaseBreakdown",
    "PhaseVariation",
    "PinchSpec",
    "PlacementError",
    "PlacementRule",
    "PowerBudget",
    "SystemScenario",
    "UnknownFieldError",
    "UserGeometry",
    "ValidationError",
    "WaveguideSpec",
    "accumulated_phase",
    "adjacent_pair_differences",
    "adjacent_pair_linearized",
    "adjacent_phase_difference_exact",
    "adjacent_phase_difference_linearized",
    "approx_locations",
    "cascade_factors",
    "cascaded_coupling",
    "cp_requirement",
    "cutoff_frequency",
    "decay_constant",
    "delay_spread",
    "effective_gains",
    "evaluate",
    "freespace_gain",
    "geometric_path_gain",
    "group_delay",
    "group_velocity",
    "guided_state",
    "linearization_error",
    "load_config",
    "load_scenario",
    "local_amplitude_factors",
    "local_factors",
    "max_adjacent_variation",
    "pa_phase_constant",
    "pa_user_distance",
    "pair_slopes",
    "phase_constant",
    "phase_mismatch",
    "resolved_config",
    "run_fig2",
    "run_fig3",
    "run_fig4",
    "run_sweep",
    "scenario_diagnostics",
    "scenario_from_config",
    "split_config",
    "subcarrier_rates",
    "subcarrier_snr",
    "total_gains",
    "total_rate",
    "transfer_function",
    "unimodality_check",
    "waveguide_delay_spread",
    "write_csv",
]
