"""Analog four-channel emulation of a single qubit."""

from .dsl import DSLParseError, ParseDiagnostic, Program, compile_program, format_program, parse
from .estimators import CqubitEncoder, GatePipeline
from .gates import (
    H,
    X,
    Hadamard,
    PauliX,
    RPhi,
    apply_gate,
    apply_pipeline,
    hadamard_channels,
    matrix_of,
    oracle_apply,
    pipeline_matrix,
    rphi_channels,
    x_channels,
)
from .netlist import (
    Netlist,
    NetlistError,
    build_hadamard_netlist,
    build_rphi_netlist,
    build_x_netlist,
    design_divider,
    divider_ratio,
    perturb_resistors,
    simulate_netlist,
)
from .signal import (
    OutOfDomainError,
    SampledWaveform,
    SignalRange,
    Sinusoid,
    check_normalization,
    quadrature,
    quantum_component,
    renormalize,
    sample_sinusoid,
)
from .state import (
    ChannelQuad,
    ChannelQuadWave,
    CqubitParams,
    NotNormalizedError,
    amplitudes,
    bloch_vector,
    channels_at,
    channels_wave,
    from_classical,
    prob_one,
    prob_zero,
    quad_of,
    remove_global_phase,
)

__version__ = "0.1.0"
