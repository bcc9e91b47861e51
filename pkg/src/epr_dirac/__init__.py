"""Relativistic spin correlations for particle-antiparticle pairs.

The package builds Dirac bispinor pair amplitudes from first principles
(Clifford algebra, SL(2, C) boosts, Pauli-Lubanski spin operators), evaluates
spin-spin correlation functions of two-particle states through a trace oracle,
and cross-checks them against independently derived closed-form expressions.
"""

from .amplitudes import Amplitude, amplitude_u, amplitude_v, amplitude_w, vbar
from .clifford import (
    CHARGE_CONJUGATION,
    GAMMA,
    GAMMA5,
    METRIC,
    PAULI,
    GammaLabel,
    charge_conjugation,
    clifford_element,
    feynman_slash,
    gamma,
    gamma5,
    pauli,
    sigma_map,
)
from .correlations import (
    CorrelationResult,
    chsh,
    chsh_max,
    correlate_oracle,
    correlation_czachor_cmf,
    correlation_czachor_ultra,
    correlation_pseudoscalar_sharp,
    correlation_triplet_nonrel,
    correlation_vector_cmf,
    correlation_vector_ultra,
    delta_c_pseudoscalar,
    delta_c_vector,
    direction,
    oracle_correlator,
)
from .errors import (
    DirectionError,
    EmptyEnsembleError,
    EprDiracError,
    MomentumMismatchError,
    NonTransverseError,
    OffShellError,
    SingularConfigurationError,
    UndefinedLimitError,
    UnimodularError,
    ZeroNormError,
    ZeroStateError,
)
from .lorentz import (
    apply_lorentz,
    bispinor_rep,
    boost_sl2,
    check_on_shell,
    cmf_momentum,
    minkowski_dot,
    on_shell_energy,
    on_shell_momentum,
    parity_flip,
    rotation_sl2,
    sl2_to_lorentz,
    standard_boost_sl2,
    wigner_rotation,
)
from .spin import (
    PauliLubanskiMatrices,
    SpinMatrices,
    pauli_lubanski,
    spin_covariant,
    spin_matrices,
    spin_projection_2x2,
    spin_su2_generators,
)
from .states import (
    ENSEMBLE_CSV_HEADER,
    EnsembleState,
    StateKernel,
    ensemble,
    general_kernel,
    kernel_norm_trace,
    load_ensemble_csv,
    project_transverse,
    pseudoscalar_kernel,
    sharp_ensemble,
    vector_kernel,
)
from .verify import CheckResult, RunReport, run_all

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # clifford
    "METRIC", "PAULI", "GAMMA", "GAMMA5", "CHARGE_CONJUGATION",
    "pauli", "gamma", "gamma5", "charge_conjugation", "clifford_element",
    "feynman_slash", "sigma_map", "GammaLabel",
    # lorentz
    "minkowski_dot", "parity_flip", "on_shell_energy", "on_shell_momentum",
    "check_on_shell", "standard_boost_sl2", "sl2_to_lorentz", "bispinor_rep",
    "apply_lorentz", "wigner_rotation", "boost_sl2", "rotation_sl2",
    "cmf_momentum",
    # amplitudes
    "Amplitude", "amplitude_v", "amplitude_u", "amplitude_w", "vbar",
    # spin
    "PauliLubanskiMatrices", "SpinMatrices", "pauli_lubanski", "spin_matrices",
    "spin_covariant", "spin_su2_generators", "spin_projection_2x2",
    # states
    "StateKernel", "EnsembleState", "pseudoscalar_kernel", "vector_kernel",
    "general_kernel", "project_transverse", "ensemble", "sharp_ensemble",
    "kernel_norm_trace", "load_ensemble_csv", "ENSEMBLE_CSV_HEADER",
    # correlations
    "CorrelationResult", "direction", "correlate_oracle", "oracle_correlator",
    "correlation_pseudoscalar_sharp", "correlation_czachor_cmf",
    "correlation_czachor_ultra", "delta_c_pseudoscalar",
    "correlation_vector_cmf", "correlation_vector_ultra", "delta_c_vector",
    "correlation_triplet_nonrel", "chsh", "chsh_max",
    # verify
    "CheckResult", "RunReport", "run_all",
    # errors
    "EprDiracError", "OffShellError", "UnimodularError", "DirectionError",
    "NonTransverseError", "ZeroStateError", "EmptyEnsembleError",
    "ZeroNormError", "MomentumMismatchError", "UndefinedLimitError",
    "SingularConfigurationError",
]
