"""Quantum-correlation toolkit for a two-qubit Bloch-diagonal state family.

Computes quantum mutual information, classical correlation and quantum
discord both by deterministic optimization over von Neumann measurements
and through closed forms for four parameter families, and simulates
discord dynamics under the phase-damping channel.
"""

from .channels import (
    KrausPair,
    PhaseDamping,
    apply_kraus,
    damp_bloch,
    damped_discord,
    damped_mutual_information,
    gamma_sweep,
    kraus_pair,
    planar_damped_gap,
    werner_damped_gap,
    werner_damped_gap_dgamma,
)
from .density import (
    BlochParams,
    Spectrum,
    bloch_vector,
    build_state,
    check_density_matrix,
    entropic_h,
    extract_bloch,
    hermitian_eigen,
    partial_trace,
    qubit_state,
    von_neumann_entropy,
)
from .discord import (
    METHOD_AXIAL_FORMULA,
    METHOD_AXIAL_ZERO,
    METHOD_NUMERIC,
    METHOD_R0_ISOTROPIC,
    METHOD_S0_ISOTROPIC,
    METHOD_S0_ISOTROPIC_C_EQ_R,
    METHOD_S0_PLANAR,
    METHOD_WERNER,
    DiscordReport,
    ThetaInterval,
    classical_correlation_numeric,
    discord_auto,
    discord_axial,
    discord_numeric,
    discord_r0_isotropic,
    discord_s0_isotropic,
    discord_s0_isotropic_c_eq_r,
    discord_s0_planar,
    maximize_correlation_objective,
    mutual_information,
    mutual_information_expanded,
    reduced_correlation_objective,
    theta_range,
    werner_discord,
)
from .errors import (
    ConvergenceError,
    DegenerateBranchError,
    DiscordKitError,
    DomainError,
    FamilyError,
    NormError,
    OutOfFamilyError,
    PhysicalityError,
    RangeError,
)
from .measurement import (
    Ensemble,
    UnitQuaternion,
    axis_from_su2,
    conditional_entropy,
    correlation_objective,
    damped_correlation_objective,
    post_measurement_ensemble,
)
from .sphereopt import (
    OptResult,
    SphereOptConfig,
    fibonacci_grid,
    maximize_on_sphere,
)

__version__ = "0.1.0"

__all__ = [
    "BlochParams",
    "ConvergenceError",
    "DegenerateBranchError",
    "DiscordKitError",
    "DiscordReport",
    "DomainError",
    "Ensemble",
    "FamilyError",
    "KrausPair",
    "METHOD_AXIAL_FORMULA",
    "METHOD_AXIAL_ZERO",
    "METHOD_NUMERIC",
    "METHOD_R0_ISOTROPIC",
    "METHOD_S0_ISOTROPIC",
    "METHOD_S0_ISOTROPIC_C_EQ_R",
    "METHOD_S0_PLANAR",
    "METHOD_WERNER",
    "NormError",
    "OptResult",
    "OutOfFamilyError",
    "PhaseDamping",
    "PhysicalityError",
    "RangeError",
    "Spectrum",
    "SphereOptConfig",
    "ThetaInterval",
    "UnitQuaternion",
    "apply_kraus",
    "axis_from_su2",
    "bloch_vector",
    "build_state",
    "check_density_matrix",
    "classical_correlation_numeric",
    "conditional_entropy",
    "correlation_objective",
    "damp_bloch",
    "damped_correlation_objective",
    "damped_discord",
    "damped_mutual_information",
    "discord_auto",
    "discord_axial",
    "discord_numeric",
    "discord_r0_isotropic",
    "discord_s0_isotropic",
    "discord_s0_isotropic_c_eq_r",
    "discord_s0_planar",
    "entropic_h",
    "extract_bloch",
    "fibonacci_grid",
    "gamma_sweep",
    "hermitian_eigen",
    "kraus_pair",
    "maximize_correlation_objective",
    "maximize_on_sphere",
    "mutual_information",
    "mutual_information_expanded",
    "partial_trace",
    "planar_damped_gap",
    "post_measurement_ensemble",
    "qubit_state",
    "reduced_correlation_objective",
    "theta_range",
    "von_neumann_entropy",
    "werner_damped_gap",
    "werner_damped_gap_dgamma",
    "werner_discord",
]
