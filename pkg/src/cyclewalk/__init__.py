"""Coined quantum walks on N-cycles and their coin thermodynamics."""

from .errors import (
    CycleWalkError,
    DegenerateSpectrumError,
    InvalidDensityError,
    NonThermalizingError,
    ParameterError,
    UndefinedAverageError,
)
from .markov import (
    MarkovState,
    markov_beta,
    markov_solution,
    markov_step,
    markov_thermalization_time,
)
from .spectral import (
    SpectralDecomposition,
    amplitudes_at,
    amplitudes_trajectory,
    decompose,
    fourier_coefficients,
    inverse_fourier,
)
from .thermo import (
    CoinDensity,
    ThermoState,
    asymptotic_density,
    asymptotic_density_from_initial_modes,
    asymptotic_density_localized,
    averaged_density_closed,
    averaged_density_numeric,
    averaged_trajectory_closed,
    chi_isotherm,
    chi_of_density,
    chi_reference,
    coin_density,
    decompose_localized,
    entanglement_entropy,
    f_g_h,
    hadamard_f_closed,
    temperature_from_chi,
    transient_temperature,
)
from .times import ConvergenceReport, density_seminorm, mixing_time, thermalization_time
from .walk import WalkParams, WalkState, evolve, localized_initial_state, step

__version__ = "0.1.0"

__all__ = [
    "CycleWalkError",
    "ParameterError",
    "DegenerateSpectrumError",
    "UndefinedAverageError",
    "InvalidDensityError",
    "NonThermalizingError",
    "WalkParams",
    "WalkState",
    "localized_initial_state",
    "step",
    "evolve",
    "SpectralDecomposition",
    "fourier_coefficients",
    "inverse_fourier",
    "decompose",
    "amplitudes_at",
    "amplitudes_trajectory",
    "CoinDensity",
    "ThermoState",
    "coin_density",
    "entanglement_entropy",
    "averaged_density_numeric",
    "averaged_density_closed",
    "averaged_trajectory_closed",
    "asymptotic_density",
    "asymptotic_density_from_initial_modes",
    "asymptotic_density_localized",
    "f_g_h",
    "hadamard_f_closed",
    "chi_of_density",
    "chi_isotherm",
    "chi_reference",
    "temperature_from_chi",
    "transient_temperature",
    "decompose_localized",
    "ConvergenceReport",
    "density_seminorm",
    "mixing_time",
    "thermalization_time",
    "MarkovState",
    "markov_step",
    "markov_solution",
    "markov_beta",
    "markov_thermalization_time",
    "__version__",
]
