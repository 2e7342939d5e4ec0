"""Statistics and squeezing of two-mode cavity subharmonic light.

Closed-form steady-state moments, photon statistics, the Gaussian Q
function with its photon-number distributions, and global/local quadrature
squeezing of the light generated by a driven cavity below the oscillation
threshold, together with brute-force oracles (moment-ODE integration,
truncated Fock-space Lindblad steady states, quadrature, Monte Carlo
sampling) that verify every closed form numerically.
"""

from .errors import ConvergenceError, ParameterError, ThresholdError
from .model import (
    ModelParams,
    Regime,
    RegimeInfo,
    epsilon_from_pump,
    require_below_threshold,
    validate_regime,
)
from .moments import (
    PhotonStatistics,
    SteadyMoments,
    degenerate_mean_photon_number,
    mean_photon_number,
    photon_number_variance,
    photon_statistics,
    pump_mean_photon_number,
    steady_moments,
)
from .qfunction import (
    QGaussianParams,
    diagonal_distribution,
    distribution_cutoff,
    distribution_table,
    joint_photon_distribution,
    q_eval,
    q_params,
)
from .squeezing import (
    VACUUM_LEVEL,
    SpectrumWindow,
    SqueezingReport,
    global_squeezing,
    local_squeezing,
    local_variance_plus,
    output_squeezing,
    output_variance_minus_alternate,
    output_variances,
    quadrature_variances,
    spectrum_plus,
    spectrum_window,
    squeezing_report,
)

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "ModelParams",
    "ParameterError",
    "PhotonStatistics",
    "QGaussianParams",
    "Regime",
    "RegimeInfo",
    "SpectrumWindow",
    "SqueezingReport",
    "SteadyMoments",
    "ThresholdError",
    "VACUUM_LEVEL",
    "degenerate_mean_photon_number",
    "diagonal_distribution",
    "distribution_cutoff",
    "distribution_table",
    "epsilon_from_pump",
    "global_squeezing",
    "joint_photon_distribution",
    "local_squeezing",
    "local_variance_plus",
    "mean_photon_number",
    "output_squeezing",
    "output_variance_minus_alternate",
    "output_variances",
    "photon_number_variance",
    "photon_statistics",
    "pump_mean_photon_number",
    "q_eval",
    "q_params",
    "quadrature_variances",
    "require_below_threshold",
    "spectrum_plus",
    "spectrum_window",
    "squeezing_report",
    "steady_moments",
    "validate_regime",
]
