"""Brute-force numerical oracles for the closed-form results."""

from .checks import (
    q_normalization_quadrature,
    run_verification,
    spectrum_sum_rule_check,
    window_consistency_check,
)
from .fock import FockSolution, fock_steady_state
from .moment_ode import MomentState, first_moment_decay_rates, integrate_moments
from .sampling import SampleMoments, sample_q

__all__ = [
    "FockSolution",
    "MomentState",
    "SampleMoments",
    "first_moment_decay_rates",
    "fock_steady_state",
    "integrate_moments",
    "q_normalization_quadrature",
    "run_verification",
    "sample_q",
    "spectrum_sum_rule_check",
    "window_consistency_check",
]
