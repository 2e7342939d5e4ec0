"""Quadrature variances, squeezing fractions, and the fluctuation spectrum.

Quadratures of the superposed field a = a1 + a2 (commutator [a, a'] = 2):
a+ = a' + a and a- = i(a' - a).  The two-mode vacuum variance is 2 for
both; squeezing fractions are quoted relative to that level.

The plus-quadrature fluctuation spectrum is a Lorentzian of half-width
eta+ = kappa/2 + epsilon whose total weight is the global variance; the
minus quadrature decays with eta- = kappa/2 - epsilon and its variance
diverges at threshold kappa = 2*epsilon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, ThresholdError
from .model import ModelParams, Regime, validate_regime

#: Two-mode vacuum variance of either quadrature, the squeezing reference.
VACUUM_LEVEL = 2.0


@dataclass(frozen=True)
class SqueezingReport:
    """Cavity and output quadrature variances and squeezing fractions.

    ``var_minus`` is +inf exactly at threshold (the minus quadrature
    diverges there).  The output quantities require kappa <= 1 (kappa acts
    as the mirror transmissivity for the output coupling) and are None
    otherwise.  ``margin`` is the threshold margin kappa - 2*epsilon.
    """

    var_plus: float
    var_minus: float
    s_global: float
    var_plus_out: float | None
    var_minus_out: float | None
    s_out: float | None
    margin: float
    vacuum_level: float = VACUUM_LEVEL


@dataclass(frozen=True)
class SpectrumWindow:
    """A frequency window [omega0 - half_width, omega0 + half_width].

    ``eta_plus`` and ``eta_minus`` are the Lorentzian half-widths
    kappa/2 +- epsilon of the two quadrature spectra.
    """

    omega0: float
    half_width: float
    eta_plus: float
    eta_minus: float


def eta_rates(p: ModelParams) -> tuple[float, float]:
    """Quadrature decay rates (kappa/2 + epsilon, kappa/2 - epsilon)."""
    return 0.5 * p.kappa + p.epsilon, 0.5 * p.kappa - p.epsilon


def quadrature_variances(p: ModelParams) -> tuple[float, float]:
    """Cavity variances (plus, minus) of the superposed field.

    var_plus = 2 - 4 eps/(kappa + 2 eps) is finite everywhere; var_minus =
    2 + 4 eps/(kappa - 2 eps) is returned as +inf at threshold and raises
    ThresholdError above it, where the stationary state does not exist.
    """
    var_plus = 2.0 - 4.0 * p.epsilon / (p.kappa + 2.0 * p.epsilon)
    info = validate_regime(p)
    if info.regime is Regime.ABOVE_THRESHOLD:
        raise ThresholdError(
            "quadrature variances are undefined above threshold; "
            f"margin kappa - 2*epsilon = {info.margin:.6g}",
            margin=info.margin,
        )
    if info.regime is Regime.AT_THRESHOLD:
        return var_plus, math.inf
    return var_plus, 2.0 + 4.0 * p.epsilon / info.margin


def global_squeezing(p: ModelParams) -> float:
    """Squeezing fraction of the plus quadrature relative to vacuum.

    S = 2 eps/(kappa + 2 eps), reaching 1/2 at threshold.
    """
    return 2.0 * p.epsilon / (p.kappa + 2.0 * p.epsilon)


def _require_transmissivity(p: ModelParams) -> None:
    # For output coupling, kappa doubles as the mirror transmissivity.
    if not (0.0 < p.kappa <= 1.0):
        raise ParameterError(
            "output quantities treat kappa as a transmissivity and need "
            f"kappa in (0, 1]; got kappa={p.kappa}"
        )


def output_variances(p: ModelParams) -> tuple[float, float]:
    """Variances of the transmitted field mixed with the reflected vacuum.

    var_plus_out = 2 - 4 kappa eps/(kappa + 2 eps) and var_minus_out =
    2 + 4 kappa eps/(kappa + 2 eps).  Only defined for kappa in (0, 1].
    """
    _require_transmissivity(p)
    shift = 4.0 * p.kappa * p.epsilon / (p.kappa + 2.0 * p.epsilon)
    return 2.0 - shift, 2.0 + shift


def output_variance_minus_alternate(p: ModelParams) -> float:
    """Output minus variance with the cavity-like denominator kappa - 2 eps.

    Comparison helper only: mirrors the divergent cavity minus quadrature
    through the output coupling instead of the symmetric form used by
    output_variances.  Diverges at threshold.
    """
    _require_transmissivity(p)
    info = validate_regime(p)
    if info.regime is Regime.AT_THRESHOLD:
        return math.inf
    if info.regime is Regime.ABOVE_THRESHOLD:
        raise ThresholdError(
            "alternate output minus variance undefined above threshold",
            margin=info.margin,
        )
    return 2.0 + 4.0 * p.kappa * p.epsilon / info.margin


def output_squeezing(p: ModelParams) -> float:
    """Output squeezing fraction S_out = 2 kappa eps/(kappa + 2 eps)."""
    _require_transmissivity(p)
    return 2.0 * p.kappa * p.epsilon / (p.kappa + 2.0 * p.epsilon)


def squeezing_report(p: ModelParams) -> SqueezingReport:
    """Assemble cavity and (when kappa <= 1) output squeezing quantities."""
    var_plus, var_minus = quadrature_variances(p)
    if p.kappa <= 1.0:
        vpo, vmo = output_variances(p)
        s_out = output_squeezing(p)
    else:
        vpo = vmo = s_out = None
    return SqueezingReport(
        var_plus=var_plus,
        var_minus=var_minus,
        s_global=global_squeezing(p),
        var_plus_out=vpo,
        var_minus_out=vmo,
        s_out=s_out,
        margin=p.margin,
    )


def spectrum_plus(p: ModelParams, omega_minus_omega0):
    """Spectral density of plus-quadrature fluctuations at a frequency offset.

    A Lorentzian of half-width eta+ = kappa/2 + epsilon normalized so that
    its integral over all frequencies is the global plus variance
    2 kappa/(kappa + 2 eps).  Accepts scalar or array offsets.
    """
    offset = np.asarray(omega_minus_omega0, dtype=float)
    eta = 0.5 * p.kappa + p.epsilon
    weight = 2.0 * p.kappa / (p.kappa + 2.0 * p.epsilon)
    value = weight * (eta / math.pi) / (offset * offset + eta * eta)
    return value if value.ndim else float(value)


def local_variance_plus(p: ModelParams, half_width: float) -> float:
    """Plus-quadrature variance accumulated in a window of +-half_width.

    (2/pi) arctan(half_width/eta+) times the global plus variance; grows
    monotonically from 0 to the global value as the window opens.
    """
    if half_width < 0:
        raise ParameterError(f"half_width must be >= 0, got {half_width}")
    eta = 0.5 * p.kappa + p.epsilon
    weight = 2.0 * p.kappa / (p.kappa + 2.0 * p.epsilon)
    return (2.0 / math.pi) * math.atan(half_width / eta) * weight


def local_squeezing(p: ModelParams, half_width: float) -> float:
    """Squeezing fraction within a frequency window of +-half_width.

    Ratio of windowed plus variance to the windowed vacuum variance,
    subtracted from one:

        S = 1 - [arctan(hw/eta+) / (2 arctan(2 hw/kappa))]
              * 2 kappa/(kappa + 2 eps).

    The window must be nonempty (half_width > 0): both windowed variances
    vanish with the window, leaving an indeterminate ratio at zero.
    """
    if half_width <= 0:
        raise ParameterError(
            f"half_width must be > 0 for the windowed ratio, got {half_width}"
        )
    eta = 0.5 * p.kappa + p.epsilon
    weight = 2.0 * p.kappa / (p.kappa + 2.0 * p.epsilon)
    ratio = math.atan(half_width / eta) / (2.0 * math.atan(2.0 * half_width / p.kappa))
    return 1.0 - ratio * weight


def spectrum_window(p: ModelParams, omega0: float, half_width: float) -> SpectrumWindow:
    """Describe a measurement window around the central frequency."""
    if half_width < 0:
        raise ParameterError(f"half_width must be >= 0, got {half_width}")
    eta_p, eta_m = eta_rates(p)
    return SpectrumWindow(omega0=omega0, half_width=half_width, eta_plus=eta_p, eta_minus=eta_m)
