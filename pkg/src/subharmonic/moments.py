"""Closed-form steady-state moments and photon statistics.

Below threshold the cavity reaches a zero-mean Gaussian steady state whose
only nonzero second moments are the occupations <a1'a1> = <a2'a2> and the
pair correlation <a1 a2>.  The photon statistics of the superposed two-mode
field a = a1 + a2 follow from these by Gaussian factorization.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .errors import ParameterError
from .model import ModelParams, require_below_threshold


@dataclass(frozen=True)
class SteadyMoments:
    """Nonzero steady-state second moments of the two cavity modes.

    ``n1`` and ``n2`` are the mean photon numbers of the individual modes
    (equal by symmetry), ``cross`` is the real pair correlation <a1 a2>,
    negative below threshold.  First moments <a1>, <a2> vanish, as do
    <a1^2>, <a2^2> and <a1'a2>; the flags record that.
    """

    n1: float
    n2: float
    cross: float
    first_moments_zero: bool = True
    single_mode_squares_zero: bool = True


@dataclass(frozen=True)
class PhotonStatistics:
    """Mean and variance of the photon number of the superposed field."""

    mean: float
    variance: float

    @property
    def fano(self) -> float:
        """Variance-to-mean ratio; > 1 (super-Poissonian) for any pumping.

        Undefined (NaN) for the unpumped vacuum, where mean and variance
        both vanish.
        """
        return self.variance / self.mean if self.mean > 0 else math.nan


def steady_moments(p: ModelParams) -> SteadyMoments:
    """Steady-state occupations and pair correlation of the cavity modes.

    n1 = n2 = 2 eps^2 / (kappa^2 - 4 eps^2),
    cross = -kappa eps / (kappa^2 - 4 eps^2).

    Raises ThresholdError at or above threshold, where the denominator
    kappa^2 - 4 eps^2 is no longer positive.
    """
    require_below_threshold(p, "the steady-state moment set")
    d = p.gap_product
    n = 2.0 * p.epsilon * p.epsilon / d
    cross = -p.kappa * p.epsilon / d + 0.0  # +0.0 normalizes -0.0 when unpumped
    return SteadyMoments(n1=n, n2=n, cross=cross)


def mean_photon_number(p: ModelParams) -> float:
    """Mean photon number n1 + n2 = 4 eps^2 / (kappa^2 - 4 eps^2)."""
    require_below_threshold(p, "the mean photon number")
    return 4.0 * p.epsilon * p.epsilon / p.gap_product


def photon_number_variance(p: ModelParams) -> float:
    """Photon-number variance of the superposed two-mode field.

    Equals 2*nbar + nbar^2 + 4*cross^2 by Gaussian factorization; evaluated
    here directly in terms of kappa and epsilon.
    """
    require_below_threshold(p, "the photon-number variance")
    e2 = p.epsilon * p.epsilon
    d = p.gap_product
    return 8.0 * e2 / d + 16.0 * e2 * e2 / (d * d) + 4.0 * p.kappa * p.kappa * e2 / (d * d)


def photon_statistics(p: ModelParams) -> PhotonStatistics:
    """Bundle mean and variance of the two-mode photon number."""
    return PhotonStatistics(mean=mean_photon_number(p), variance=photon_number_variance(p))


def degenerate_mean_photon_number(p: ModelParams) -> float:
    """Mean photon number when the photon pair is a single degenerate mode.

    This is the value obtained by modelling the pair with second-order
    operators (a^2, a'^2) of one mode instead of two first-order modes:
    2 eps^2 / (kappa^2 - 4 eps^2), exactly half of mean_photon_number.
    """
    require_below_threshold(p, "the degenerate-mode mean photon number")
    return 2.0 * p.epsilon * p.epsilon / p.gap_product


def pump_mean_photon_number(p: ModelParams) -> float:
    """Steady-state mean photon number of the pump mode.

    4 mu^2 / kappa^2 minus the occupation of one light mode (the photons
    converted into a pair).  Requires the pump description (mu, g).  A
    negative value signals parameters outside the weak-depletion picture;
    it is returned as computed with a RuntimeWarning.
    """
    if p.mu is None or p.g is None:
        raise ParameterError("pump_mean_photon_number needs the pump pair (mu, g)")
    require_below_threshold(p, "the pump mean photon number")
    bare = 4.0 * p.mu * p.mu / (p.kappa * p.kappa)
    value = bare - 2.0 * p.epsilon * p.epsilon / p.gap_product
    if value < 0:
        warnings.warn(
            "pump depletion exceeds the bare pump occupation; the classical "
            "pump treatment is unreliable for these parameters",
            RuntimeWarning,
            stacklevel=2,
        )
    return value
