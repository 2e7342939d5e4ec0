"""Physical parameters of the driven two-mode cavity and regime checks.

The model is fully specified by the cavity damping rate ``kappa`` (equal for
both light modes) and the effective pump amplitude ``epsilon``.  When the
pump is described microscopically, ``epsilon`` is derived from the coherent
drive amplitude ``mu`` and the parametric coupling ``g`` via the classical
steady-state pump amplitude:  epsilon = 2*mu*g/kappa.

Everything downstream scales with the ratio epsilon/kappa; the threshold at
kappa = 2*epsilon separates the regime with a stationary state (below) from
pump strengths where the linearized dynamics diverge (above).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import ParameterError, ThresholdError

#: Relative tolerance used to call kappa == 2*epsilon "at threshold".
THRESHOLD_RTOL = 1e-12


class Regime(enum.Enum):
    BELOW_THRESHOLD = "below_threshold"
    AT_THRESHOLD = "at_threshold"
    ABOVE_THRESHOLD = "above_threshold"


@dataclass(frozen=True)
class RegimeInfo:
    """Classification of a parameter set plus the margin kappa - 2*epsilon."""

    regime: Regime
    margin: float

    @property
    def is_below(self) -> bool:
        return self.regime is Regime.BELOW_THRESHOLD


def epsilon_from_pump(mu: float, g: float, kappa: float) -> float:
    """Effective pump amplitude 2*mu*g/kappa of the classically driven pump.

    ``mu`` is the coherent drive amplitude, ``g`` the parametric coupling,
    ``kappa`` the cavity damping rate.  All three carry inverse-time units;
    so does the result.
    """
    if not (math.isfinite(kappa) and kappa > 0):
        raise ParameterError(f"kappa must be positive and finite, got {kappa}")
    if mu < 0 or g < 0 or not (math.isfinite(mu) and math.isfinite(g)):
        raise ParameterError(f"mu and g must be finite and >= 0, got mu={mu}, g={g}")
    return 2.0 * mu * g / kappa


@dataclass(frozen=True)
class ModelParams:
    """Immutable parameter set: damping rate and effective pump amplitude.

    Construct either with ``epsilon`` directly or from the microscopic pump
    description via :meth:`from_pump` (or by passing both ``mu`` and ``g``,
    in which case ``epsilon`` is derived).  Passing ``epsilon`` together
    with (mu, g) is allowed only if the values are consistent.
    """

    kappa: float
    epsilon: float = None  # type: ignore[assignment]  # derived in __post_init__ if pump given
    mu: float | None = None
    g: float | None = None

    def __post_init__(self):
        if not (math.isfinite(self.kappa) and self.kappa > 0):
            raise ParameterError(f"kappa must be positive and finite, got {self.kappa}")
        if (self.mu is None) != (self.g is None):
            raise ParameterError("mu and g must be given together")
        if self.mu is not None:
            derived = epsilon_from_pump(self.mu, self.g, self.kappa)
            if self.epsilon is None:
                object.__setattr__(self, "epsilon", derived)
            elif not math.isclose(self.epsilon, derived, rel_tol=1e-12, abs_tol=0.0):
                raise ParameterError(
                    f"epsilon={self.epsilon} inconsistent with 2*mu*g/kappa={derived}"
                )
        if self.epsilon is None:
            raise ParameterError("either epsilon or the pump pair (mu, g) is required")
        if not (math.isfinite(self.epsilon) and self.epsilon >= 0):
            raise ParameterError(f"epsilon must be finite and >= 0, got {self.epsilon}")

    @classmethod
    def from_pump(cls, kappa: float, mu: float, g: float) -> "ModelParams":
        """Build parameters from the drive amplitude and coupling."""
        return cls(kappa=kappa, mu=mu, g=g)

    @property
    def margin(self) -> float:
        """Threshold margin kappa - 2*epsilon, in the units of kappa."""
        return self.kappa - 2.0 * self.epsilon

    @property
    def gap_product(self) -> float:
        """kappa**2 - 4*epsilon**2 evaluated as (kappa - 2 eps)(kappa + 2 eps).

        The factored form avoids cancellation as the margin shrinks.
        """
        return self.margin * (self.kappa + 2.0 * self.epsilon)


def validate_regime(p: ModelParams, rtol: float = THRESHOLD_RTOL) -> RegimeInfo:
    """Classify parameters as below, at, or above the oscillation threshold.

    Equality kappa == 2*epsilon is decided within the relative tolerance
    ``rtol`` (scaled by kappa).  This never raises; it only classifies.
    """
    margin = p.margin
    if abs(margin) <= rtol * p.kappa:
        return RegimeInfo(Regime.AT_THRESHOLD, margin)
    if margin > 0:
        return RegimeInfo(Regime.BELOW_THRESHOLD, margin)
    return RegimeInfo(Regime.ABOVE_THRESHOLD, margin)


def require_below_threshold(p: ModelParams, what: str = "this quantity") -> None:
    """Raise ThresholdError unless the parameters are strictly below threshold."""
    info = validate_regime(p)
    if not info.is_below:
        raise ThresholdError(
            f"{what} is only defined below threshold (kappa > 2*epsilon); "
            f"margin kappa - 2*epsilon = {info.margin:.6g}",
            margin=info.margin,
        )
