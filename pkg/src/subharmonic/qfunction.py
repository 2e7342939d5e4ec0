"""Gaussian Q function of the two-mode field and photon-number distributions.

The steady state is a zero-mean Gaussian, so its antinormally ordered
characteristic function is exp[-a(|z|^2+|w|^2) - b(zw + z*w*)] and the Q
function is the double Fourier transform

    Q(alpha1, alpha2) = (u^2 - v^2)/pi^2
                        * exp[-u(|alpha1|^2 + |alpha2|^2)
                              - v(alpha1 alpha2 + alpha1* alpha2*)],

with u = a/(a^2 - b^2) and v = b/(a^2 - b^2).  Joint photon-number
probabilities follow by differentiating Q against the evaluation point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import ParameterError
from .model import ModelParams, require_below_threshold

# Fall back to log-domain summation once factorials start to overflow.
_LOG_DOMAIN_ABOVE = 20


@dataclass(frozen=True)
class QGaussianParams:
    """Exponent coefficients of the characteristic function and Q function.

    ``a_coef`` and ``b_coef`` are the diagonal and cross coefficients of the
    antinormal characteristic function; ``u`` and ``v`` the corresponding Q
    exponent coefficients.  Normalizability requires u > |v| >= 0.
    """

    a_coef: float
    b_coef: float
    u: float
    v: float

    @property
    def norm_factor(self) -> float:
        """u^2 - v^2, the Gaussian normalization (also the vacuum weight P(0,0))."""
        return (self.u - self.v) * (self.u + self.v)


def q_params(p: ModelParams) -> QGaussianParams:
    """Gaussian exponent coefficients for below-threshold parameters.

    a = (kappa^2 - 2 eps^2)/(kappa^2 - 4 eps^2),  b = kappa eps/(kappa^2 - 4 eps^2),
    and u, v are a, b divided by a^2 - b^2.
    """
    require_below_threshold(p, "the Q-function parameter set")
    d = p.gap_product
    k2 = p.kappa * p.kappa
    e2 = p.epsilon * p.epsilon
    a = (k2 - 2.0 * e2) / d
    b = p.kappa * p.epsilon / d
    det = (a - b) * (a + b)
    return QGaussianParams(a_coef=a, b_coef=b, u=a / det, v=b / det)


def q_eval(q: QGaussianParams, alpha1, alpha2):
    """Evaluate the Q density at complex amplitudes (scalar or array alike).

    Strictly positive for finite arguments; integrates to 1 over both
    complex planes.
    """
    alpha1 = np.asarray(alpha1, dtype=complex)
    alpha2 = np.asarray(alpha2, dtype=complex)
    quad = q.u * (np.abs(alpha1) ** 2 + np.abs(alpha2) ** 2)
    cross = 2.0 * q.v * (alpha1 * alpha2).real
    value = q.norm_factor / math.pi**2 * np.exp(-(quad + cross))
    return value if value.ndim else float(value)


def joint_photon_distribution(q: QGaussianParams, m: int, n: int) -> float:
    """Probability of finding m photons in mode 1 and n photons in mode 2.

    P(m, n) = (u^2 - v^2) m! n! sum_k (1-u)^(m+n-2k) v^(2k)
              / [(m-k)! (n-k)! (k!)^2],   k = 0..min(m, n).

    All terms are nonnegative (1 - u = eps^2/(kappa^2 - eps^2) >= 0); for
    large m + n the sum is accumulated in the log domain to avoid factorial
    overflow.
    """
    if m < 0 or n < 0 or m != int(m) or n != int(n):
        raise ParameterError(f"photon counts must be nonnegative integers, got ({m}, {n})")
    m, n = int(m), int(n)
    one_minus_u = 1.0 - q.u
    v = q.v
    kmax = min(m, n)

    if m + n <= _LOG_DOMAIN_ABOVE:
        total = 0.0
        for k in range(kmax + 1):
            total += (
                one_minus_u ** (m + n - 2 * k)
                * v ** (2 * k)
                / (
                    math.factorial(m - k)
                    * math.factorial(n - k)
                    * math.factorial(k) ** 2
                )
            )
        return q.norm_factor * math.factorial(m) * math.factorial(n) * total

    # log-domain: log of each term, then a stable log-sum-exp
    log_1mu = math.log(one_minus_u) if one_minus_u > 0 else -math.inf
    log_v2 = 2.0 * math.log(v) if v > 0 else -math.inf
    logs = []
    for k in range(kmax + 1):
        lt = (m + n - 2 * k) * log_1mu + k * log_v2
        lt -= gammaln(m - k + 1) + gammaln(n - k + 1) + 2.0 * gammaln(k + 1)
        logs.append(lt)
    logs = np.asarray(logs)
    peak = logs.max()
    if peak == -math.inf:
        return q.norm_factor if (m == 0 and n == 0) else 0.0
    log_sum = peak + math.log(np.exp(logs - peak).sum())
    log_p = math.log(q.norm_factor) + gammaln(m + 1) + gammaln(n + 1) + log_sum
    return math.exp(log_p)


def diagonal_distribution(q: QGaussianParams, n: int) -> float:
    """Probability of equal counts: n pair photons in each mode.

    P(n, n) = (u^2 - v^2) sum_j (n!)^2 (1-u)^(2j) v^(2(n-j))
              / [(j!)^2 ((n-j)!)^2].
    """
    if n < 0 or n != int(n):
        raise ParameterError(f"photon count must be a nonnegative integer, got {n}")
    n = int(n)
    if 2 * n <= _LOG_DOMAIN_ABOVE:
        total = 0.0
        for j in range(n + 1):
            coeff = math.factorial(n) / (math.factorial(j) * math.factorial(n - j))
            total += (coeff * (1.0 - q.u) ** j * q.v ** (n - j)) ** 2
        return q.norm_factor * total
    return joint_photon_distribution(q, n, n)


def distribution_cutoff(q: QGaussianParams, tail: float = 1e-10) -> int:
    """Smallest per-mode count N whose tail mass estimate drops below ``tail``.

    The distribution decays geometrically with ratio close to
    ((1 - u) + v)^2 along the diagonal; the estimate uses that ratio with a
    safety of a few extra terms.
    """
    r = ((1.0 - q.u) + q.v) ** 2
    if r <= 0:
        return 4
    n = math.log(tail * (1.0 - r)) / math.log(r)
    return max(4, math.ceil(n) + 4)


def distribution_table(q: QGaussianParams, cutoff: int | None = None, tail: float = 1e-10) -> np.ndarray:
    """P(m, n) on the square grid m, n <= cutoff (adaptive if not given)."""
    if cutoff is None:
        cutoff = distribution_cutoff(q, tail)
    table = np.empty((cutoff + 1, cutoff + 1))
    for m in range(cutoff + 1):
        for n in range(m, cutoff + 1):
            pmn = joint_photon_distribution(q, m, n)
            table[m, n] = pmn
            table[n, m] = pmn
    return table
