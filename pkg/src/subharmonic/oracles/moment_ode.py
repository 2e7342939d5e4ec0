"""Brute-force time integration of the coupled moment equations.

The master equation closes on the set {<a1>, <a2>, <a1'a1>, <a2'a2>,
<a1 a2>, <a1'a2'>}.  Integrating those equations to stationarity gives an
oracle for the closed-form steady state that never touches the closed
forms themselves.  The right-hand sides keep distinct damping rates
kappa1, kappa2 so the symmetric reduction kappa1 = kappa2 is itself
testable.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import solve_ivp

from ..errors import ConvergenceError
from ..model import ModelParams


@dataclass(frozen=True)
class MomentState:
    """First and second moments at time ``t``.

    ``c`` is <a1 a2> and ``c_dag`` is <a1'a2'>, integrated independently;
    ``hermiticity_defect`` records how far the trajectory drifted from
    c_dag == conj(c) and from real occupations, which should stay at
    integrator noise level.
    """

    m1: complex
    m2: complex
    n1: float
    n2: float
    c: complex
    c_dag: complex
    t: float
    hermiticity_defect: float = 0.0

    @classmethod
    def vacuum(cls) -> "MomentState":
        return cls(m1=0j, m2=0j, n1=0.0, n2=0.0, c=0j, c_dag=0j, t=0.0)


def _pack(m1, m2, n1, n2, c, cd):
    return np.array([
        m1.real, m1.imag, m2.real, m2.imag,
        n1.real, n1.imag, n2.real, n2.imag,
        c.real, c.imag, cd.real, cd.imag,
    ])


def _unpack(y):
    m1 = complex(y[0], y[1])
    m2 = complex(y[2], y[3])
    n1 = complex(y[4], y[5])
    n2 = complex(y[6], y[7])
    c = complex(y[8], y[9])
    cd = complex(y[10], y[11])
    return m1, m2, n1, n2, c, cd


def _rhs_factory(epsilon: float, kappa1: float, kappa2: float):
    ksum = 0.5 * (kappa1 + kappa2)

    def rhs(_t, y):
        m1, m2, n1, n2, c, cd = _unpack(y)
        dm1 = -0.5 * kappa1 * m1 - epsilon * m2.conjugate()
        dm2 = -0.5 * kappa2 * m2 - epsilon * m1.conjugate()
        dn1 = -kappa1 * n1 - epsilon * (c + cd)
        dn2 = -kappa2 * n2 - epsilon * (c + cd)
        dc = -ksum * c - epsilon * (n1 + n2 + 1.0)
        dcd = -ksum * cd - epsilon * (n1.conjugate() + n2.conjugate() + 1.0)
        return _pack(dm1, dm2, dn1, dn2, dc, dcd)

    return rhs


def integrate_moments(
    p: ModelParams,
    initial: MomentState | None = None,
    horizon: float | None = None,
    tol: float = 1e-10,
    kappa1: float | None = None,
    kappa2: float | None = None,
) -> MomentState:
    """Integrate the moment equations until the derivative norm vanishes.

    Stationarity is declared when ||dy/dt|| <= tol * max(1, ||y||).  Above
    threshold the linear system is unstable: growth beyond a norm bound is
    reported as a ConvergenceError, as is failure to settle within
    ``horizon`` (default 80 slow-rate e-folding times).

    Parameters
    ----------
    p : ModelParams
        Damping and pump amplitude.  ``kappa1``/``kappa2`` override the
        per-mode damping rates (both default to ``p.kappa``).
    initial : MomentState, optional
        Starting moments; vacuum if omitted.
    horizon : float, optional
        Maximum integration time.
    tol : float
        Relative stationarity tolerance on the derivative norm.
    """
    k1 = p.kappa if kappa1 is None else kappa1
    k2 = p.kappa if kappa2 is None else kappa2
    rhs = _rhs_factory(p.epsilon, k1, k2)
    state = initial if initial is not None else MomentState.vacuum()
    y = _pack(state.m1, state.m2, complex(state.n1), complex(state.n2), state.c, state.c_dag)

    kmin = min(k1, k2)
    # Slowest stable rate is kappa/2 - epsilon; fall back to kappa when pumped
    # near or past threshold so the horizon stays finite.
    slow = min(kmin, max(0.5 * kmin - p.epsilon, 0.05 * kmin))
    if horizon is None:
        horizon = 80.0 / slow
    chunk = 4.0 / kmin
    bound = 1e6 * max(1.0, np.linalg.norm(y))

    t = state.t
    t_end = t + horizon
    while True:
        dy = rhs(t, y)
        if np.linalg.norm(dy) <= tol * max(1.0, np.linalg.norm(y)):
            break
        if t >= t_end:
            raise ConvergenceError(
                f"moment integration did not reach steady state by t={t:.3g}; "
                f"derivative norm {np.linalg.norm(dy):.3e}"
            )
        sol = solve_ivp(
            rhs, (t, min(t + chunk, t_end)), y,
            method="DOP853", rtol=1e-12, atol=1e-14,
        )
        if not sol.success:
            raise ConvergenceError(f"ODE integrator failed: {sol.message}")
        t = sol.t[-1]
        y = sol.y[:, -1]
        if np.linalg.norm(y) > bound:
            raise ConvergenceError(
                "moment system is diverging (norm > 1e6); the parameters are "
                "at or above threshold, where no steady state exists"
            )

    m1, m2, n1, n2, c, cd = _unpack(y)
    defect = max(abs(n1.imag), abs(n2.imag), abs(cd - c.conjugate()))
    return MomentState(
        m1=m1, m2=m2, n1=n1.real, n2=n2.real, c=c, c_dag=cd, t=t,
        hermiticity_defect=defect,
    )


def first_moment_decay_rates(
    p: ModelParams,
    amplitude: complex = 1.0 + 1.0j,
    samples: int = 33,
) -> tuple[float, float]:
    """Measure the decay rates of the two first-moment quadratures.

    Seeds <a1> with ``amplitude`` (so <a> = <a1> + <a2> has both a real and
    an imaginary part), integrates the first-moment equations, and fits the
    log-slope of Re<a> and Im<a>, which decay at kappa/2 + epsilon and
    kappa/2 - epsilon respectively.  Returns (rate_plus, rate_minus).
    """
    if amplitude.real == 0.0 or amplitude.imag == 0.0:
        raise ValueError("amplitude needs nonzero real and imaginary parts to excite both quadratures")

    def rhs(_t, y):
        m1 = complex(y[0], y[1])
        m2 = complex(y[2], y[3])
        dm1 = -0.5 * p.kappa * m1 - p.epsilon * m2.conjugate()
        dm2 = -0.5 * p.kappa * m2 - p.epsilon * m1.conjugate()
        return [dm1.real, dm1.imag, dm2.real, dm2.imag]

    t_span = 4.0 / p.kappa
    t_eval = np.linspace(0.0, t_span, samples)
    sol = solve_ivp(
        rhs, (0.0, t_span), [amplitude.real, amplitude.imag, 0.0, 0.0],
        t_eval=t_eval, method="DOP853", rtol=1e-13, atol=1e-15,
    )
    if not sol.success:
        raise ConvergenceError(f"ODE integrator failed: {sol.message}")
    a_re = sol.y[0] + sol.y[2]
    a_im = sol.y[1] + sol.y[3]
    rate_plus = -np.polyfit(t_eval, np.log(np.abs(a_re)), 1)[0]
    rate_minus = -np.polyfit(t_eval, np.log(np.abs(a_im)), 1)[0]
    return float(rate_plus), float(rate_minus)
