#!/usr/bin/env python3
"""Quadrature squeezing from weak pumping up to threshold.

Sweeps the pump ratio and reports the cavity and output quadrature
variances relative to the two-mode vacuum level of 2: the plus quadrature
drops to half the vacuum noise at threshold (50% squeezing) while the
minus quadrature diverges, with their product pinned to the uncertainty
bound 4 kappa^2/(kappa^2 - 4 eps^2).  For the output field at kappa = 0.8
the best squeezing is 40%.  Also evaluates the Lorentzian fluctuation
spectrum whose total weight is the plus variance.
"""

from pathlib import Path

import numpy as np

from subharmonic import (
    ModelParams,
    global_squeezing,
    output_squeezing,
    quadrature_variances,
    spectrum_plus,
)

OUT = Path(__file__).resolve().parent / "output"


def main():
    OUT.mkdir(exist_ok=True)
    kappa = 0.8
    print(f"kappa = {kappa} (also the output-mirror transmissivity)")
    print(f"{'eps/kappa':>9} {'var+':>8} {'var-':>10} {'S':>8} {'S_out':>8} {'var+ var-':>10}")
    rows = []
    for ratio in (0.0, 0.1, 0.2, 0.3, 0.4, 0.45, 0.4999):
        p = ModelParams(kappa=kappa, epsilon=ratio * kappa)
        var_plus, var_minus = quadrature_variances(p)
        s = global_squeezing(p)
        s_out = output_squeezing(p)
        print(f"{ratio:9.4f} {var_plus:8.4f} {var_minus:10.3f} {s:8.4f} "
              f"{s_out:8.4f} {var_plus * var_minus:10.4f}")
        rows.append((ratio, var_plus, var_minus, s, s_out))
    np.savetxt(OUT / "squeezing_vs_pump.csv", np.array(rows), delimiter=",",
               header="ratio,var_plus,var_minus,s_global,s_out", comments="")

    p = ModelParams(kappa=kappa, epsilon=0.4 * kappa)
    offsets = np.linspace(-4.0, 4.0, 401)
    density = spectrum_plus(p, offsets)
    eta = 0.5 * p.kappa + p.epsilon
    print(f"\nspectrum at eps/kappa=0.4: half-width eta+ = {eta}")
    print(f"  peak density {density.max():.6f}, weight (trapezoid over +-4) "
          f"{np.trapezoid(density, offsets):.6f} of var+ = {quadrature_variances(p)[0]:.6f}")
    np.savetxt(OUT / "spectrum.csv", np.column_stack([offsets, density]),
               delimiter=",", header="offset,density", comments="")
    print(f"wrote {OUT / 'squeezing_vs_pump.csv'} and {OUT / 'spectrum.csv'}")


if __name__ == "__main__":
    main()
