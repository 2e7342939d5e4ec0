#!/usr/bin/env python3
"""Frequency-windowed (local) squeezing at threshold.

The squeezing seen by a detector that only accepts frequencies within
+-half_width of the carrier exceeds the global value, because the
squeezed-quadrature noise is spread over a wider Lorentzian than the
vacuum reference.  At kappa = 0.8, epsilon = 0.4 the narrowest plotted
window (half-width 0.05) reaches 74.9% squeezing, relaxing to the global
50% as the window opens.  Writes the curve as CSV (the same data as
`subharmonic sweep local-squeezing --kappa 0.8 --epsilon 0.4`) and a PNG
when matplotlib is available.
"""

from pathlib import Path

import numpy as np

from subharmonic import ModelParams, global_squeezing, local_squeezing

OUT = Path(__file__).resolve().parent / "output"


def main():
    OUT.mkdir(exist_ok=True)
    p = ModelParams(kappa=0.8, epsilon=0.4)
    widths = np.geomspace(0.05, 10.0, 200)
    values = np.array([local_squeezing(p, w) for w in widths])
    s_global = global_squeezing(p)

    print(f"kappa={p.kappa}, epsilon={p.epsilon} (threshold)")
    print(f"  narrowest window (0.05): S = {values[0]:.6f}   <- the 74.9% headline")
    print(f"  widest window (10):      S = {values[-1]:.6f}")
    print(f"  global squeezing:        S = {s_global:.6f}")

    rows = np.column_stack([widths, values, np.full_like(widths, s_global)])
    np.savetxt(OUT / "local_squeezing.csv", rows, delimiter=",",
               header="half_width,s_local,s_global_reference", comments="")
    print(f"wrote {OUT / 'local_squeezing.csv'}")

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not available; skipping the plot")
        return
    fig, ax = plt.subplots(figsize=(5.2, 3.8))
    ax.semilogx(widths, values, label="windowed squeezing")
    ax.axhline(s_global, ls="--", color="gray", label="global value")
    ax.set_xlabel("window half-width")
    ax.set_ylabel("squeezing fraction")
    ax.set_ylim(0.45, 0.80)
    ax.legend()
    fig.tight_layout()
    fig.savefig(OUT / "local_squeezing.png", dpi=150)
    print(f"wrote {OUT / 'local_squeezing.png'}")


if __name__ == "__main__":
    main()
