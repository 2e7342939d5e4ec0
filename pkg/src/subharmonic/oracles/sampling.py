"""Monte Carlo sampling of the Gaussian Q density.

The Q function is a genuine probability density over the two complex
planes; sample averages of |alpha|^2 and alpha1*alpha2 estimate the
antinormally ordered moments <a a'> = n + 1 and <a1 a2>, giving a
statistics-level check on the closed-form moments that shares no code
with them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import ParameterError
from ..qfunction import QGaussianParams


@dataclass(frozen=True)
class SampleMoments:
    """Sample estimates with their standard errors."""

    count: int
    seed: int
    mean_abs1_sq: float
    mean_abs2_sq: float
    mean_cross: complex
    se_abs1_sq: float
    se_abs2_sq: float
    se_cross_re: float
    se_cross_im: float


def sample_q(q: QGaussianParams, count: int, seed: int) -> SampleMoments:
    """Draw ``count`` phase-space points from the Q density.

    The density factorizes over the real parts (x1, x2) and imaginary
    parts (y1, y2) of the amplitudes into two correlated bivariate
    Gaussians with inverse covariances 2*[[u, v], [v, u]] and
    2*[[u, -v], [-v, u]].  Reproducible for a fixed (seed, count).
    """
    if count < 1:
        raise ParameterError(f"count must be >= 1, got {count}")
    if not q.u > abs(q.v):
        raise ParameterError(
            f"Q density is not normalizable: requires u > |v|, got u={q.u}, v={q.v}"
        )
    det2 = 2.0 * q.norm_factor
    cov_x = np.array([[q.u, -q.v], [-q.v, q.u]]) / det2
    cov_y = np.array([[q.u, q.v], [q.v, q.u]]) / det2

    rng = np.random.default_rng(seed)
    xs = rng.multivariate_normal([0.0, 0.0], cov_x, size=count, method="cholesky")
    ys = rng.multivariate_normal([0.0, 0.0], cov_y, size=count, method="cholesky")
    alpha1 = xs[:, 0] + 1j * ys[:, 0]
    alpha2 = xs[:, 1] + 1j * ys[:, 1]

    abs1 = np.abs(alpha1) ** 2
    abs2 = np.abs(alpha2) ** 2
    cross = alpha1 * alpha2
    root = np.sqrt(count)
    return SampleMoments(
        count=count,
        seed=seed,
        mean_abs1_sq=float(abs1.mean()),
        mean_abs2_sq=float(abs2.mean()),
        mean_cross=complex(cross.mean()),
        se_abs1_sq=float(abs1.std(ddof=1) / root) if count > 1 else float("inf"),
        se_abs2_sq=float(abs2.std(ddof=1) / root) if count > 1 else float("inf"),
        se_cross_re=float(cross.real.std(ddof=1) / root) if count > 1 else float("inf"),
        se_cross_im=float(cross.imag.std(ddof=1) / root) if count > 1 else float("inf"),
    )
