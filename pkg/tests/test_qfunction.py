import math
from fractions import Fraction

import numpy as np
import pytest

from subharmonic import (
    ModelParams,
    ParameterError,
    ThresholdError,
    diagonal_distribution,
    distribution_cutoff,
    distribution_table,
    joint_photon_distribution,
    q_eval,
    q_params,
    steady_moments,
)

P_REF = ModelParams(kappa=1.0, epsilon=0.2)

# kappa=1, eps=1/5 exactly: a=23/21, b=5/21, u=23/24, v=5/24, u^2-v^2=7/8
U_REF = Fraction(23, 24)
V_REF = Fraction(5, 24)


def exact_joint(m: int, n: int, u: Fraction = U_REF, v: Fraction = V_REF) -> Fraction:
    """Independent rational-arithmetic evaluation of P(m, n)."""
    norm = u * u - v * v
    total = Fraction(0)
    for k in range(min(m, n) + 1):
        total += (
            (1 - u) ** (m + n - 2 * k) * v ** (2 * k)
            / (
                math.factorial(m - k)
                * math.factorial(n - k)
                * math.factorial(k) ** 2
            )
        )
    return norm * math.factorial(m) * math.factorial(n) * total


class TestQParams:
    def test_reference_point(self):
        q = q_params(P_REF)
        assert q.a_coef == pytest.approx(1.0952380952380953, rel=1e-12)
        assert q.b_coef == pytest.approx(0.23809523809523808, rel=1e-12)
        assert q.u == pytest.approx(float(U_REF), rel=1e-12)
        assert q.v == pytest.approx(float(V_REF), rel=1e-12)
        assert q.norm_factor == pytest.approx(0.875, rel=1e-12)

    def test_vacuum(self):
        q = q_params(ModelParams(kappa=1.0, epsilon=0.0))
        assert (q.a_coef, q.b_coef, q.u, q.v) == (1.0, 0.0, 1.0, 0.0)

    def test_closed_form_simplification(self):
        # u, v and u^2 - v^2 reduce to rational functions of kappa, eps
        rng = np.random.default_rng(8)
        for _ in range(30):
            kappa = rng.uniform(0.2, 3.0)
            eps = kappa * rng.uniform(0.0, 0.49)
            q = q_params(ModelParams(kappa=kappa, epsilon=eps))
            denom = kappa**2 - eps**2
            assert q.u == pytest.approx((kappa**2 - 2 * eps**2) / denom, rel=1e-12)
            assert q.v == pytest.approx(kappa * eps / denom, rel=1e-12)
            assert q.norm_factor == pytest.approx(
                (kappa**2 - 4 * eps**2) / denom, rel=1e-12
            )

    def test_invariants(self):
        rng = np.random.default_rng(9)
        for _ in range(30):
            kappa = rng.uniform(0.2, 3.0)
            eps = kappa * rng.uniform(0.0, 0.49)
            q = q_params(ModelParams(kappa=kappa, epsilon=eps))
            assert q.a_coef >= 1.0
            assert q.b_coef >= 0.0
            assert q.u > abs(q.v) >= 0.0
            det = (q.a_coef - q.b_coef) * (q.a_coef + q.b_coef)
            assert q.u == pytest.approx(q.a_coef / det, rel=1e-12)
            assert q.v == pytest.approx(q.b_coef / det, rel=1e-12)

    def test_regime_error(self):
        with pytest.raises(ThresholdError):
            q_params(ModelParams(kappa=0.8, epsilon=0.4))


class TestQEval:
    def test_origin(self):
        q = q_params(P_REF)
        assert q_eval(q, 0j, 0j) == pytest.approx(0.08865603568704555, rel=1e-12)

    def test_vacuum_peak(self):
        q = q_params(ModelParams(kappa=1.0, epsilon=0.0))
        assert q_eval(q, 0j, 0j) == pytest.approx(1.0 / math.pi**2, rel=1e-12)

    def test_real_point(self):
        q = q_params(P_REF)
        assert q_eval(q, 1.0 + 0j, 1.0 + 0j) == pytest.approx(
            0.008597150243629729, rel=1e-12
        )

    def test_positive_and_vectorized(self):
        q = q_params(P_REF)
        grid = np.linspace(-2, 2, 5)[:, None] + 1j * np.linspace(-2, 2, 5)[None, :]
        values = q_eval(q, grid, grid[::-1])
        assert values.shape == grid.shape
        assert (values > 0).all()

    def test_phase_dependence(self):
        # cross < 0 means anticorrelated amplitudes: Q is larger when the
        # two amplitudes have opposite signs, by exactly exp(4v) here
        q = q_params(P_REF)
        aligned = q_eval(q, 1.0 + 0j, 1.0 + 0j)
        opposed = q_eval(q, 1.0 + 0j, -1.0 + 0j)
        assert opposed > aligned
        assert opposed == pytest.approx(aligned * math.exp(4.0 * q.v), rel=1e-12)


class TestJointDistribution:
    def test_reference_values(self):
        q = q_params(P_REF)
        assert joint_photon_distribution(q, 0, 0) == pytest.approx(0.875, rel=1e-12)
        assert joint_photon_distribution(q, 1, 0) == pytest.approx(
            0.036458333333333336, rel=1e-12
        )
        assert joint_photon_distribution(q, 1, 1) == pytest.approx(
            0.039496527777777776, rel=1e-12
        )

    def test_vacuum(self):
        q = q_params(ModelParams(kappa=1.0, epsilon=0.0))
        assert joint_photon_distribution(q, 0, 0) == 1.0
        for m, n in ((1, 0), (0, 1), (2, 3)):
            assert joint_photon_distribution(q, m, n) == 0.0

    def test_against_exact_rationals(self):
        q = q_params(P_REF)
        for m in range(6):
            for n in range(6):
                assert joint_photon_distribution(q, m, n) == pytest.approx(
                    float(exact_joint(m, n)), rel=1e-12
                )

    def test_log_domain_path_against_exact_rationals(self):
        # m + n > 20 switches to log-gamma accumulation
        q = q_params(P_REF)
        for m, n in ((12, 10), (10, 12), (15, 15), (25, 3)):
            assert joint_photon_distribution(q, m, n) == pytest.approx(
                float(exact_joint(m, n)), rel=1e-10
            )

    def test_symmetry(self):
        q = q_params(ModelParams(kappa=1.0, epsilon=0.35))
        for m in range(8):
            for n in range(m):
                assert joint_photon_distribution(q, m, n) == pytest.approx(
                    joint_photon_distribution(q, n, m), rel=1e-14
                )

    def test_bounds(self):
        q = q_params(ModelParams(kappa=1.0, epsilon=0.4))
        for m in range(10):
            for n in range(10):
                pmn = joint_photon_distribution(q, m, n)
                assert 0.0 <= pmn <= 1.0

    def test_bad_counts(self):
        q = q_params(P_REF)
        with pytest.raises(ParameterError):
            joint_photon_distribution(q, -1, 0)
        with pytest.raises(ParameterError):
            joint_photon_distribution(q, 1.5, 0)


class TestDiagonalDistribution:
    def test_reference_value(self):
        q = q_params(P_REF)
        # (7/8)(v^2 + (1-u)^2) with u=23/24, v=5/24
        assert diagonal_distribution(q, 1) == pytest.approx(
            0.039496527777777776, rel=1e-12
        )

    def test_vacuum(self):
        q = q_params(ModelParams(kappa=1.0, epsilon=0.0))
        assert diagonal_distribution(q, 0) == 1.0

    def test_consistency_with_joint(self):
        q = q_params(ModelParams(kappa=1.0, epsilon=0.3))
        for n in range(12):
            assert diagonal_distribution(q, n) == pytest.approx(
                joint_photon_distribution(q, n, n), rel=1e-12
            )

    def test_bad_count(self):
        with pytest.raises(ParameterError):
            diagonal_distribution(q_params(P_REF), -2)


class TestNormalization:
    @pytest.mark.parametrize("ratio", [0.1, 0.2, 0.3, 0.4])
    def test_sums_to_one_at_adaptive_cutoff(self, ratio):
        q = q_params(ModelParams(kappa=1.0, epsilon=ratio))
        table = distribution_table(q)
        assert abs(1.0 - table.sum()) < 1e-8

    @pytest.mark.parametrize("ratio", [0.1, 0.2, 0.3, 0.4])
    def test_marginal_mean(self, ratio):
        p = ModelParams(kappa=1.0, epsilon=ratio)
        table = distribution_table(q_params(p))
        counts = np.arange(table.shape[0])
        marginal_mean = float((counts[:, None] * table).sum())
        assert marginal_mean == pytest.approx(steady_moments(p).n1, abs=1e-8)

    def test_cutoff_grows_with_pumping(self):
        weak = distribution_cutoff(q_params(ModelParams(kappa=1.0, epsilon=0.1)))
        strong = distribution_cutoff(q_params(ModelParams(kappa=1.0, epsilon=0.4)))
        assert strong > weak >= 4
