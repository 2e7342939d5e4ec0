import numpy as np
import pytest

from subharmonic import (
    ModelParams,
    ParameterError,
    ThresholdError,
    degenerate_mean_photon_number,
    mean_photon_number,
    photon_number_variance,
    photon_statistics,
    pump_mean_photon_number,
    steady_moments,
)

# Frozen expectations at kappa=1, epsilon=1/5, from exact rational arithmetic:
# n1 = 2/21, cross = -5/21, nbar = 4/21, variance = 284/441.
N1_REF = 0.09523809523809523
CROSS_REF = -0.23809523809523808
NBAR_REF = 0.19047619047619047
VARIANCE_REF = 0.6439909297052154

P_REF = ModelParams(kappa=1.0, epsilon=0.2)


def random_below_threshold(count, seed, ratio_max=0.49):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        kappa = rng.uniform(0.2, 3.0)
        yield ModelParams(kappa=kappa, epsilon=kappa * rng.uniform(0.0, ratio_max))


class TestSteadyMoments:
    def test_reference_point(self):
        sm = steady_moments(P_REF)
        assert sm.n1 == pytest.approx(N1_REF, rel=1e-12)
        assert sm.n2 == sm.n1
        assert sm.cross == pytest.approx(CROSS_REF, rel=1e-12)
        assert sm.first_moments_zero and sm.single_mode_squares_zero

    def test_vacuum(self):
        sm = steady_moments(ModelParams(kappa=1.0, epsilon=0.0))
        assert sm.n1 == 0.0 and sm.n2 == 0.0 and sm.cross == 0.0

    def test_ratio_invariance(self):
        sm = steady_moments(ModelParams(kappa=2.0, epsilon=0.4))
        assert sm.n1 == pytest.approx(N1_REF, rel=1e-12)

    def test_cross_negative_below_threshold(self):
        for p in random_below_threshold(30, seed=11):
            if p.epsilon > 0:
                assert steady_moments(p).cross < 0

    @pytest.mark.parametrize("eps", [0.4, 0.5])
    def test_regime_error(self, eps):
        with pytest.raises(ThresholdError):
            steady_moments(ModelParams(kappa=0.8, epsilon=eps))


class TestPhotonStatistics:
    def test_mean_reference(self):
        assert mean_photon_number(P_REF) == pytest.approx(NBAR_REF, rel=1e-12)

    def test_mean_is_sum_of_occupations(self):
        for p in random_below_threshold(30, seed=2):
            sm = steady_moments(p)
            assert mean_photon_number(p) == pytest.approx(sm.n1 + sm.n2, rel=1e-13)

    def test_variance_reference(self):
        assert photon_number_variance(P_REF) == pytest.approx(VARIANCE_REF, rel=1e-12)

    def test_variance_vacuum(self):
        assert photon_number_variance(ModelParams(kappa=1.0, epsilon=0.0)) == 0.0

    def test_variance_reassembly_identity(self):
        # variance must equal 2*nbar + nbar^2 + 4*cross^2 assembled from the
        # other operations
        for p in random_below_threshold(50, seed=3):
            nbar = mean_photon_number(p)
            cross = steady_moments(p).cross
            assembled = 2.0 * nbar + nbar * nbar + 4.0 * cross * cross
            assert photon_number_variance(p) == pytest.approx(assembled, rel=1e-13)

    def test_variance_super_poissonian(self):
        for p in random_below_threshold(30, seed=4):
            if p.epsilon > 0:
                variance = photon_number_variance(p)
                assert variance >= 2.0 * mean_photon_number(p)

    def test_fano(self):
        stats = photon_statistics(P_REF)
        assert stats.fano == pytest.approx(VARIANCE_REF / NBAR_REF, rel=1e-12)
        assert stats.fano > 1.0
        vac = photon_statistics(ModelParams(kappa=1.0, epsilon=0.0))
        assert np.isnan(vac.fano)

    def test_scale_invariance(self):
        for c in (2.0, 10.0, 0.25):
            scaled = ModelParams(kappa=c * 1.0, epsilon=c * 0.2)
            assert mean_photon_number(scaled) == pytest.approx(NBAR_REF, rel=1e-12)
            assert photon_number_variance(scaled) == pytest.approx(VARIANCE_REF, rel=1e-12)


class TestFactorTwo:
    def test_reference_point(self):
        assert degenerate_mean_photon_number(P_REF) == pytest.approx(N1_REF, rel=1e-12)

    def test_exactly_half_everywhere(self):
        # the 4 eps^2 and 2 eps^2 numerators differ by a factor of two exactly,
        # so the identity holds to the last bit
        for p in random_below_threshold(100, seed=5):
            assert mean_photon_number(p) == 2.0 * degenerate_mean_photon_number(p)

    def test_regime_error(self):
        with pytest.raises(ThresholdError):
            degenerate_mean_photon_number(ModelParams(kappa=0.8, epsilon=0.4))


class TestPumpMeanPhotonNumber:
    def test_reference_point(self):
        p = ModelParams.from_pump(kappa=1.0, mu=1.0, g=0.1)
        assert pump_mean_photon_number(p) == pytest.approx(3.9047619047619047, rel=1e-12)

    def test_undepleted(self):
        p = ModelParams.from_pump(kappa=1.0, mu=1.0, g=0.0)
        assert pump_mean_photon_number(p) == pytest.approx(4.0, rel=1e-15)

    def test_structural_identity(self):
        p = ModelParams.from_pump(kappa=1.0, mu=1.0, g=0.1)
        bare = 4.0 * p.mu**2 / p.kappa**2
        assert pump_mean_photon_number(p) == pytest.approx(
            bare - steady_moments(p).n1, rel=1e-13
        )

    def test_depletion_overflow_warns(self):
        # weak drive but strong coupling: converted pairs exceed the bare
        # pump occupation and the value goes negative
        p = ModelParams.from_pump(kappa=1.0, mu=0.05, g=4.9)
        with pytest.warns(RuntimeWarning):
            value = pump_mean_photon_number(p)
        assert value < 0

    def test_requires_pump_description(self):
        with pytest.raises(ParameterError):
            pump_mean_photon_number(ModelParams(kappa=1.0, epsilon=0.2))
