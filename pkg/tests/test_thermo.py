import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclewalk import (
    CoinDensity,
    DegenerateSpectrumError,
    InvalidDensityError,
    ParameterError,
    UndefinedAverageError,
    WalkParams,
    asymptotic_density,
    asymptotic_density_from_initial_modes,
    asymptotic_density_localized,
    averaged_density_closed,
    averaged_density_numeric,
    chi_isotherm,
    chi_of_density,
    chi_reference,
    coin_density,
    decompose,
    decompose_localized,
    entanglement_entropy,
    f_g_h,
    hadamard_f_closed,
    localized_initial_state,
    step,
    temperature_from_chi,
    transient_temperature,
)

from conftest import random_state

CHI_HADAMARD_LINE = (3 - 2 * math.sqrt(2)) / 4


class TestCoinDensity:
    def test_pure_left_start(self):
        s = localized_initial_state(WalkParams(4, 0.5, gamma=0.0, phi=0.0))
        rho = coin_density(s)
        assert (rho.p_left, rho.p_right, rho.q) == (1.0, 0.0, 0.0)

    def test_equator_start(self):
        s = localized_initial_state(WalkParams(4, 0.5, gamma=math.pi / 2, phi=0.0))
        rho = coin_density(s)
        assert abs(rho.p_left - 0.5) < 1e-14
        assert abs(rho.p_right - 0.5) < 1e-14
        assert abs(rho.q - 0.5) < 1e-14

    def test_trace_and_positivity(self, rng):
        for n in (3, 7, 12):
            rho = coin_density(random_state(rng, n))
            assert abs(rho.p_left + rho.p_right - 1.0) < 1e-12
            assert rho.p_left * rho.p_right - abs(rho.q) ** 2 >= -1e-12

    def test_invalid_rejected(self):
        with pytest.raises(InvalidDensityError):
            CoinDensity(0.9, 0.2, 0.0)
        with pytest.raises(InvalidDensityError):
            CoinDensity(0.5, 0.5, 0.9)


class TestEntropy:
    def test_pure_state_zero(self):
        assert entanglement_entropy(CoinDensity(1.0, 0.0, 0.0)) == 0.0

    def test_maximally_mixed(self):
        assert abs(entanglement_entropy(CoinDensity(0.5, 0.5, 0.0)) - math.log(2)) < 1e-14

    def test_pure_with_coherence(self):
        # eigenvalues are 1 and 0
        assert abs(entanglement_entropy(CoinDensity(0.5, 0.5, 0.5))) < 1e-12


class TestAveragedDensity:
    def test_single_term_average(self):
        params = WalkParams(5, 0.8, 1.0, 0.5)
        avg = averaged_density_numeric(params, 1)
        rho0 = coin_density(localized_initial_state(params))
        assert abs(avg.p_left - rho0.p_left) < 1e-14
        assert abs(avg.q - rho0.q) < 1e-14

    def test_t_zero_rejected(self):
        params = WalkParams(5, 0.8)
        with pytest.raises(UndefinedAverageError):
            averaged_density_numeric(params, 0)
        with pytest.raises(UndefinedAverageError):
            averaged_density_closed(decompose_localized(params), 0)

    def test_closed_matches_numeric(self, rng):
        for _ in range(5):
            n = int(rng.integers(3, 10))
            theta = float(rng.uniform(0.1, math.pi / 2 - 0.05))
            params = WalkParams(
                n, theta, float(rng.uniform(0, math.pi)), float(rng.uniform(0, 2 * math.pi))
            )
            dec = decompose_localized(params)
            for t in (1, 7, 100):
                closed = averaged_density_closed(dec, t)
                numeric = averaged_density_numeric(params, t)
                assert abs(closed.p_left - numeric.p_left) < 1e-10
                assert abs(closed.p_right - numeric.p_right) < 1e-10
                assert abs(closed.q - numeric.q) < 1e-10

    def test_large_t_near_limit(self):
        dec = decompose_localized(WalkParams(3, math.pi / 4, math.pi / 3, math.pi / 6))
        limit = asymptotic_density(dec)
        late = averaged_density_closed(dec, 10**6)
        assert abs(late.p_left - limit.p_left) < 1e-5
        assert abs(late.q - limit.q) < 1e-5

    def test_one_over_t_envelope_bounded(self):
        dec = decompose_localized(WalkParams(7, 1.0, 2.0, 0.3))
        limit = asymptotic_density(dec)
        bound = 0.0
        for t in (10, 100, 1000, 10**4, 10**5):
            avg = averaged_density_closed(dec, t)
            bound = max(bound, t * abs(avg.p_left - limit.p_left))
        assert bound < 10.0


class TestAsymptoticDensity:
    def test_both_forms_agree(self, rng):
        for n in (3, 6, 13):
            theta = float(rng.uniform(0.1, math.pi / 2 - 0.05))
            dec = decompose(random_state(rng, n), theta)
            a_form = asymptotic_density(dec)
            c_form = asymptotic_density_from_initial_modes(dec)
            assert abs(a_form.p_left - c_form.p_left) < 1e-12
            assert abs(a_form.p_right - c_form.p_right) < 1e-12
            assert abs(a_form.q - c_form.q) < 1e-12

    def test_trace_one(self, rng):
        dec = decompose(random_state(rng, 8), 0.6)
        limit = asymptotic_density(dec)
        assert abs(limit.p_left + limit.p_right - 1.0) < 1e-12

    def test_extrapolated_numeric_average(self):
        # Independent oracle: least-squares fit rho_avg(t) = rho_inf + A/t
        # over a late window of directly iterated averages.
        params = WalkParams(3, math.pi / 4, math.pi / 3, math.pi / 6)
        state = localized_initial_state(params)
        horizon = 4000
        acc = np.zeros(3, dtype=complex)
        series = np.empty((horizon, 3), dtype=complex)
        for t in range(1, horizon + 1):
            rho = coin_density(state)
            acc += (rho.p_left, rho.p_right, rho.q)
            series[t - 1] = acc / t
            state = step(state, params.theta)
        ts = np.arange(1, horizon + 1)
        window = ts >= 2000
        design = np.vstack([np.ones(window.sum()), 1.0 / ts[window]]).T
        intercept = np.linalg.lstsq(design, series[window], rcond=None)[0][0]
        limit = asymptotic_density(decompose_localized(params))
        assert abs(intercept[0] - limit.p_left) < 1e-6
        assert abs(intercept[2] - limit.q) < 1e-6


class TestLatticeSums:
    def test_hadamard_three_sites(self):
        f, g, h = f_g_h(3, math.pi / 4)
        assert abs(f - 1.4) < 1e-12
        assert abs(hadamard_f_closed(3) - 1.4) < 1e-12

    def test_hadamard_four_sites(self):
        f, _, _ = f_g_h(4, math.pi / 4)
        assert abs(f - 1.5) < 1e-12
        assert abs(hadamard_f_closed(4) - 1.5) < 1e-12

    def test_closed_form_matches_sum(self):
        for n in range(3, 65):
            f, _, _ = f_g_h(n, math.pi / 4)
            assert abs(f - hadamard_f_closed(n)) < 1e-12

    def test_large_n_limit(self):
        f, _, _ = f_g_h(10**4, math.pi / 4)
        assert abs(f - math.sqrt(2)) < 1e-6
        f3, _, _ = f_g_h(10**4, math.pi / 3)
        assert abs(f3 - 1 / math.sin(math.pi / 3)) < 1e-5

    def test_theta_half_pi_rejected(self):
        with pytest.raises(ParameterError):
            f_g_h(5, math.pi / 2)

    def test_singular_term_rejected(self):
        with pytest.raises(DegenerateSpectrumError):
            f_g_h(8, 0.0)


class TestLocalizedAsymptotics:
    def test_hadamard_line_values(self):
        rho = asymptotic_density_localized(WalkParams(2000, math.pi / 4, math.pi, 0.0))
        assert abs(rho.p_right - (1 - math.sqrt(2) / 4)) < 1e-4
        assert abs(rho.q - (-(4 - 2 * math.sqrt(2)) / 8)) < 1e-4

    def test_matches_spectral_limit(self, rng):
        for n in (3, 5, 8, 16):
            for theta in (math.pi / 6, math.pi / 4, math.pi / 3):
                for _ in range(3):
                    params = WalkParams(
                        n,
                        theta,
                        float(rng.uniform(0, math.pi)),
                        float(rng.uniform(0, 2 * math.pi)),
                    )
                    closed = asymptotic_density_localized(params)
                    spectral = asymptotic_density(decompose_localized(params))
                    assert abs(closed.p_right - spectral.p_right) < 1e-10
                    assert abs(closed.q - spectral.q) < 1e-10

    def test_antipodal_symmetry(self):
        p1 = WalkParams(9, 0.8, gamma=0.4, phi=1.2)
        p2 = WalkParams(9, 0.8, gamma=math.pi - 0.4, phi=1.2 + math.pi)
        chi1 = chi_of_density(asymptotic_density_localized(p1))
        chi2 = chi_of_density(asymptotic_density_localized(p2))
        assert abs(chi1 - chi2) < 1e-12


class TestChi:
    def test_maximally_mixed(self):
        assert chi_of_density(CoinDensity(0.5, 0.5, 0.0)) == 0.0

    def test_pure(self):
        assert abs(chi_of_density(CoinDensity(1.0, 0.0, 0.0)) - 0.25) < 1e-15

    def test_hadamard_line_value(self):
        rho = asymptotic_density_localized(WalkParams(2000, math.pi / 4, math.pi, 0.0))
        assert abs(chi_of_density(rho) - CHI_HADAMARD_LINE) < 1e-4

    def test_isotherm_reference_point(self):
        params = WalkParams(11, 0.7, gamma=math.pi, phi=2.5)
        assert abs(chi_isotherm(params) - chi_reference(11, 0.7)) < 1e-14

    def test_isotherm_antipodal_invariance(self):
        p1 = WalkParams(6, 1.1, gamma=2.0, phi=0.7)
        p2 = WalkParams(6, 1.1, gamma=math.pi - 2.0, phi=0.7 + math.pi)
        assert abs(chi_isotherm(p1) - chi_isotherm(p2)) < 1e-14

    def test_isotherm_matches_density_chi(self, rng):
        for theta in (math.pi / 6, math.pi / 4, 1.3):
            for _ in range(8):
                params = WalkParams(
                    int(rng.integers(3, 20)),
                    theta,
                    float(rng.uniform(0, math.pi)),
                    float(rng.uniform(0, 2 * math.pi)),
                )
                direct = chi_of_density(asymptotic_density_localized(params))
                assert abs(chi_isotherm(params) - direct) < 1e-10


class TestTemperature:
    def test_hadamard_line_reference(self):
        t0 = temperature_from_chi(CHI_HADAMARD_LINE, 1.0)
        assert abs(t0 - 2 / math.log(1 + math.sqrt(2))) < 1e-12
        assert abs(t0 - 2.2691853) < 1e-4

    def test_infinite_at_zero_chi(self):
        assert temperature_from_chi(0.0, 1.0) == math.inf

    def test_zero_at_quarter(self):
        assert temperature_from_chi(0.25, 1.0) == 0.0

    def test_out_of_range(self):
        with pytest.raises(ParameterError):
            temperature_from_chi(0.3, 1.0)
        with pytest.raises(ParameterError):
            temperature_from_chi(-0.01, 1.0)

    @settings(max_examples=50, deadline=None)
    @given(
        chi1=st.floats(1e-6, 0.24),
        chi2=st.floats(1e-6, 0.24),
        e0=st.floats(0.1, 10.0),
    )
    def test_monotone_decreasing_in_chi(self, chi1, chi2, e0):
        lo, hi = sorted((chi1, chi2))
        if hi - lo > 1e-9:
            assert temperature_from_chi(lo, e0) > temperature_from_chi(hi, e0)


class TestTransientTemperature:
    def test_consistent_with_asymptotic(self):
        dec = decompose_localized(WalkParams(5, 0.9, 1.3, 0.2))
        limit = asymptotic_density(dec)
        ts = transient_temperature(limit, 1.0)
        assert abs(ts.temperature - temperature_from_chi(chi_of_density(limit), 1.0)) < 1e-12

    def test_maximally_mixed_infinite(self):
        ts = transient_temperature(CoinDensity(0.5, 0.5, 0.0), 1.0)
        assert ts.beta == 0.0
        assert ts.temperature == math.inf

    def test_tanh_identity(self, rng):
        for n in (3, 8):
            dec = decompose(random_state(rng, n), 0.8)
            from cyclewalk import averaged_density_closed

            for t in (5, 50, 500):
                rho = averaged_density_closed(dec, t)
                ts = transient_temperature(rho, 1.0)
                gap = math.sqrt(
                    1 - 4 * (rho.p_left * rho.p_right - abs(rho.q) ** 2)
                )
                assert abs(math.tanh(ts.beta * 1.0) - gap) < 1e-12

    def test_eigenvalue_identities(self, rng):
        rho = coin_density(random_state(rng, 6))
        lam_p, lam_m = rho.eigenvalues()
        assert abs(lam_p + lam_m - 1.0) < 1e-12
        assert abs(lam_p * lam_m - (rho.p_left * rho.p_right - abs(rho.q) ** 2)) < 1e-12

    def test_literal_convention_halves_temperature(self):
        rho = CoinDensity(0.7, 0.3, 0.1)
        default = transient_temperature(rho, 1.0)
        literal = transient_temperature(rho, 1.0, convention="literal")
        assert abs(literal.temperature - default.temperature / 2) < 1e-12

    def test_unknown_convention_rejected(self):
        with pytest.raises(ParameterError):
            transient_temperature(CoinDensity(0.6, 0.4, 0.0), 1.0, convention="x")


def test_fig2_style_settling():
    # N=3 Hadamard trajectories settle near their asymptotic ratio by t ~ 100
    params = WalkParams(3, math.pi / 4, math.pi / 3, math.pi / 6)
    dec = decompose_localized(params)
    t0 = temperature_from_chi(chi_reference(3, math.pi / 4), 1.0)
    asym = transient_temperature(asymptotic_density(dec), 1.0).temperature / t0
    at_100 = (
        transient_temperature(averaged_density_closed(dec, 100), 1.0).temperature / t0
    )
    assert abs(at_100 - asym) / asym < 0.05
