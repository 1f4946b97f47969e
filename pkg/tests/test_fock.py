import math

import numpy as np
import pytest

from photoncat import fock, special, states, witnesses
from photoncat.errors import DegenerateState, UnconvergedError
from photoncat.states import Family, StateSpec

from conftest import coherent_product_state


class TestCoherentAmplitudes:
    def test_vacuum(self):
        amps = fock.coherent_amplitudes(0.0, 4)
        assert amps[0] == 1.0
        assert np.all(amps[1:] == 0)

    def test_normalization_converges(self):
        amps = fock.coherent_amplitudes(1.0, 25)
        assert float(np.sum(np.abs(amps) ** 2)) == pytest.approx(1.0, abs=1e-12)

    def test_term_ratio(self):
        amps = fock.coherent_amplitudes(2.0, 40)
        assert amps[2] / amps[0] == pytest.approx(2 * math.sqrt(2), rel=1e-13)

    def test_rejects_zero_cutoff(self):
        with pytest.raises(ValueError):
            fock.coherent_amplitudes(1.0, 0)


class TestBuildState:
    def test_photon_added_vacuum_is_fock_state(self):
        state = fock.build_state(StateSpec(Family.PSI1, 0.0, m=1, n=3), 8, 8)
        expected = np.zeros((8, 8))
        expected[1, 3] = 1.0
        assert np.allclose(state.amplitudes, expected, atol=1e-15)

    def test_norm_sq_pre_for_plain_even_cat(self):
        state = fock.build_state(StateSpec(Family.PSI1, 1.0), 40, 40)
        assert state.norm_sq_pre == pytest.approx(2 * (1 + math.exp(-4)), rel=1e-12)

    def test_antisymmetric_families_need_amplitude(self):
        with pytest.raises(DegenerateState):
            fock.build_state(StateSpec(Family.PSI2, 1e-6, m=1, n=3), 40, 40)

    def test_small_cutoff_flags_unconverged(self):
        with pytest.raises(UnconvergedError):
            fock.build_state(StateSpec(Family.PSI1, 2.0, m=1, n=3), 8, 8)

    def test_cutoff_must_clear_addition_order(self):
        with pytest.raises(ValueError):
            fock.build_state(StateSpec(Family.PSI1, 0.5, m=4, n=0), 4, 10)

    def test_normalized_with_unit_probability(self):
        state = fock.build_state(StateSpec(Family.PSI4, 0.8, m=2, n=6), 48, 52)
        prob = np.abs(state.amplitudes) ** 2
        assert float(prob.sum()) == pytest.approx(1.0, abs=1e-13)
        row_probs = prob.sum(axis=1)
        assert np.all(row_probs >= 0)

    def test_cross_family_mean_photon_matches_analytic(self):
        spec = StateSpec(Family.PSI4, 0.5, m=2, n=6)
        state = fock.build_state(spec, 48, 52)
        table = states.moment_table_analytic(spec, 1)
        ours = fock.moment_numeric(state, 1, 1)
        assert ours.real == pytest.approx(table.entry(1, 1).real, rel=1e-9)


class TestMomentNumeric:
    def test_normalization_moment(self):
        state = fock.build_state(StateSpec(Family.PSI3, 0.7, m=1, n=0), 40, 40)
        assert fock.moment_numeric(state, 0, 0) == pytest.approx(1.0, abs=1e-13)

    def test_fock_state_number(self):
        state = fock.build_state(StateSpec(Family.PSI1, 0.0, m=1, n=3), 10, 10)
        assert fock.moment_numeric(state, 1, 1) == pytest.approx(1.0, abs=1e-13)

    def test_even_cat_mean_photon(self):
        state = fock.build_state(StateSpec(Family.PSI1, 0.9), 40, 40)
        expected = 0.81 * math.tanh(1.62)
        assert fock.moment_numeric(state, 1, 1).real == pytest.approx(
            expected, rel=1e-10
        )

    def test_coherent_baseline_factorization(self):
        for g in (0.5, 2.0, 0.7 + 0.6j):
            state = coherent_product_state(g, 0.0)
            for p in range(5):
                for q in range(5):
                    ref = np.conj(g) ** p * g**q
                    val = fock.moment_numeric(state, p, q)
                    assert val == pytest.approx(ref, rel=1e-11, abs=1e-11)

    def test_order_beyond_cutoff_rejected(self):
        state = fock.build_state(StateSpec(Family.PSI1, 0.3), 26, 26)
        with pytest.raises(ValueError):
            fock.moment_numeric(state, 26, 0)

    def test_antinormal_consistent_with_ordering_expansion(self):
        state = fock.build_state(StateSpec(Family.PSI2, 1.1, m=1, n=2), 44, 44)
        for p in range(4):
            for q in range(4):
                direct = fock.mode_a_antinormal(state, p, q)
                expanded = sum(
                    w * fock.moment_numeric(state, q - k, p - k)
                    for k, w in special.ordering_coeffs(p, q).coeffs
                )
                assert direct == pytest.approx(expanded, rel=1e-12, abs=1e-12)

    def test_two_mode_factorizes_on_product_states(self):
        ga, gb = 0.8, 0.4 - 0.3j
        state = coherent_product_state(ga, gb)
        for p in range(3):
            for q in range(3):
                ref = states.ladder_element(ga, ga, p, q) * states.ladder_element(
                    gb, gb, p, q
                )
                val = fock.two_mode_antinormal(state, p, q)
                assert val == pytest.approx(ref, rel=1e-11, abs=1e-11)


class TestQuadrature:
    def test_vacuum_variance(self):
        state = coherent_product_state(0.0, 0.0, 12, 12)
        assert fock.quadrature_central_moment(state, 2) == pytest.approx(0.5, abs=1e-12)

    def test_vacuum_fourth_moment_matches_threshold(self):
        state = coherent_product_state(0.0, 0.0, 12, 12)
        assert fock.quadrature_central_moment(state, 4) == pytest.approx(
            special.squeezing_threshold(4), abs=1e-12
        )

    def test_displaced_state_keeps_gaussian_central_moments(self):
        state = coherent_product_state(1.3, 0.0)
        for l in (2, 4, 6):
            assert fock.quadrature_central_moment(state, l) == pytest.approx(
                special.squeezing_threshold(l), rel=1e-11
            )

    def test_consistent_with_table_reconstruction(self):
        spec = StateSpec(Family.PSI1, 1.0, m=1, n=3)
        state = fock.build_state(spec, 48, 52)
        table = fock.moment_table_oracle(spec, 2)
        direct = fock.quadrature_central_moment(state, 2)
        from_table = witnesses.quadrature_central_moment_from_table(table, 2)
        assert direct == pytest.approx(from_table, rel=1e-10)

    def test_order_bounds(self):
        state = coherent_product_state(0.0, 0.0, 12, 12)
        with pytest.raises(ValueError):
            fock.quadrature_central_moment(state, 13)


class TestOracleTable:
    def test_cutoff_monotonicity(self):
        spec = StateSpec(Family.PSI2, 1.5, m=2, n=6)
        table, cutoff = fock.moment_table_oracle(spec, 3, return_cutoff=True)
        big = fock.build_state(spec, 2 * cutoff, 2 * cutoff)
        for (p, q), val in table.normal_moments.items():
            ref = fock.moment_numeric(big, p, q)
            assert abs(val - ref) <= max(10 * table.est_error, 1e-12) * max(
                1.0, abs(ref)
            )

    def test_est_error_below_tolerance(self):
        table = fock.moment_table_oracle(StateSpec(Family.PSI1, 1.0, m=1, n=3), 3)
        assert table.est_error <= 1e-10

    def test_unconverged_for_huge_amplitude(self):
        with pytest.raises(UnconvergedError):
            fock.moment_table_oracle(StateSpec(Family.PSI1, 21.0), 2)

    def test_two_mode_convention_table(self):
        spec = StateSpec(Family.PSI3, 0.8, m=1, n=3)
        table = fock.moment_table_oracle(spec, 2, convention="two_mode")
        analytic = states.moment_table_two_mode(spec, 2)
        for (p, q), val in analytic.normal_moments.items():
            assert val == pytest.approx(table.entry(p, q), rel=1e-9, abs=1e-10)

    def test_unknown_convention_rejected(self):
        with pytest.raises(ValueError):
            fock.moment_table_oracle(StateSpec(Family.PSI1, 1.0), 2, convention="x")
