"""Closed-form evolution in all pictures and the frame transformations."""

import numpy as np
import pytest
from numpy.testing import assert_allclose

from wignerflow import (
    DriveSpec,
    Picture,
    ResonanceError,
    evolve,
    evolve_free_sp,
    evolve_linear_ip,
    evolve_linear_ip_resonant,
    evolve_linear_sp,
    evolve_quadratic_ip,
    evolve_quadratic_sp,
    glissette_residual,
    heisenberg_quadrature_map,
    ideal_squeezed,
    ip_centroid_radius_sq,
    rotation_matrix,
    to_hip_frame,
    to_hp_frame,
    to_sip_frame,
    trajectory,
)
from conftest import S_HALF


def states_close(a, b, atol=1e-12):
    assert_allclose(a.mean, b.mean, atol=atol)
    assert_allclose(a.cov, b.cov, atol=atol)


class TestFreeEvolution:
    def test_time_zero_is_identity(self, squeezed_state):
        states_close(evolve_free_sp(squeezed_state, 1.0, 0.0), squeezed_state)

    def test_full_period_returns(self, squeezed_state):
        states_close(evolve_free_sp(squeezed_state, 1.0, 2 * np.pi), squeezed_state)

    def test_quarter_period_geometry(self, squeezed_state):
        # R(-pi/2) (4,0) = (0,-4) and the variances exchange axes
        st = evolve_free_sp(squeezed_state, 1.0, np.pi / 2)
        assert_allclose(st.mean, [0.0, -4.0], atol=1e-12)
        assert_allclose(st.cov, np.diag([0.25, 1.0]), atol=1e-12)

    def test_quadrature_map_values(self):
        assert_allclose(heisenberg_quadrature_map(1.0, 0.0), np.eye(2), atol=1e-12)
        assert_allclose(heisenberg_quadrature_map(1.0, np.pi / 2) @ [1.0, 0.0],
                        [0.0, -1.0], atol=1e-12)

    def test_quadrature_map_composes(self):
        lhs = heisenberg_quadrature_map(1.0, 0.3) @ heisenberg_quadrature_map(1.0, 0.5)
        assert_allclose(lhs, heisenberg_quadrature_map(1.0, 0.8), atol=1e-12)


class TestHeisenbergFrame:
    def test_time_zero_identity(self, squeezed_state):
        states_close(to_hp_frame(squeezed_state, 1.0, 0.0), squeezed_state)

    def test_static_wigner_at_sampled_times(self, squeezed_state):
        for t in np.linspace(0.0, 4 * np.pi, 64):
            back = to_hp_frame(evolve_free_sp(squeezed_state, 1.3, t), 1.3, t)
            states_close(back, squeezed_state)

    def test_three_eighths_turn_round_trip(self, squeezed_state):
        t = 3 * np.pi / 4
        back = to_hp_frame(evolve_free_sp(squeezed_state, 1.0, t), 1.0, t)
        states_close(back, squeezed_state)


class TestLinearInteractionPicture:
    def test_time_zero(self, fig2_state, fig2_drive):
        states_close(evolve_linear_ip(fig2_state, fig2_drive, 0.0), fig2_state)

    def test_drive_period_closes_loop(self, fig2_state, fig2_drive):
        t = 2 * np.pi / fig2_drive.Omega
        states_close(evolve_linear_ip(fig2_state, fig2_drive, t), fig2_state)

    def test_half_drive_period_mean(self, fig2_state, fig2_drive):
        # mean = mu0 + (g/Omega)[(a,-b) - R(pi)(a,-b)] = (-2,0) + (5/3)(2,2)
        st = evolve_linear_ip(fig2_state, fig2_drive, np.pi / 3)
        assert_allclose(st.mean, [4.0 / 3.0, 10.0 / 3.0], atol=1e-12)

    def test_covariance_bitwise_invariant(self, fig2_state, fig2_drive):
        st = evolve_linear_ip(fig2_state, fig2_drive, 1.7)
        assert np.array_equal(st.cov, fig2_state.cov)

    def test_mean_against_fock_first_moments(self, fig2_state, fig2_drive):
        from wignerflow import fock

        cutoff, t = 60, np.pi / 3
        rho = fock.ideal_squeezed_density(-2.0, S_HALF, cutoff)
        # the strong g=5 drive needs a finer grid than the default budget
        rho = fock.propagate(rho, fock.ip_hamiltonian(fig2_drive, cutoff), t, 3000)
        mean, _ = fock.moments(rho)
        assert_allclose(mean, [4.0 / 3.0, 10.0 / 3.0], atol=1e-6)

    def test_resonance_raises(self, fig2_state, resonant_drive):
        with pytest.raises(ResonanceError):
            evolve_linear_ip(fig2_state, resonant_drive, 0.5)

    def test_centroid_radius_examples(self, fig2_drive):
        assert ip_centroid_radius_sq(fig2_drive, 0.0) == 0.0
        # 2 (5/3)^2 * 2 * (1 - cos pi) = 200/9
        assert_allclose(ip_centroid_radius_sq(fig2_drive, np.pi / 3), 200.0 / 9.0, atol=1e-12)
        t = 1.1 / fig2_drive.Omega
        assert_allclose(ip_centroid_radius_sq(fig2_drive, t),
                        ip_centroid_radius_sq(fig2_drive, t + 2 * np.pi / fig2_drive.Omega),
                        atol=1e-12)

    def test_centroid_circle_law(self, fig2_state, fig2_drive):
        for t in np.linspace(0.0, 4 * np.pi, 500):
            st = evolve_linear_ip(fig2_state, fig2_drive, t)
            d2 = ((st.mean - fig2_state.mean) ** 2).sum()
            assert abs(d2 - ip_centroid_radius_sq(fig2_drive, t)) < 1e-10


class TestLinearSchrodingerPicture:
    def test_time_zero(self, fig2_state, fig2_drive):
        states_close(evolve_linear_sp(fig2_state, fig2_drive, 0.0), fig2_state)

    def test_zero_coupling_reduces_to_free(self, fig2_state):
        off = DriveSpec.linear(1.0, g=0.0, a=1.0, b=-1.0, omega1=2.0)
        states_close(evolve_linear_sp(fig2_state, off, 0.7),
                     evolve_free_sp(fig2_state, 1.0, 0.7))

    def test_picture_identity_for_mean(self, fig2_state, fig2_drive):
        t = 0.9
        sp = evolve_linear_sp(fig2_state, fig2_drive, t)
        ip = evolve_linear_ip(fig2_state, fig2_drive, t)
        assert_allclose(sp.mean, rotation_matrix(-fig2_drive.omega0 * t) @ ip.mean, atol=1e-12)

    def test_glissette_residual_zero_everywhere(self, fig2_state):
        for omega1 in (1 / 3, 3.0, 34 / 5):
            drive = DriveSpec.linear(1.0, g=5.0, a=1.0, b=-1.0, omega1=omega1)
            for t in np.linspace(0.0, 2 * np.pi, 200):
                assert glissette_residual(fig2_state, drive, t) <= 1e-10

    def test_glissette_time_zero(self, fig2_state, fig2_drive):
        assert glissette_residual(fig2_state, fig2_drive, 0.0) <= 1e-12


class TestResonantDrive:
    def test_time_zero(self, fig2_state, resonant_drive):
        states_close(evolve_linear_ip_resonant(fig2_state, resonant_drive, 0.0), fig2_state)

    def test_line_trajectory_value(self, fig2_state, resonant_drive):
        # mean = (mu_x - g b t, -g a t) = (-2 + 5*0.4, -5*0.4)
        st = evolve_linear_ip_resonant(fig2_state, resonant_drive, 0.4)
        assert_allclose(st.mean, [0.0, -2.0], atol=1e-12)

    def test_slope_relation(self, fig2_state, resonant_drive):
        d = resonant_drive
        for t in np.linspace(0.1, 2.0, 20):
            mean = evolve_linear_ip_resonant(fig2_state, d, t).mean
            assert abs(mean[1] - (d.a / d.b) * (mean[0] - fig2_state.mean[0])) < 1e-12

    def test_continuity_with_general_formula(self, fig2_state):
        # Omega = 1e-6 sits just above the resonance threshold
        near = DriveSpec.linear(1.0, g=5.0, a=1.0, b=-1.0, omega1=-1.0 + 1e-6)
        exact = DriveSpec.linear(1.0, g=5.0, a=1.0, b=-1.0, omega1=-1.0)
        worst = 0.0
        for t in np.linspace(0.0, 1.0, 101):
            general = evolve_linear_ip(fig2_state, near, t).mean
            resonant = evolve_linear_ip_resonant(fig2_state, exact, t).mean
            worst = max(worst, np.abs(general - resonant).max())
        assert worst <= 1e-4


class TestQuadraticDrive:
    drive = DriveSpec.quadratic(1.0, kappa=0.1)

    def test_time_zero(self):
        st0 = ideal_squeezed(0.0, S_HALF)
        states_close(evolve_quadratic_ip(st0, self.drive, 0.0), st0)
        states_close(evolve_quadratic_sp(st0, self.drive, 0.0), st0)

    def test_widths_equalise_at_crossing_time(self):
        # sigma_x^2 e^{-2 kappa t} = sigma_p^2 e^{+2 kappa t} at t = ln(2)/0.2
        st0 = ideal_squeezed(0.0, S_HALF)
        t_cross = np.log(2.0) / 0.2
        st = evolve_quadratic_ip(st0, self.drive, t_cross)
        assert_allclose(st.cov, np.diag([0.5, 0.5]), atol=1e-10)

    def test_det_invariant(self):
        st = evolve_quadratic_ip(ideal_squeezed(0.0, S_HALF), self.drive, 2.0)
        assert abs(np.linalg.det(st.cov) - 0.25) < 1e-12

    def test_breathing_law(self):
        st0 = ideal_squeezed(0.0, S_HALF)
        for t in np.linspace(0.0, 2 * np.pi, 50):
            cov = evolve_quadratic_ip(st0, self.drive, t).cov
            assert abs(cov[0, 0] - 1.0 * np.exp(-0.2 * t)) < 1e-12
            assert abs(cov[1, 1] - 0.25 * np.exp(0.2 * t)) < 1e-12
            assert cov[0, 1] == 0.0

    def test_zero_coupling_reduces_to_free(self):
        st0 = ideal_squeezed(0.0, S_HALF)
        off = DriveSpec.quadratic(1.0, kappa=0.0)
        states_close(evolve_quadratic_sp(st0, off, 1.3), evolve_free_sp(st0, 1.0, 1.3))

    def test_sp_covariance_at_quarter_period(self):
        # R(-pi/2) diag(e^{-0.1 pi}, e^{0.1 pi}/4) R(pi/2), evaluated directly
        st0 = ideal_squeezed(0.0, S_HALF)
        t = np.pi / 2
        r = rotation_matrix(-np.pi / 2)
        expected = r @ np.diag([np.exp(-0.1 * np.pi), 0.25 * np.exp(0.1 * np.pi)]) @ r.T
        assert_allclose(evolve_quadratic_sp(st0, self.drive, t).cov, expected, atol=1e-12)

    def test_sp_equals_rotated_ip(self):
        st0 = ideal_squeezed(0.0, S_HALF)
        for t in np.linspace(0.0, 2 * np.pi, 25):
            sp = evolve_quadratic_sp(st0, self.drive, t)
            ip = evolve_quadratic_ip(st0, self.drive, t)
            r = rotation_matrix(-self.drive.omega0 * t)
            assert_allclose(sp.cov, r @ ip.cov @ r.T, atol=1e-12)
            assert_allclose(sp.mean, r @ ip.mean, atol=1e-12)

    def test_nonzero_mean_scales_componentwise(self):
        st0 = ideal_squeezed(1.5, S_HALF).with_mean([1.5, -0.5])
        st = evolve_quadratic_ip(st0, self.drive, 2.0)
        assert_allclose(st.mean, [1.5 * np.exp(-0.2), -0.5 * np.exp(0.2)], atol=1e-12)


class TestFrameTransforms:
    def test_sip_time_zero(self, fig2_state):
        states_close(to_sip_frame(fig2_state, 1.0, 0.0), fig2_state)

    def test_sip_recovers_interaction_picture(self, fig2_state, fig2_drive):
        for t in (1.2, 2.1, 4.4):
            via_frame = to_sip_frame(evolve_linear_sp(fig2_state, fig2_drive, t),
                                     fig2_drive.omega0, t)
            states_close(via_frame, evolve_linear_ip(fig2_state, fig2_drive, t))

    def test_sip_covariance_unrotated(self, fig2_state, fig2_drive):
        t = 2.1
        via_frame = to_sip_frame(evolve_linear_sp(fig2_state, fig2_drive, t),
                                 fig2_drive.omega0, t)
        assert_allclose(via_frame.cov, fig2_state.cov, atol=1e-12)

    def test_hip_time_zero(self, fig2_state, fig2_drive):
        states_close(to_hip_frame(fig2_state, fig2_drive, 0.0), fig2_state)

    def test_hip_is_static(self, fig2_state, fig2_drive):
        for t in (0.8, 1.7, 3.0):
            back = to_hip_frame(evolve_linear_sp(fig2_state, fig2_drive, t), fig2_drive, t)
            states_close(back, fig2_state)

    def test_hip_reduces_to_hp_without_coupling(self, fig2_state):
        off = DriveSpec.linear(1.0, g=0.0, a=1.0, b=-1.0, omega1=2.0)
        t = 0.6
        states_close(to_hip_frame(fig2_state, off, t), to_hp_frame(fig2_state, 1.0, t))


class TestEvolveDispatch:
    def test_resonant_auto_switch(self, fig2_state, resonant_drive):
        st = evolve(fig2_state, resonant_drive, Picture.SIP, 0.4)
        assert_allclose(st.mean, [0.0, -2.0], atol=1e-12)

    def test_resonant_sp_composition(self, fig2_state, resonant_drive):
        t = 0.4
        st = evolve(fig2_state, resonant_drive, Picture.SP, t)
        expected = rotation_matrix(-t) @ np.array([0.0, -2.0])
        assert_allclose(st.mean, expected, atol=1e-12)

    def test_hp_with_drive_rejected(self, fig2_state, fig2_drive):
        with pytest.raises(ValueError):
            evolve(fig2_state, fig2_drive, Picture.HP, 0.5)

    def test_hip_with_quadratic_rejected(self):
        with pytest.raises(ValueError):
            evolve(ideal_squeezed(0.0, 0.0), DriveSpec.quadratic(1.0, 0.1), Picture.HIP, 0.5)

    def test_trajectory_samples(self, fig2_state, fig2_drive):
        times = np.linspace(0.0, 1.0, 11)
        samples = trajectory(fig2_state, fig2_drive, Picture.SIP, times)
        assert len(samples) == 11
        assert samples[0].t == 0.0
        states_close(samples[0].state, fig2_state)
        for sample in samples:
            assert sample.picture is Picture.SIP
