"""Magnus terms: closed forms, quadrature routes, exact truncation."""

import numpy as np
import pytest
import scipy.integrate
import scipy.linalg
from numpy.testing import assert_allclose

from wignerflow import DriveSpec, evolve_linear_ip
from wignerflow import fock
from wignerflow.magnus import (
    LinearOperatorForm,
    commutator,
    displacement_mean_shift,
    magnus_a1_analytic,
    magnus_a1_numeric,
    magnus_a2_analytic,
    magnus_a2_numeric,
    magnus_a3_numeric,
    magnus_terms,
    unitary_ip,
    vi_at,
)
from wignerflow.phase import rotation_matrix
from wignerflow.states import ideal_squeezed
from conftest import S_HALF


class TestPotentialForm:
    def test_initial_coefficients(self, fig2_drive):
        form = vi_at(fig2_drive, 0.0)
        assert_allclose(form.c_a, fig2_drive.g * fig2_drive.alpha, atol=1e-15)
        assert_allclose(form.c_ad, fig2_drive.g * np.conj(fig2_drive.alpha), atol=1e-15)
        assert form.c_id == 0.0

    def test_periodicity(self, fig2_drive):
        t = 2 * np.pi / fig2_drive.Omega
        f0, ft = vi_at(fig2_drive, 0.0), vi_at(fig2_drive, t)
        assert abs(f0.c_a - ft.c_a) < 1e-12
        assert abs(f0.c_ad - ft.c_ad) < 1e-12

    def test_hermiticity(self, fig2_drive):
        form = vi_at(fig2_drive, 0.37)
        assert abs(form.c_ad - np.conj(form.c_a)) < 1e-15

    def test_commutator_law_against_matrices(self):
        # independent check of the scalar commutator on actual truncated
        # matrices, away from the corrupted top rows
        rng = np.random.default_rng(11)
        n = 40
        a, ad = fock.ladder_ops(n)
        for _ in range(5):
            fa, fad, ga, gad = rng.normal(size=4) + 1j * rng.normal(size=4)
            f_mat = fa * a + fad * ad
            g_mat = ga * a + gad * ad
            direct = f_mat @ g_mat - g_mat @ f_mat
            form = commutator(LinearOperatorForm(c_a=fa, c_ad=fad),
                              LinearOperatorForm(c_a=ga, c_ad=gad))
            assert form.c_a == 0.0 and form.c_ad == 0.0
            interior = direct[: n - 1, : n - 1]
            assert_allclose(interior, form.c_id * np.eye(n - 1), atol=1e-12)


class TestFirstTerm:
    def test_zero_at_time_zero(self, fig2_drive):
        assert magnus_a1_analytic(fig2_drive, 0.0) == 0.0

    def test_zero_after_full_drive_period(self, fig2_drive):
        t = 2 * np.pi / fig2_drive.Omega
        assert abs(magnus_a1_analytic(fig2_drive, t)) < 1e-12

    def test_half_period_value(self, fig2_drive):
        # (g/Omega) alpha* (1 - e^{i pi}) = 2 (g/Omega) alpha*
        t = np.pi / fig2_drive.Omega
        expected = 2.0 * (fig2_drive.g / fig2_drive.Omega) * np.conj(fig2_drive.alpha)
        assert abs(magnus_a1_analytic(fig2_drive, t) - expected) < 1e-12

    def test_quadrature_agrees(self, fig2_drive):
        t = 0.7
        assert abs(magnus_a1_numeric(fig2_drive, t) - magnus_a1_analytic(fig2_drive, t)) < 1e-10

    def test_quadrature_against_scipy(self, fig2_drive):
        # independent adaptive quadrature of the same defining integral
        d = fig2_drive
        t = 0.7

        def integrand(u):
            return d.g * np.conj(d.alpha) * np.exp(1j * d.Omega * u)

        ref, _ = scipy.integrate.quad(lambda u: integrand(u).real, 0, t)
        ref_im, _ = scipy.integrate.quad(lambda u: integrand(u).imag, 0, t)
        assert abs(magnus_a1_numeric(d, t) - (-1j) * (ref + 1j * ref_im)) < 1e-10

    def test_resonance_raises(self, resonant_drive):
        with pytest.raises(Exception):
            magnus_a1_analytic(resonant_drive, 0.3)


class TestSecondTerm:
    def test_zero_at_time_zero(self, fig2_drive):
        assert magnus_a2_analytic(fig2_drive, 0.0) == 0.0

    def test_half_period_value(self, fig2_drive):
        # (g^2 |alpha|^2 / Omega^2)(pi - sin pi) with g=5, Omega=3, |alpha|^2=1
        t = np.pi / fig2_drive.Omega
        assert_allclose(magnus_a2_analytic(fig2_drive, t), 25.0 * np.pi / 9.0, atol=1e-12)

    def test_monotone_nondecreasing(self, fig2_drive):
        ts = np.linspace(0.0, 4 * np.pi, 200)
        vals = [magnus_a2_analytic(fig2_drive, t) for t in ts]
        assert all(b >= a - 1e-12 for a, b in zip(vals, vals[1:]))

    def test_quadrature_agrees(self, fig2_drive):
        t = 0.7
        assert abs(magnus_a2_numeric(fig2_drive, t) - magnus_a2_analytic(fig2_drive, t)) < 1e-10

    def test_quadrature_against_scipy(self, fig2_drive):
        # the nested integral collapses to a 1-D integral of (1 - cos)/Omega
        d = fig2_drive
        t = 1.3
        amp = d.g**2 * abs(d.alpha) ** 2
        ref, _ = scipy.integrate.quad(
            lambda t2: amp * (1.0 - np.cos(d.Omega * t2)) / d.Omega, 0, t)
        assert abs(magnus_a2_numeric(d, t) - ref) < 1e-10

    def test_node_count_validated(self, fig2_drive):
        with pytest.raises(ValueError):
            magnus_a2_numeric(fig2_drive, 0.5, nodes=1)


class TestThirdTerm:
    def test_vanishes_for_reference_drive(self, fig2_drive):
        assert magnus_a3_numeric(fig2_drive, 0.7) <= 1e-12

    def test_vanishes_for_random_draws(self):
        rng = np.random.default_rng(17)
        for _ in range(10):
            drive = DriveSpec.linear(
                1.0,
                g=rng.uniform(0, 10),
                a=rng.uniform(-2, 2),
                b=rng.uniform(-2, 2),
                omega1=rng.uniform(0.5, 10) - 1.0,
            )
            assert magnus_a3_numeric(drive, rng.uniform(0, 4 * np.pi)) <= 1e-12

    def test_node_count_validated(self, fig2_drive):
        with pytest.raises(ValueError):
            magnus_a3_numeric(fig2_drive, 0.5, nodes=0)

    def test_terms_summary(self, fig2_drive):
        terms = magnus_terms(fig2_drive, 0.7)
        assert terms.a3_norm <= 1e-12
        assert abs(terms.beta - magnus_a1_analytic(fig2_drive, 0.7)) == 0.0
        assert terms.phi == magnus_a2_analytic(fig2_drive, 0.7)


class TestPropagator:
    def test_identity_at_time_zero(self, fig2_drive):
        phase, beta = unitary_ip(fig2_drive, 0.0)
        assert beta == 0.0
        assert phase == 0.0

    def test_closes_after_drive_period(self, fig2_drive):
        t = 2 * np.pi / fig2_drive.Omega
        _, beta = unitary_ip(fig2_drive, t)
        assert abs(beta) < 1e-12

    def test_phase_matches_two_displacement_prefactor(self, fig2_drive):
        # A2 + merge phase = (g^2 |alpha|^2/Omega^2)(Omega t - 2 sin Omega t)
        d = fig2_drive
        for t in (0.3, 0.9, 2.0):
            phase, _ = unitary_ip(d, t)
            expected = (d.g**2 * abs(d.alpha) ** 2 / d.Omega**2) * (
                d.Omega * t - 2.0 * np.sin(d.Omega * t))
            assert abs(phase - expected) < 1e-12

    def test_displacement_consistent_with_ip_mean(self, fig2_state, fig2_drive):
        # sqrt(2)(Re beta, Im beta) equals the interaction-picture mean shift
        d = fig2_drive
        v = np.array([d.a, -d.b])
        for t in np.linspace(0.0, 3.0, 25):
            _, beta = unitary_ip(d, t)
            shift = (d.g / d.Omega) * (v - rotation_matrix(d.Omega * t) @ v)
            assert_allclose(displacement_mean_shift(beta), shift, atol=1e-12)

    def test_phase_never_reaches_the_state(self, fig2_state, fig2_drive):
        # the evolved Gaussian state is fully determined by the displacement
        t = 1.1
        _, beta = unitary_ip(fig2_drive, t)
        st = evolve_linear_ip(fig2_state, fig2_drive, t)
        assert_allclose(st.mean, fig2_state.mean + displacement_mean_shift(beta), atol=1e-12)
        assert np.array_equal(st.cov, fig2_state.cov)

    def test_fidelity_against_stepped_propagator(self, fig2_drive):
        # time-ordered stepping of the co-rotating potential vs the exact
        # displacement, as a purity-normalised overlap
        cutoff, t = 60, 0.5
        rho0 = fock.ideal_squeezed_density(-2.0, S_HALF, cutoff)
        rho_num = fock.propagate(rho0, fock.ip_hamiltonian(fig2_drive, cutoff), t,
                                 fock.default_steps(fig2_drive, t))
        _, beta = unitary_ip(fig2_drive, t)
        d_op = fock.displacement_op(beta, cutoff)
        rho_exact = d_op @ rho0 @ d_op.conj().T
        overlap = np.trace(rho_num @ rho_exact).real
        assert overlap >= 1.0 - 1e-6
