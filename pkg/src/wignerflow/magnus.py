"""Magnus series for the linearly driven oscillator in the co-rotating frame.

The co-rotating potential is linear in the ladder operators,

    V(t) = g alpha e^{-i Omega t} a + g alpha* e^{+i Omega t} a†,

so every operator that appears in the Magnus expansion lives in the tiny
algebra spanned by {a, a†, 1}: the commutator of two such forms is a pure
multiple of the identity, and nested commutators vanish identically.  The
series therefore truncates exactly after the second term,

    U(t) = exp(-i [A1(t) + A2(t)]),

with A1 a displacement generator and A2 a real scalar phase.  This module
provides the closed forms, Gauss-Legendre evaluations of the defining
integrals as an independent route, and the propagator split into a phase
and a displacement:

    U(t) = e^{-i phi(t)} D(nu(t)) D(g alpha*/Omega) = e^{-i A2(t)} D(beta(t)),

where nu(t) = -(g/Omega) alpha* e^{i Omega t} and
beta(t) = (g/Omega) alpha* (1 - e^{i Omega t}).  Merging the two
displacement factors costs the phase Im[nu(t) conj(g alpha*/Omega)], which
is why phi(t) carries (Omega t - 2 sin Omega t) while A2(t) carries
(Omega t - sin Omega t).  Either way the phase is global: it cancels in
rho -> U rho U† and never reaches a Wigner function, which only sees the
displacement beta.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .drives import DriveSpec

__all__ = [
    "LinearOperatorForm",
    "MagnusTerms",
    "vi_at",
    "commutator",
    "magnus_a1_analytic",
    "magnus_a2_analytic",
    "magnus_a1_numeric",
    "magnus_a2_numeric",
    "magnus_a3_numeric",
    "magnus_terms",
    "unitary_ip",
    "displacement_mean_shift",
]


@dataclass(frozen=True)
class LinearOperatorForm:
    """An operator c_a * a + c_ad * a† + c_id * 1."""

    c_a: complex = 0.0
    c_ad: complex = 0.0
    c_id: complex = 0.0

    def norm(self) -> float:
        """Euclidean norm of the three coefficients."""
        return float(np.sqrt(abs(self.c_a) ** 2 + abs(self.c_ad) ** 2 + abs(self.c_id) ** 2))


@dataclass(frozen=True)
class MagnusTerms:
    """Summary of the exactly truncated series at one time.

    ``beta`` is the net displacement parameter (content of the first term),
    ``phi`` the scalar second term, ``a3_norm`` the quadrature residual of
    the third term, which vanishes identically.
    """

    beta: complex
    phi: float
    a3_norm: float


def vi_at(drive: DriveSpec, t: float) -> LinearOperatorForm:
    """Co-rotating drive potential at time ``t`` as an operator form."""
    drive._require("linear")
    omega = drive.omega0 + drive.omega1
    alpha = drive.alpha
    return LinearOperatorForm(
        c_a=drive.g * alpha * np.exp(-1j * omega * t),
        c_ad=drive.g * np.conj(alpha) * np.exp(1j * omega * t),
    )


def commutator(f: LinearOperatorForm, g: LinearOperatorForm) -> LinearOperatorForm:
    """Commutator of two linear forms; with [a, a†] = 1 it is a pure scalar."""
    return LinearOperatorForm(c_id=f.c_a * g.c_ad - f.c_ad * g.c_a)


def magnus_a1_analytic(drive: DriveSpec, t: float) -> complex:
    """Displacement parameter beta(t) = (g/Omega) alpha* (1 - e^{i Omega t}).

    The first Magnus term is -i A1 = beta a† - beta* a, so
    exp(-i A1) = D(beta).  Raises near resonance where the formula is
    singular (its limit, -i g alpha* t, belongs to the resonant branch).
    """
    omega = drive.require_nonresonant()
    return (drive.g / omega) * np.conj(drive.alpha) * (1.0 - np.exp(1j * omega * t))


def magnus_a2_analytic(drive: DriveSpec, t: float) -> float:
    """Scalar second term (g^2 |alpha|^2 / Omega^2) (Omega t - sin Omega t)."""
    omega = drive.require_nonresonant()
    amp2 = abs(drive.alpha) ** 2
    return float((drive.g**2 * amp2 / omega**2) * (omega * t - np.sin(omega * t)))


def _gauss_legendre(lo: float, hi: float, nodes: int) -> tuple[np.ndarray, np.ndarray]:
    if nodes < 2:
        raise ValueError("quadrature needs at least 2 nodes")
    x, w = np.polynomial.legendre.leggauss(nodes)
    half = 0.5 * (hi - lo)
    return lo + half * (x + 1.0), half * w


def _rescaled(base: tuple[np.ndarray, np.ndarray], hi: float) -> tuple[np.ndarray, np.ndarray]:
    """Map base Gauss-Legendre nodes on [-1, 1] to [0, hi]."""
    x, w = base
    half = 0.5 * hi
    return half * (x + 1.0), half * w


def _vi_coeffs(drive: DriveSpec, ts: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(c_a, c_ad) coefficient arrays of the potential over a node array."""
    drive._require("linear")
    omega = drive.omega0 + drive.omega1
    phase = np.exp(-1j * omega * np.asarray(ts))
    c_a = drive.g * drive.alpha * phase
    return c_a, np.conj(c_a)


def magnus_a1_numeric(drive: DriveSpec, t: float, nodes: int = 64) -> complex:
    """First term by quadrature of the potential, as a displacement parameter.

    Integrates the operator form of the potential over [0, t]; the creation
    coefficient of A1 is -i times the displacement parameter.
    """
    ts, ws = _gauss_legendre(0.0, t, nodes)
    _, c_ad = _vi_coeffs(drive, ts)
    return complex(-1j * (ws @ c_ad))


def magnus_a2_numeric(drive: DriveSpec, t: float, nodes: int = 64) -> float:
    """Second term by nested quadrature of the potential commutators.

    A2(t) = (1 / 2i) int_0^t dt2 int_0^{t2} dt1 [V(t1), V(t2)]; every
    commutator is a scalar multiple of the identity,
    c_a(t1) c_ad(t2) - c_ad(t1) c_a(t2), so the result is a real number.
    The inner nodes are evaluated for all outer nodes at once.
    """
    if nodes < 2:
        raise ValueError("quadrature needs at least 2 nodes")
    x, w = np.polynomial.legendre.leggauss(nodes)
    t2s, w2s = _rescaled((x, w), t)
    # t1 grid: rows follow the outer node, columns the inner node on [0, t2]
    t1s = 0.5 * np.outer(t2s, x + 1.0)
    w1s = 0.5 * np.outer(t2s, w)
    ca2, cad2 = _vi_coeffs(drive, t2s)
    ca1, cad1 = _vi_coeffs(drive, t1s)
    comm_id = ca1 * cad2[:, None] - cad1 * ca2[:, None]
    total = w2s @ (w1s * comm_id).sum(axis=1)
    return float((total / 2j).real)


def _commutator_arrays(f: tuple, g: tuple) -> tuple:
    """Commutator law on (c_a, c_ad, c_id) coefficient arrays.

    Identity parts commute with everything; the ladder parts contribute
    only an identity coefficient: [F, G] = (F.c_a G.c_ad - F.c_ad G.c_a) 1.
    """
    zero = np.zeros(np.broadcast_shapes(np.shape(f[0]), np.shape(g[0])), dtype=complex)
    return zero, zero.copy(), f[0] * g[1] - f[1] * g[0]


def magnus_a3_numeric(drive: DriveSpec, t: float, nodes: int = 16) -> float:
    """Residual norm of the third term by triple nested quadrature.

    The integrand is [V(t1), [V(t2), V(t3)]] + [V(t3), [V(t2), V(t1)]].
    The inner commutators carry only an identity coefficient, so both
    outer commutators evaluate to the zero form at every node triple; the
    quadrature documents the exact truncation of the series numerically.
    """
    if nodes < 2:
        raise ValueError("quadrature needs at least 2 nodes")
    x, w = np.polynomial.legendre.leggauss(nodes)
    t3s, w3s = _rescaled((x, w), t)  # (n,)
    t2s = 0.5 * np.outer(t3s, x + 1.0)  # (n, n), t2 in [0, t3]
    w2s = 0.5 * np.outer(t3s, w)
    t1s = 0.5 * t2s[..., None] * (x + 1.0)  # (n, n, n), t1 in [0, t2]
    w1s = 0.5 * t2s[..., None] * w

    def form(ts_shape_full):  # coefficient triple broadcast to (n, n, n)
        ca, cad = _vi_coeffs(drive, ts_shape_full)
        return ca, cad, np.zeros_like(ca)

    v1 = form(t1s)
    v2 = form(np.broadcast_to(t2s[..., None], t1s.shape))
    v3 = form(np.broadcast_to(t3s[:, None, None], t1s.shape))
    first = _commutator_arrays(v1, _commutator_arrays(v2, v3))
    second = _commutator_arrays(v3, _commutator_arrays(v2, v1))

    weight = w3s[:, None, None] * w2s[..., None] * w1s
    acc = LinearOperatorForm(
        c_a=complex((weight * (first[0] + second[0])).sum() / 6.0),
        c_ad=complex((weight * (first[1] + second[1])).sum() / 6.0),
        c_id=complex((weight * (first[2] + second[2])).sum() / 6.0),
    )
    return acc.norm()


def magnus_terms(drive: DriveSpec, t: float, a3_nodes: int = 16) -> MagnusTerms:
    """Analytic beta and phi together with the numeric third-term residual."""
    return MagnusTerms(
        beta=magnus_a1_analytic(drive, t),
        phi=magnus_a2_analytic(drive, t),
        a3_norm=magnus_a3_numeric(drive, t, nodes=a3_nodes),
    )


def unitary_ip(drive: DriveSpec, t: float) -> tuple[float, complex]:
    """Co-rotating propagator as (phase, displacement).

    The displacement is beta(t); applying the propagator to a state shifts
    the Wigner mean by sqrt(2) (Re beta, Im beta) and does nothing else.
    The phase is the prefactor of the two-displacement factorisation,
    A2(t) + Im[nu(t) conj(g alpha*/Omega)]
    = (g^2 |alpha|^2 / Omega^2)(Omega t - 2 sin Omega t); it is global and
    can never affect a Wigner function.
    """
    omega = drive.require_nonresonant()
    delta = drive.g * np.conj(drive.alpha) / omega
    nu = -delta * np.exp(1j * omega * t)
    merge_phase = float(np.imag(nu * np.conj(delta)))
    return magnus_a2_analytic(drive, t) + merge_phase, magnus_a1_analytic(drive, t)


def displacement_mean_shift(beta: complex) -> np.ndarray:
    """Phase-space mean shift sqrt(2) (Re beta, Im beta) of D(beta)."""
    return np.sqrt(2.0) * np.array([beta.real, beta.imag])
