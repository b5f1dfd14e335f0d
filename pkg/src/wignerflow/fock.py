"""Brute-force cross-check in a truncated number basis.

Nothing in this module knows the closed-form answers: states are dense
complex density matrices on the first N+1 number states, Hamiltonians are
matrices built from truncated ladder operators, and time evolution is a
time-ordered product of midpoint-rule step unitaries.  Wigner functions
are reconstructed literally from the symmetric characteristic function
Tr[rho D(chi)] by a discrete 2-D Fourier sum.

Truncation is treated as a hard budget, not a soft approximation: the
population of the top basis states is monitored during propagation and a
:class:`CutoffError` is raised instead of silently degrading.  Matrix
exponentials go through eigendecomposition of the Hermitian generator, so
every step unitary is unitary to roundoff and the trace is preserved
exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .drives import DriveSpec

__all__ = [
    "CutoffError",
    "GridSpec",
    "ladder_ops",
    "quadrature_ops",
    "number_op",
    "displacement_op",
    "squeeze_op",
    "su11_ops",
    "vacuum_density",
    "ideal_squeezed_density",
    "check_density",
    "sp_hamiltonian",
    "ip_hamiltonian",
    "default_steps",
    "propagate",
    "to_interaction_frame",
    "moments",
    "characteristic_from_rho",
    "wigner_from_rho",
    "tail_population",
    "purity",
]

# Runtime truncation budget: population allowed in the top TAIL_STATES levels.
TAIL_STATES = 5
TAIL_TOL = 1e-8


class CutoffError(RuntimeError):
    """The truncated basis is too small for the requested operation."""

    def __init__(self, message: str, tail_mass: float | None = None):
        if tail_mass is not None:
            message = f"{message} (tail mass {tail_mass:.3e})"
        super().__init__(message)
        self.tail_mass = tail_mass


def ladder_ops(cutoff: int) -> tuple[np.ndarray, np.ndarray]:
    """Annihilation and creation operators on the first ``cutoff``+1 levels.

    ``a`` carries sqrt(n) on the first superdiagonal.  On the truncated
    space [a, a†] is the identity except for the last diagonal entry,
    which is -cutoff (the top level has nowhere to go).
    """
    if cutoff < 1:
        raise ValueError("cutoff must be at least 1")
    n = np.arange(1, cutoff + 1)
    a = np.zeros((cutoff + 1, cutoff + 1), dtype=complex)
    a[np.arange(cutoff), np.arange(1, cutoff + 1)] = np.sqrt(n)
    return a, a.conj().T


def quadrature_ops(cutoff: int) -> tuple[np.ndarray, np.ndarray]:
    """Position and momentum matrices, x = (a + a†)/sqrt2, p = (a - a†)/(i sqrt2)."""
    a, ad = ladder_ops(cutoff)
    return (a + ad) / np.sqrt(2.0), (a - ad) / (1j * np.sqrt(2.0))


def number_op(cutoff: int) -> np.ndarray:
    """Diagonal number operator a† a."""
    return np.diag(np.arange(cutoff + 1).astype(complex))


def _expm_antihermitian(generator: np.ndarray) -> np.ndarray:
    """exp(G) for anti-Hermitian G via eigendecomposition of iG.

    The result is unitary to roundoff, unlike a truncated series.
    """
    w, v = np.linalg.eigh(1j * generator)
    return (v * np.exp(-1j * w)) @ v.conj().T


def step_unitary(hamiltonian: np.ndarray, dt: float) -> np.ndarray:
    """exp(-i H dt) for Hermitian H."""
    w, v = np.linalg.eigh(hamiltonian)
    return (v * np.exp(-1j * w * dt)) @ v.conj().T


def displacement_op(alpha: complex, cutoff: int) -> np.ndarray:
    """Matrix exponential of alpha a† - alpha* a on the truncated basis.

    Guarded by |alpha|^2 <= cutoff/4 so that the displaced vacuum keeps its
    photon-number distribution far from the truncation edge; exceeding the
    budget raises :class:`CutoffError`.
    """
    if abs(alpha) ** 2 > cutoff / 4.0:
        raise CutoffError(
            f"displacement |alpha|^2 = {abs(alpha)**2:.3g} exceeds cutoff/4 = {cutoff / 4:.3g}"
        )
    a, ad = ladder_ops(cutoff)
    return _expm_antihermitian(alpha * ad - np.conj(alpha) * a)


def squeeze_op(zeta: complex, cutoff: int) -> np.ndarray:
    """Matrix exponential of (zeta* a^2 - zeta a†2)/2 on the truncated basis.

    Real zeta = s rescales the vacuum variances to e^{-2s}/2 and e^{2s}/2.
    The tail budget requires |zeta| <= 1.5 and cutoff >= 60.
    """
    if abs(zeta) > 1.5:
        raise CutoffError(f"squeeze strength |zeta| = {abs(zeta):.3g} exceeds the 1.5 budget")
    if cutoff < 60:
        raise CutoffError("squeeze_op needs cutoff >= 60 to keep the number tail negligible")
    a, ad = ladder_ops(cutoff)
    return _expm_antihermitian((np.conj(zeta) * a @ a - zeta * ad @ ad) / 2.0)


def su11_ops(cutoff: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """SU(1,1) generators K0 = (a†a + 1/2)/2, K+ = a†2/2, K- = a^2/2.

    The commutation relations [K0, K+-] = +-K+- and [K-, K+] = 2 K0 hold
    exactly on all but the top two basis levels, where the truncation of
    a^2 interferes.
    """
    if cutoff < 3:
        raise ValueError("su11_ops needs cutoff >= 3")
    a, ad = ladder_ops(cutoff)
    k0 = 0.5 * (ad @ a + 0.5 * np.eye(cutoff + 1))
    return k0, 0.5 * (ad @ ad), 0.5 * (a @ a)


def vacuum_density(cutoff: int) -> np.ndarray:
    rho = np.zeros((cutoff + 1, cutoff + 1), dtype=complex)
    rho[0, 0] = 1.0
    return rho


def ideal_squeezed_density(mu_x: float, s: float, cutoff: int) -> np.ndarray:
    """Density matrix of the displaced squeezed vacuum D(mu_x/sqrt2) S(s) |0>."""
    d = displacement_op(mu_x / np.sqrt(2.0), cutoff)
    sq = squeeze_op(s, cutoff)
    psi = (d @ sq)[:, 0]
    return np.outer(psi, psi.conj())


def check_density(rho: np.ndarray, *, herm_tol: float = 1e-12, trace_tol: float = 1e-8,
                  psd_floor: float = -1e-10) -> None:
    """Validate the density-matrix invariants, raising ValueError on failure."""
    if np.abs(rho - rho.conj().T).max() > herm_tol:
        raise ValueError("density matrix is not Hermitian within tolerance")
    if abs(np.trace(rho).real - 1.0) > trace_tol or abs(np.trace(rho).imag) > trace_tol:
        raise ValueError("density matrix trace deviates from 1")
    if np.linalg.eigvalsh(0.5 * (rho + rho.conj().T)).min() < psd_floor:
        raise ValueError("density matrix has a significantly negative eigenvalue")


def tail_population(rho: np.ndarray, levels: int = TAIL_STATES) -> float:
    """Total population of the top ``levels`` basis states."""
    return float(np.real(np.diag(rho)[-levels:]).sum())


def purity(rho: np.ndarray) -> float:
    return float(np.trace(rho @ rho).real)


def sp_hamiltonian(drive: DriveSpec, cutoff: int) -> Callable[[float], np.ndarray]:
    """Full Hamiltonian H(t) of the driven oscillator as a matrix function.

    free:      H = omega0 (a†a + 1/2)
    linear:    H = H0 + g (e^{-i omega1 t} alpha a + e^{+i omega1 t} alpha* a†)
    quadratic: H = 2 omega0 K0 + i kappa (e^{+2i omega0 t} K- - e^{-2i omega0 t} K+)
    """
    a, ad = ladder_ops(cutoff)
    h0 = drive.omega0 * (ad @ a + 0.5 * np.eye(cutoff + 1))
    if drive.kind == "free":
        return lambda t: h0
    if drive.kind == "linear":
        g, alpha, omega1 = drive.g, drive.alpha, drive.omega1

        def h_linear(t: float) -> np.ndarray:
            return h0 + g * (np.exp(-1j * omega1 * t) * alpha * a
                             + np.exp(1j * omega1 * t) * np.conj(alpha) * ad)

        return h_linear
    k0, kp, km = su11_ops(cutoff)
    kappa, omega0 = drive.kappa, drive.omega0

    def h_quadratic(t: float) -> np.ndarray:
        return 2.0 * omega0 * k0 + 1j * kappa * (
            np.exp(2j * omega0 * t) * km - np.exp(-2j * omega0 * t) * kp
        )

    return h_quadratic


def ip_hamiltonian(drive: DriveSpec, cutoff: int) -> Callable[[float], np.ndarray]:
    """Co-rotating potential V_I(t) = U0† V(t) U0 as a matrix function.

    linear:    V_I(t) = g (e^{-i Omega t} alpha a + e^{+i Omega t} alpha* a†)
    quadratic: V_I = i kappa (K- - K+), independent of time.
    """
    if drive.kind == "free":
        zero = np.zeros((cutoff + 1, cutoff + 1), dtype=complex)
        return lambda t: zero
    if drive.kind == "linear":
        a, ad = ladder_ops(cutoff)
        g, alpha, omega = drive.g, drive.alpha, drive.omega0 + drive.omega1

        def v_linear(t: float) -> np.ndarray:
            return g * (np.exp(-1j * omega * t) * alpha * a
                        + np.exp(1j * omega * t) * np.conj(alpha) * ad)

        return v_linear
    _, kp, km = su11_ops(cutoff)
    v_const = 1j * drive.kappa * (km - kp)
    return lambda t: v_const


def default_steps(drive: DriveSpec, t: float) -> int:
    """Midpoint step count: 2000 per cycle of the fastest rate, at least 500."""
    rates = [drive.omega0]
    if drive.kind == "linear":
        rates.append(abs(drive.omega0 + drive.omega1))
    if drive.kind == "quadratic":
        rates.append(abs(drive.kappa))
    return max(500, int(np.ceil(2000.0 * t * max(rates) / (2.0 * np.pi))))


def propagate(
    rho0: np.ndarray,
    hamiltonian: Callable[[float], np.ndarray] | np.ndarray,
    t: float,
    steps: int,
    *,
    t0: float = 0.0,
    tail_tol: float = TAIL_TOL,
) -> np.ndarray:
    """Time-ordered Schrodinger evolution by midpoint-rule step unitaries.

    Each step applies exp(-i H(t_mid) dt); the scheme is second order in
    dt, and every step is exactly unitary.  The top-level population is
    checked after each step and a :class:`CutoffError` is raised when it
    exceeds ``tail_tol``.
    """
    if steps < 1:
        raise ValueError("steps must be at least 1")
    h_of_t = hamiltonian if callable(hamiltonian) else (lambda _t: hamiltonian)
    dt = (t - t0) / steps
    rho = np.array(rho0, dtype=complex)
    for k in range(steps):
        u = step_unitary(h_of_t(t0 + (k + 0.5) * dt), dt)
        rho = u @ rho @ u.conj().T
        tail = tail_population(rho)
        if tail > tail_tol:
            raise CutoffError(
                f"truncation tail exceeded {tail_tol:g} at t = {t0 + (k + 1) * dt:.4g}; "
                "increase the cutoff",
                tail_mass=tail,
            )
    return rho


def to_interaction_frame(rho: np.ndarray, omega0: float, t: float) -> np.ndarray:
    """U0† rho U0 with U0 = exp(-i omega0 t (a†a + 1/2)).

    U0 is diagonal in the number basis, so the frame change is an exact
    elementwise phase: rho_I[m, n] = e^{i omega0 t (m - n)} rho[m, n].
    """
    n = np.arange(rho.shape[0])
    phase = np.exp(1j * omega0 * t * n)
    return rho * np.outer(phase, phase.conj())


def moments(rho: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Mean vector and symmetrised covariance of the quadratures.

    cov_AB = <AB + BA>/2 - <A><B>, evaluated with the truncated x and p.
    """
    dim = rho.shape[0]
    x, p = quadrature_ops(dim - 1)
    mean = np.array([np.trace(rho @ x).real, np.trace(rho @ p).real])
    xx = np.trace(rho @ x @ x).real - mean[0] ** 2
    pp = np.trace(rho @ p @ p).real - mean[1] ** 2
    xp = 0.5 * np.trace(rho @ (x @ p + p @ x)).real - mean[0] * mean[1]
    return mean, np.array([[xx, xp], [xp, pp]])


def characteristic_from_rho(rho: np.ndarray, xi: np.ndarray, eta: np.ndarray) -> np.ndarray:
    """Tr[rho D(chi)] with chi = (-eta + i xi)/sqrt2, for broadcast points.

    Uses the exact polar factorisation of the truncated displacement,
    D(chi) = e^{i psi n} D(|chi|) e^{-i psi n} with psi = arg chi and
    D(|chi|) = exp(-i sqrt2 |chi| p), so a single eigendecomposition of
    the momentum matrix serves every sample point.  The result equals the
    direct matrix exponential of the truncated generator to roundoff; no
    photon-number budget applies because only matrix elements between the
    occupied (low) levels enter the trace.
    """
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    shape = np.broadcast_shapes(xi.shape, eta.shape)
    xi_f = np.broadcast_to(xi, shape).ravel()
    eta_f = np.broadcast_to(eta, shape).ravel()

    dim = rho.shape[0]
    _, p = quadrature_ops(dim - 1)
    lam, v = np.linalg.eigh(p)

    # c[j, k] collects the k-th diagonal of rho sandwiched between the
    # momentum eigenvectors: C = sum_{j,k} e^{-i sqrt2 r lam_j} e^{i psi k} c[j, k].
    ks = np.arange(-dim + 1, dim)
    c = np.zeros((dim, 2 * dim - 1), dtype=complex)
    for k in ks:
        if k >= 0:
            diag = np.diagonal(rho, offset=k)
            c[:, k + dim - 1] = np.einsum(
                "m,mj,mj->j", diag, v[: dim - k].conj(), v[k:]
            )
        else:
            diag = np.diagonal(rho, offset=k)
            c[:, k + dim - 1] = np.einsum(
                "m,mj,mj->j", diag, v[-k:].conj(), v[: dim + k]
            )

    r = np.hypot(xi_f, eta_f) / np.sqrt(2.0)  # |chi|
    psi = np.arctan2(xi_f, -eta_f)  # arg chi
    radial = np.exp(-1j * np.sqrt(2.0) * np.outer(r, lam))
    angular = np.exp(1j * np.outer(psi, ks)) @ c.T
    out = (radial * angular).sum(axis=1)
    return out.reshape(shape) if shape else complex(out[0])


@dataclass(frozen=True)
class GridSpec:
    """Rectangular phase-space sampling window for Wigner reconstruction."""

    x_min: float
    x_max: float
    p_min: float
    p_max: float
    nx: int = 128
    np: int = 128

    def __post_init__(self) -> None:
        if self.nx < 64 or self.np < 64:
            raise ValueError("grid needs at least 64 samples per axis")
        if not (self.x_max > self.x_min and self.p_max > self.p_min):
            raise ValueError("grid window is empty")

    @classmethod
    def around(cls, mean: np.ndarray, cov: np.ndarray, *, sigmas: float = 8.0,
               nx: int = 128, np_: int = 128) -> "GridSpec":
        """Window centred on the mean, ``sigmas`` standard deviations wide."""
        hw = sigmas * float(np.sqrt(np.linalg.eigvalsh(cov).max()))
        return cls(mean[0] - hw, mean[0] + hw, mean[1] - hw, mean[1] + hw, nx, np_)

    def x_axis(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.nx)

    def p_axis(self) -> np.ndarray:
        return np.linspace(self.p_min, self.p_max, self.np)


# Characteristic-function lattice for the Fourier reconstruction.  The
# radius must reach the decay scale of the slowest characteristic
# direction (variance 1/4 needs ~10 before the analytic tail drops below
# the 1e-6 class), and at cutoff 60 the truncated characteristic values
# stay accurate to a few 1e-9 out to that radius; beyond it they degrade
# quickly, so the square lattice is clipped to the inscribed disk, which
# also makes the reconstruction error independent of the state's
# orientation.
CHAR_LATTICE_HALFWIDTH = 10.0
CHAR_LATTICE_POINTS = 160


def wigner_from_rho(
    rho: np.ndarray,
    grid: GridSpec,
    *,
    lattice_halfwidth: float = CHAR_LATTICE_HALFWIDTH,
    lattice_points: int = CHAR_LATTICE_POINTS,
) -> np.ndarray:
    """Wigner function of ``rho`` sampled on ``grid``, via the
    characteristic function.

    Evaluates Tr[rho D(chi)] on a midpoint (xi, eta) lattice and applies
    the inverse Fourier integral
    W(x, p) = (2 pi)^{-2} iint e^{-i (xi x + eta p)} Tr[rho D(chi)] dxi deta
    as a discrete sum.  Returns W with shape (grid.nx, grid.np), W[i, j]
    at (x_i, p_j).

    Raises :class:`CutoffError` when the window misses mean +- 6 sigma of
    the state, when the truncation tail budget is exceeded, or when the
    reconstruction fails its own consistency checks (imaginary residue,
    normalisation).
    """
    tail = tail_population(rho)
    if tail > TAIL_TOL:
        raise CutoffError("state is not resolved by the truncated basis", tail_mass=tail)
    mean, cov = moments(rho)
    sx, sp_ = np.sqrt(cov[0, 0]), np.sqrt(cov[1, 1])
    if (grid.x_min > mean[0] - 6 * sx or grid.x_max < mean[0] + 6 * sx
            or grid.p_min > mean[1] - 6 * sp_ or grid.p_max < mean[1] + 6 * sp_):
        raise CutoffError("grid window smaller than mean +- 6 sigma of the state")

    step = 2.0 * lattice_halfwidth / lattice_points
    nodes = -lattice_halfwidth + step * (np.arange(lattice_points) + 0.5)
    char = characteristic_from_rho(rho, nodes[:, None], nodes[None, :])
    char *= (nodes[:, None] ** 2 + nodes[None, :] ** 2) <= lattice_halfwidth**2

    x = grid.x_axis()
    p = grid.p_axis()
    ex = np.exp(-1j * np.outer(x, nodes))  # (nx, n_lattice)
    ep = np.exp(-1j * np.outer(nodes, p))  # (n_lattice, np)
    w_complex = ex @ char @ ep * (step**2 / (2.0 * np.pi) ** 2)

    imag_residue = float(np.abs(w_complex.imag).max())
    if imag_residue > 1e-9:
        raise CutoffError(f"Wigner reconstruction imaginary residue {imag_residue:.2e} > 1e-9")
    w = w_complex.real

    wx = np.full(grid.nx, x[1] - x[0])
    wx[[0, -1]] *= 0.5
    wp = np.full(grid.np, p[1] - p[0])
    wp[[0, -1]] *= 0.5
    total = float(wx @ w @ wp)
    if abs(total - 1.0) > 1e-5:
        raise CutoffError(f"reconstructed Wigner function integrates to {total:.8f}, not 1")
    return w
