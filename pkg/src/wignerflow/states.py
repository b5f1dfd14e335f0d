"""Gaussian states on phase space.

A pure Gaussian state is fully described by the mean vector ``mu`` and the
2x2 covariance matrix ``Sigma`` of its Wigner function

    W(r) = (1 / pi) * exp(-(r - mu)^T Sigma^{-1} (r - mu) / 2),

normalised because pure states satisfy det Sigma = 1/4.  The vacuum has
Sigma = diag(1/2, 1/2); squeezing by a real strength ``s`` rescales the
variances to ``sigma_x^2 = exp(-2 s) / 2`` and ``sigma_p^2 = exp(2 s) / 2``.

We store the covariance itself rather than its inverse: inverting a 2x2
symmetric positive-definite matrix is exact and cheap, and the covariance
composes directly under affine maps (``Sigma -> M Sigma M^T``), which is
what every evolution routine in :mod:`wignerflow.pictures` does.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .phase import conjugate, rotation_matrix

__all__ = [
    "GaussianState",
    "ContourEllipse",
    "SqueezeSpec",
    "DisplacementSpec",
    "vacuum",
    "ideal_squeezed",
    "wigner_value",
    "characteristic_value",
    "contour_1e",
    "rotated_state",
]


@dataclass(frozen=True)
class GaussianState:
    """Mean vector and covariance matrix of a Gaussian Wigner function."""

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self) -> None:
        mean = np.array(self.mean, dtype=float).reshape(2)
        cov = np.array(self.cov, dtype=float).reshape(2, 2)
        if not (np.all(np.isfinite(mean)) and np.all(np.isfinite(cov))):
            raise ValueError("state parameters must be finite")
        if abs(cov[0, 1] - cov[1, 0]) > 1e-12 * max(1.0, np.abs(cov).max()):
            raise ValueError("covariance must be symmetric")
        cov = 0.5 * (cov + cov.T)
        # 2x2 Sylvester criterion; mixed states (det > 1/4) are tolerated.
        if cov[0, 0] <= 0 or np.linalg.det(cov) <= 0:
            raise ValueError("covariance must be positive-definite")
        mean.setflags(write=False)
        cov.setflags(write=False)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    def transformed(self, matrix: np.ndarray, shift: np.ndarray | None = None) -> "GaussianState":
        """State after the affine phase-space map ``r -> matrix r + shift``."""
        shift = np.zeros(2) if shift is None else np.asarray(shift, dtype=float)
        return GaussianState(
            mean=np.asarray(matrix, dtype=float) @ self.mean + shift,
            cov=conjugate(matrix, self.cov),
        )

    def with_mean(self, mean: np.ndarray) -> "GaussianState":
        return GaussianState(mean=mean, cov=self.cov)


@dataclass(frozen=True)
class ContourEllipse:
    """The 1/e level set of a Gaussian Wigner function.

    ``orientation`` is the angle of the major axis from the x-axis, in
    (-pi/2, pi/2]; it is 0 by convention for circular contours.
    """

    center: np.ndarray
    semi_major: float
    semi_minor: float
    orientation: float


@dataclass(frozen=True)
class SqueezeSpec:
    """Squeezing strength and direction, ``zeta = s * exp(i theta)``.

    The dynamics in this package are implemented for theta = 0 (real
    squeezing along the x-axis).  A rotated squeezing direction can still
    be *prepared* by conjugating the covariance with
    ``rotation_matrix(theta / 2)``, but no evolution routine produces one.
    """

    s: float
    theta: float = 0.0

    def variances(self) -> tuple[float, float]:
        """(sigma_x^2, sigma_p^2) of the squeezed vacuum for theta = 0."""
        return np.exp(-2.0 * self.s) / 2.0, np.exp(2.0 * self.s) / 2.0


@dataclass(frozen=True)
class DisplacementSpec:
    """Real decomposition of a displacement, ``alpha = (a + i b) / sqrt(2)``.

    Displacing the vacuum by ``alpha`` moves the Wigner mean to ``(a, b)``.
    """

    a: float
    b: float

    @property
    def alpha(self) -> complex:
        return (self.a + 1j * self.b) / np.sqrt(2.0)


def vacuum() -> GaussianState:
    """Vacuum state: zero mean, covariance diag(1/2, 1/2)."""
    return GaussianState(mean=np.zeros(2), cov=np.diag([0.5, 0.5]))


def ideal_squeezed(mu_x: float, s: float) -> GaussianState:
    """Ideal squeezed state displaced along x.

    Mean (mu_x, 0) and covariance diag(exp(-2s)/2, exp(2s)/2); the variance
    product sigma_x * sigma_p = 1/2 for every ``s`` (the state is pure).
    """
    sx2, sp2 = SqueezeSpec(s).variances()
    return GaussianState(mean=np.array([float(mu_x), 0.0]), cov=np.diag([sx2, sp2]))


def _inverse_cov(cov: np.ndarray) -> tuple[np.ndarray, float]:
    det = cov[0, 0] * cov[1, 1] - cov[0, 1] * cov[1, 0]
    if det <= 0 or not np.isfinite(det):
        raise ValueError("covariance is singular or indefinite")
    inv = np.array([[cov[1, 1], -cov[0, 1]], [-cov[1, 0], cov[0, 0]]]) / det
    return inv, det


def wigner_value(state: GaussianState, r: np.ndarray) -> np.ndarray | float:
    """Wigner density of ``state`` at phase-space point(s) ``r``.

    ``r`` has shape ``(2,)`` or ``(..., 2)``.  The value is strictly
    positive with peak 1/pi at the mean.
    """
    inv, _ = _inverse_cov(state.cov)
    d = np.asarray(r, dtype=float) - state.mean
    quad = np.einsum("...i,ij,...j->...", d, inv, d)
    out = np.exp(-0.5 * quad) / np.pi
    return float(out) if out.ndim == 0 else out


def characteristic_value(state, xi, eta):
    """Symmetric characteristic function of ``state`` at (xi, eta).

    This is the expectation value of the displacement operator D(chi) with
    chi = (-eta + i xi) / sqrt(2), equivalently <exp(i (xi x + eta p))>:

        exp(i (xi mu_x + eta mu_p) - (xi, eta) Sigma (xi, eta)^T / 2).

    Its 2-D Fourier transform is the Wigner function; the value at the
    origin is exactly 1 and |C| <= 1 everywhere.  ``xi`` and ``eta``
    broadcast together.
    """
    xi = np.asarray(xi, dtype=float)
    eta = np.asarray(eta, dtype=float)
    c = state.cov
    quad = c[0, 0] * xi**2 + 2.0 * c[0, 1] * xi * eta + c[1, 1] * eta**2
    out = np.exp(1j * (xi * state.mean[0] + eta * state.mean[1]) - 0.5 * quad)
    return complex(out) if out.ndim == 0 else out


def contour_1e(state: GaussianState) -> ContourEllipse:
    """Ellipse where the Wigner function has dropped to 1/e of its peak.

    That level set is (r - mu)^T Sigma^{-1} (r - mu) = 2, an ellipse
    centred on the mean with semi-axes sqrt(2 lambda_i) along the
    eigenvectors of the covariance.
    """
    a, c, b = state.cov[0, 0], state.cov[0, 1], state.cov[1, 1]
    half_trace = 0.5 * (a + b)
    radius = np.hypot(0.5 * (a - b), c)
    lam_max = half_trace + radius
    lam_min = half_trace - radius
    # atan2(0, 0) = 0 gives the documented orientation for circular states.
    orientation = 0.5 * np.arctan2(2.0 * c, a - b)
    if orientation <= -np.pi / 2:
        orientation += np.pi
    return ContourEllipse(
        center=state.mean.copy(),
        semi_major=float(np.sqrt(2.0 * lam_max)),
        semi_minor=float(np.sqrt(2.0 * lam_min)),
        orientation=float(orientation),
    )


def rotated_state(state: GaussianState, theta: float) -> GaussianState:
    """State with mean and covariance rotated counterclockwise by theta."""
    return state.transformed(rotation_matrix(theta))
