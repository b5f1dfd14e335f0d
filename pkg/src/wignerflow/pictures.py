"""Closed-form Gaussian evolution in the four pictures.

Every unitary considered here (free rotation, linear forcing, two-photon
squeezing) is a Gaussian channel, so states evolve by affine phase-space
maps: the mean moves, the covariance is conjugated, and det Sigma = 1/4 is
preserved exactly.

Picture dictionary, for an initial state with mean mu0 and covariance S0:

========  ==================================================================
sp        Schrodinger: mean and covariance rotate clockwise by omega0*t on
          top of any drive-induced displacement or breathing.
hp        Heisenberg: the co-rotating frame r' = R(omega0 t) r; a freely
          evolving state is static here.
sip       Schrodinger interaction: same frame r', but the drive still acts;
          the state carries only the drive part of the motion.
hip       Heisenberg interaction: frame r'' which additionally undoes the
          drive displacement; the state is static even when driven.
========  ==================================================================

Free evolution and the linear drive leave the covariance alone (up to the
global rotation); the quadratic drive rescales the two variances by
exp(-2 kappa t) and exp(+2 kappa t) -- the "breathing" of the contour.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .drives import DriveSpec, ResonanceError
from .phase import rotation_matrix
from .states import GaussianState

__all__ = [
    "Picture",
    "TrajectorySample",
    "evolve_free_sp",
    "heisenberg_quadrature_map",
    "to_hp_frame",
    "evolve_linear_ip",
    "evolve_linear_ip_resonant",
    "evolve_linear_sp",
    "ip_centroid_radius_sq",
    "glissette_residual",
    "evolve_quadratic_ip",
    "evolve_quadratic_sp",
    "to_sip_frame",
    "to_hip_frame",
    "ip_to_sp",
    "evolve",
    "trajectory",
]


class Picture(str, Enum):
    """Which picture a state or trajectory is expressed in."""

    SP = "sp"
    HP = "hp"
    SIP = "sip"
    HIP = "hip"


@dataclass(frozen=True)
class TrajectorySample:
    """State of the oscillator at one sample time, in a given picture."""

    t: float
    state: GaussianState
    picture: Picture


def evolve_free_sp(state: GaussianState, omega0: float, t: float) -> GaussianState:
    """Free Schrodinger-picture evolution: rigid clockwise rotation.

    mean -> R(-omega0 t) mean,  cov -> R(-omega0 t) cov R(omega0 t).
    The contour therefore circles the origin and tilts by the same angle.
    """
    return state.transformed(rotation_matrix(-omega0 * t))


def heisenberg_quadrature_map(omega0: float, t: float) -> np.ndarray:
    """Matrix propagating the quadrature operators under free evolution.

    x(t) = x cos(omega0 t) + p sin(omega0 t), p(t) = -x sin + p cos; the
    matrix equals R(-omega0 t) and composes over time like a rotation.
    """
    return rotation_matrix(-omega0 * t)


def to_hp_frame(state: GaussianState, omega0: float, t: float) -> GaussianState:
    """Express a Schrodinger-picture state in the co-rotating frame.

    The frame change r' = R(omega0 t) r undoes the free rotation, so a
    freely evolved state maps back to its initial state exactly: the
    Heisenberg-picture Wigner function is static.
    """
    return state.transformed(rotation_matrix(omega0 * t))


def _linear_drive_shift(drive: DriveSpec, t: float) -> np.ndarray:
    """Interaction-picture displacement (g/Omega) (1 - R(Omega t)) (a, -b)."""
    omega = drive.require_nonresonant()
    v = np.array([drive.a, -drive.b])
    return (drive.g / omega) * (v - rotation_matrix(omega * t) @ v)


def evolve_linear_ip(state: GaussianState, drive: DriveSpec, t: float) -> GaussianState:
    """Linearly driven evolution in the interaction picture.

    The covariance is untouched (the returned state shares the input's
    covariance array); the mean is parallel-transported along a circle of
    time-dependent radius centred on the initial mean:

        mean(t) = mean0 + (g/Omega) [(a, -b) - R(Omega t) (a, -b)].

    Raises :class:`ResonanceError` when Omega ~ 0; use
    :func:`evolve_linear_ip_resonant` there.
    """
    drive._require("linear")
    return state.with_mean(state.mean + _linear_drive_shift(drive, t))


def evolve_linear_ip_resonant(state: GaussianState, drive: DriveSpec, t: float) -> GaussianState:
    """Interaction-picture evolution at resonance (omega1 = -omega0).

    The co-rotating potential is time-independent, so the mean drifts on a
    straight line, mean(t) = mean0 + (-g b t, -g a t), with slope a/b; the
    covariance is untouched.
    """
    drive._require("linear")
    shift = np.array([-drive.g * drive.b * t, -drive.g * drive.a * t])
    return state.with_mean(state.mean + shift)


def evolve_linear_sp(state: GaussianState, drive: DriveSpec, t: float) -> GaussianState:
    """Linearly driven evolution in the Schrodinger picture.

    Covariance as in free evolution; the mean combines the clockwise
    rotation of the initial displacement with two counter-rotating images
    of the drive displacement:

        mean(t) = R(-omega0 t) mean0
                  + (g/Omega) [R(-omega0 t) (a, -b) - R(omega1 t) (a, -b)].
    """
    drive._require("linear")
    omega = drive.require_nonresonant()
    v = np.array([drive.a, -drive.b])
    rot = rotation_matrix(-drive.omega0 * t)
    mean = rot @ state.mean + (drive.g / omega) * (rot @ v - rotation_matrix(drive.omega1 * t) @ v)
    return GaussianState(mean=mean, cov=rot @ state.cov @ rot.T)


def ip_centroid_radius_sq(drive: DriveSpec, t: float) -> float:
    """Squared distance of the interaction-picture mean from its start.

    Equals 2 (g/Omega)^2 (a^2 + b^2) (1 - cos Omega t): the centroid moves
    on a circle whose radius breathes with the drive phase.
    """
    omega = drive.require_nonresonant()
    return float(
        2.0 * (drive.g / omega) ** 2 * (drive.a**2 + drive.b**2) * (1.0 - np.cos(omega * t))
    )


def glissette_residual(state0: GaussianState, drive: DriveSpec, t: float) -> float:
    """Defect of the glissette law for the Schrodinger-picture centroid.

    With mean0 = (mu_x, 0), the driven centroid keeps a breathing distance
    from the freely rotating point (mu_x cos omega0 t, -mu_x sin omega0 t):

        (x - mu_x cos omega0 t)^2 + (p + mu_x sin omega0 t)^2
            = 2 (g/Omega)^2 (a^2 + b^2) (1 - cos Omega t).

    Returns the absolute difference of the two sides evaluated with
    :func:`evolve_linear_sp`; it should vanish to roundoff.
    """
    mu_x = state0.mean[0]
    mean = evolve_linear_sp(state0, drive, t).mean
    th = drive.omega0 * t
    lhs = (mean[0] - mu_x * np.cos(th)) ** 2 + (mean[1] + mu_x * np.sin(th)) ** 2
    return float(abs(lhs - ip_centroid_radius_sq(drive, t)))


def _breathing_matrix(kappa: float, t: float) -> np.ndarray:
    return np.diag([np.exp(-kappa * t), np.exp(kappa * t)])


def evolve_quadratic_ip(state: GaussianState, drive: DriveSpec, t: float) -> GaussianState:
    """Quadratically driven evolution in the interaction picture.

    The co-rotating generator is a pure squeeze with strength kappa*t: the
    covariance is conjugated by diag(e^{-kappa t}, e^{kappa t}) -- for a
    diagonal covariance the variances simply breathe as
    (sigma_xx e^{-2 kappa t}, sigma_pp e^{+2 kappa t}) -- and the mean is
    rescaled componentwise the same way.  det Sigma is invariant.
    """
    drive._require("quadratic")
    return state.transformed(_breathing_matrix(drive.kappa, t))


def evolve_quadratic_sp(state: GaussianState, drive: DriveSpec, t: float) -> GaussianState:
    """Quadratically driven evolution in the Schrodinger picture.

    The interaction-picture breathing followed by the free clockwise
    rotation: cov = R(-omega0 t) cov_IP(t) R(omega0 t), and likewise for
    the mean.
    """
    drive._require("quadratic")
    matrix = rotation_matrix(-drive.omega0 * t) @ _breathing_matrix(drive.kappa, t)
    return state.transformed(matrix)


def to_sip_frame(state: GaussianState, omega0: float, t: float) -> GaussianState:
    """Map a Schrodinger-picture state to the Schrodinger interaction picture.

    The counterclockwise frame rotation r' = R(omega0 t) r removes the free
    part of the motion, leaving exactly the interaction-picture state: for
    a linearly driven state this reproduces :func:`evolve_linear_ip`.
    """
    return state.transformed(rotation_matrix(omega0 * t))


def ip_to_sp(state: GaussianState, omega0: float, t: float) -> GaussianState:
    """Inverse of :func:`to_sip_frame`: rotate an IP state back to the SP."""
    return state.transformed(rotation_matrix(-omega0 * t))


def to_hip_frame(state: GaussianState, drive: DriveSpec, t: float) -> GaussianState:
    """Map a linearly driven Schrodinger-picture state to the frame where
    nothing moves.

    Composes the counterclockwise rotation with the removal of the drive
    displacement, r'' = R(omega0 t) r - (g/Omega)(1 - R(Omega t))(a, -b).
    Applied to the output of :func:`evolve_linear_sp` at the same (drive, t)
    it returns the initial state; with g = 0 it reduces to
    :func:`to_hp_frame`.
    """
    drive._require("linear")
    rotated = state.transformed(rotation_matrix(drive.omega0 * t))
    return rotated.with_mean(rotated.mean - _linear_drive_shift(drive, t))


def evolve(state: GaussianState, drive: DriveSpec, picture: Picture, t: float) -> GaussianState:
    """Evolve ``state`` for time ``t`` and express it in ``picture``.

    Dispatches on the drive kind and handles the resonant linear drive by
    switching to the straight-line branch automatically.  In the ``hp`` and
    ``hip`` pictures the state is static by construction, so the initial
    state is returned (``hp`` is only defined for the free oscillator,
    ``hip`` for the free or linearly driven one).
    """
    picture = Picture(picture)
    if picture is Picture.HP and drive.kind != "free":
        raise ValueError("the hp picture is static only for the free oscillator")
    if picture is Picture.HIP and drive.kind == "quadratic":
        raise ValueError("the hip picture is not defined for the quadratic drive")
    if picture in (Picture.HP, Picture.HIP):
        return state

    if drive.kind == "free":
        if picture is Picture.SP:
            return evolve_free_sp(state, drive.omega0, t)
        return state  # sip: no drive, the co-rotating state is static
    if drive.kind == "linear":
        if drive.is_resonant:
            ip_state = evolve_linear_ip_resonant(state, drive, t)
            if picture is Picture.SIP:
                return ip_state
            return ip_to_sp(ip_state, drive.omega0, t)
        if picture is Picture.SIP:
            return evolve_linear_ip(state, drive, t)
        return evolve_linear_sp(state, drive, t)
    # quadratic
    if picture is Picture.SIP:
        return evolve_quadratic_ip(state, drive, t)
    return evolve_quadratic_sp(state, drive, t)


def trajectory(
    state: GaussianState,
    drive: DriveSpec,
    picture: Picture,
    times: np.ndarray,
) -> list[TrajectorySample]:
    """Sample the evolution at the given times (uniform grids preferred)."""
    picture = Picture(picture)
    return [TrajectorySample(float(t), evolve(state, drive, picture, float(t)), picture) for t in times]


def default_samples(drive: DriveSpec, t_max: float, per_period: int = 256) -> int:
    """Sample count giving ``per_period`` points per cycle of the slowest
    relevant frequency (omega0, |omega1| and |Omega| for a linear drive)."""
    freqs = [drive.omega0]
    if drive.kind == "linear":
        freqs += [abs(drive.omega1), abs(drive.omega0 + drive.omega1)]
    slowest = min(f for f in freqs if f > 0)
    return max(2, int(np.ceil(per_period * t_max * slowest / (2.0 * np.pi))))
