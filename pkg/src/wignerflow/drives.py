"""Oscillator and drive parameters.

A :class:`DriveSpec` bundles the oscillator's natural frequency ``omega0``
with one of three drive kinds:

* ``"free"`` -- no drive,
* ``"linear"`` -- a forcing term linear in the ladder operators, with real
  coupling ``g``, complex amplitude ``alpha = (a + i b) / sqrt(2)`` and
  drive frequency ``omega1``,
* ``"quadratic"`` -- a two-photon (squeezing) term with real coupling
  ``kappa``, modulated at twice the natural frequency.

For the linear drive the frequency that actually governs the co-rotating
dynamics is the sum ``Omega = omega0 + omega1``.  At ``Omega = 0`` the
general closed forms divide by zero while their limit stays finite, so the
evolution routines raise :class:`ResonanceError` below a relative threshold
and callers switch to the dedicated resonant branch.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["DriveSpec", "ResonanceError", "RESONANCE_RTOL"]

# |Omega| below RESONANCE_RTOL * omega0 is treated as exactly resonant.
RESONANCE_RTOL = 1e-9


class ResonanceError(ValueError):
    """Raised when a non-resonant formula is evaluated at |Omega| ~ 0."""


@dataclass(frozen=True)
class DriveSpec:
    """Natural frequency plus drive selector.

    Use the :meth:`free`, :meth:`linear` and :meth:`quadratic` constructors
    rather than filling fields by hand; they validate the combination.
    """

    omega0: float
    kind: str = "free"
    g: float = 0.0
    a: float = 0.0
    b: float = 0.0
    omega1: float = 0.0
    kappa: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in ("free", "linear", "quadratic"):
            raise ValueError(f"unknown drive kind {self.kind!r}")
        values = [self.omega0, self.g, self.a, self.b, self.omega1, self.kappa]
        if not all(np.isfinite(values)):
            raise ValueError("drive parameters must be finite")
        if self.omega0 <= 0:
            raise ValueError("omega0 must be positive")

    @classmethod
    def free(cls, omega0: float) -> "DriveSpec":
        return cls(omega0=omega0, kind="free")

    @classmethod
    def linear(cls, omega0: float, g: float, a: float, b: float, omega1: float) -> "DriveSpec":
        return cls(omega0=omega0, kind="linear", g=g, a=a, b=b, omega1=omega1)

    @classmethod
    def quadratic(cls, omega0: float, kappa: float) -> "DriveSpec":
        return cls(omega0=omega0, kind="quadratic", kappa=kappa)

    @property
    def Omega(self) -> float:
        """Co-rotating frequency ``omega0 + omega1`` of the linear drive."""
        self._require("linear")
        return self.omega0 + self.omega1

    @property
    def alpha(self) -> complex:
        """Complex drive amplitude ``(a + i b) / sqrt(2)``."""
        self._require("linear")
        return (self.a + 1j * self.b) / np.sqrt(2.0)

    @property
    def is_resonant(self) -> bool:
        """True when |Omega| is below the resonance threshold."""
        return abs(self.Omega) < RESONANCE_RTOL * self.omega0

    def require_nonresonant(self) -> float:
        """Return Omega, raising :class:`ResonanceError` near Omega = 0."""
        if self.is_resonant:
            raise ResonanceError(
                f"|Omega| = {abs(self.Omega):.3e} is below {RESONANCE_RTOL:g} * omega0; "
                "use the resonant branch"
            )
        return self.Omega

    def _require(self, kind: str) -> None:
        if self.kind != kind:
            raise ValueError(f"operation requires a {kind!r} drive, got {self.kind!r}")
