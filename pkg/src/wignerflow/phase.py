"""Real 2x2 linear algebra on the (x, p) phase plane.

Everything here works on plain float64 ndarrays: phase-space points are
shape ``(2,)`` vectors (or batches ``(..., 2)``), transformations are
``(2, 2)`` matrices.  Angles are in radians; hbar = 1 and unit mass
throughout the package, so x and p are dimensionless.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = ["rotation_matrix", "apply_affine", "conjugate", "AffineMap"]


def rotation_matrix(theta: float) -> np.ndarray:
    """Counterclockwise rotation of the phase plane by ``theta``.

    Returns ``[[cos t, -sin t], [sin t, cos t]]``; the inverse is the
    transpose, i.e. ``rotation_matrix(-theta)``.
    """
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def apply_affine(matrix: np.ndarray, shift: np.ndarray, r: np.ndarray) -> np.ndarray:
    """Evaluate the affine map ``matrix @ r + shift``.

    ``r`` may be a single ``(2,)`` point or a batch ``(..., 2)``.
    """
    r = np.asarray(r, dtype=float)
    return r @ np.asarray(matrix, dtype=float).T + np.asarray(shift, dtype=float)


def conjugate(matrix: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Return ``matrix @ a @ matrix.T``.

    This is how a quadratic form or covariance transforms under the linear
    map ``matrix``; conjugation by a rotation preserves symmetry,
    positive-definiteness and the determinant of ``a``.
    """
    m = np.asarray(matrix, dtype=float)
    return m @ np.asarray(a, dtype=float) @ m.T


@dataclass(frozen=True)
class AffineMap:
    """A linear map plus shift: ``r -> matrix @ r + shift``."""

    matrix: np.ndarray
    shift: np.ndarray

    def __call__(self, r: np.ndarray) -> np.ndarray:
        return apply_affine(self.matrix, self.shift, r)

    def then(self, outer: "AffineMap") -> "AffineMap":
        """Composition ``outer after self`` as a single affine map."""
        return AffineMap(
            matrix=np.asarray(outer.matrix) @ np.asarray(self.matrix),
            shift=apply_affine(outer.matrix, outer.shift, self.shift),
        )
