"""Phase-space dynamics of a driven quantum harmonic oscillator.

Gaussian Wigner functions evolved in closed form across the Schrodinger,
Heisenberg and interaction pictures, under free, linearly driven and
quadratically driven Hamiltonians, with an exactly truncating Magnus
series for the linear drive and an independent truncated number-basis
oracle for cross-checks.
"""

from .drives import DriveSpec, ResonanceError
from .phase import AffineMap, apply_affine, conjugate, rotation_matrix
from .pictures import (
    Picture,
    TrajectorySample,
    evolve,
    evolve_free_sp,
    evolve_linear_ip,
    evolve_linear_ip_resonant,
    evolve_linear_sp,
    evolve_quadratic_ip,
    evolve_quadratic_sp,
    glissette_residual,
    heisenberg_quadrature_map,
    ip_centroid_radius_sq,
    ip_to_sp,
    to_hip_frame,
    to_hp_frame,
    to_sip_frame,
    trajectory,
)
from .states import (
    ContourEllipse,
    DisplacementSpec,
    GaussianState,
    SqueezeSpec,
    characteristic_value,
    contour_1e,
    ideal_squeezed,
    rotated_state,
    vacuum,
    wigner_value,
)

__version__ = "0.1.0"

__all__ = [
    "AffineMap",
    "ContourEllipse",
    "DisplacementSpec",
    "DriveSpec",
    "GaussianState",
    "Picture",
    "ResonanceError",
    "SqueezeSpec",
    "TrajectorySample",
    "apply_affine",
    "characteristic_value",
    "conjugate",
    "contour_1e",
    "evolve",
    "evolve_free_sp",
    "evolve_linear_ip",
    "evolve_linear_ip_resonant",
    "evolve_linear_sp",
    "evolve_quadratic_ip",
    "evolve_quadratic_sp",
    "glissette_residual",
    "heisenberg_quadrature_map",
    "ideal_squeezed",
    "ip_centroid_radius_sq",
    "ip_to_sp",
    "rotated_state",
    "rotation_matrix",
    "to_hip_frame",
    "to_hp_frame",
    "to_sip_frame",
    "trajectory",
    "vacuum",
    "wigner_value",
    "__version__",
]
