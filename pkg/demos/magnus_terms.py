"""Why the driven-oscillator propagator is exact: the series stops.

For a forcing term linear in the ladder operators, the commutator of the
co-rotating potential with itself at two times is a plain number, so the
exponential series for the time-ordered propagator truncates after two
terms: a displacement (first term) and a global phase (second term).  The
quadrature routes below evaluate the defining integrals numerically and
land on the closed forms; the third term's residual is identically zero.

Run:  python demos/magnus_terms.py
"""

import numpy as np

from wignerflow import DriveSpec
from wignerflow.magnus import (
    displacement_mean_shift,
    magnus_a1_analytic,
    magnus_a1_numeric,
    magnus_a2_analytic,
    magnus_a2_numeric,
    magnus_a3_numeric,
    unitary_ip,
)

DRIVE = DriveSpec.linear(1.0, g=5.0, a=1.0, b=-1.0, omega1=2.0)  # Omega = 3

print(f"{'t':>8} {'|beta| (displacement)':>22} {'|A1 quad err|':>14} "
      f"{'phase A2':>10} {'|A2 quad err|':>14} {'A3 residual':>12}")
for t in np.linspace(0.2, 2 * np.pi, 8):
    beta = magnus_a1_analytic(DRIVE, t)
    phi = magnus_a2_analytic(DRIVE, t)
    print(f"{t:8.3f} {abs(beta):22.6f} "
          f"{abs(magnus_a1_numeric(DRIVE, t) - beta):14.2e} "
          f"{phi:10.4f} {abs(magnus_a2_numeric(DRIVE, t) - phi):14.2e} "
          f"{magnus_a3_numeric(DRIVE, t):12.2e}")

# the displacement parameter is the whole story for the state:
t = 1.1
phase, beta = unitary_ip(DRIVE, t)
print(f"\npropagator at t = {t}: global phase {phase:.4f} (unobservable), "
      f"mean shift {displacement_mean_shift(beta).round(6)}")

# after one drive period the displacement closes its loop
t_period = 2 * np.pi / DRIVE.Omega
print(f"displacement after one drive period: {abs(magnus_a1_analytic(DRIVE, t_period)):.2e}")
