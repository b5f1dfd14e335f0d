"""Resonant forcing: the circle degenerates into a straight line.

When the drive frequency cancels the natural one (omega1 = -omega0) the
co-rotating potential freezes, and the interaction-picture centroid no
longer circles: it drifts along a straight line of slope a/b at constant
speed, carrying the unchanged contour with it.

Run:  python demos/resonant_drive.py
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from wignerflow import DriveSpec, contour_1e, evolve, ideal_squeezed

DRIVE = DriveSpec.linear(1.0, g=5.0, a=1.0, b=-1.0, omega1=-1.0)  # Omega = 0
STATE0 = ideal_squeezed(-2.0, -np.log(2) / 2)
print(f"drive is resonant: {DRIVE.is_resonant}")


def contour_points(state, n=200):
    e = contour_1e(state)
    phi = np.linspace(0.0, 2 * np.pi, n)
    c, s = np.cos(e.orientation), np.sin(e.orientation)
    x = e.semi_major * np.cos(phi)
    y = e.semi_minor * np.sin(phi)
    return e.center[0] + c * x - s * y, e.center[1] + s * x + c * y


fig, ax = plt.subplots(figsize=(6, 6))
track = np.array([evolve(STATE0, DRIVE, "sip", t).mean for t in np.linspace(0, 0.9, 200)])
ax.plot(track[:, 0], track[:, 1], "k--", lw=0.8)
for t in np.linspace(0.0, 0.9, 5):
    state = evolve(STATE0, DRIVE, "sip", t)  # auto-selects the resonant branch
    style = "C2" if t > 0 else "C0"
    ax.plot(*contour_points(state), style, alpha=0.8)
slope = (track[-1, 1] - track[0, 1]) / (track[-1, 0] - track[0, 0])
ax.set_title(f"resonant transport on a line, slope {slope:+.3f} (= a/b)")
ax.set_xlim(-8, 8)
ax.set_ylim(-8, 8)
ax.set_aspect("equal")

out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
fig.savefig(out / "resonant_drive.png", dpi=120)
print(f"wrote {out / 'resonant_drive.png'}")
