"""Brute force against closed form: the truncated number-basis oracle.

Everything the closed-form engine claims is re-derived here the hard way:
the state becomes a dense density matrix on 61 number states, the full
time-dependent Hamiltonian is stepped with midpoint-rule unitaries, and
the Wigner function is rebuilt from displacement-operator expectation
values.  The two routes agree to ~1e-7 on moments and Wigner fields.

Run:  python demos/oracle_crosscheck.py   (takes a few seconds)
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from wignerflow import DriveSpec, evolve_linear_sp, fock, ideal_squeezed, wigner_value

S = -np.log(2) / 2
DRIVE = DriveSpec.linear(1.0, g=1.0, a=1.0, b=-1.0, omega1=2.0)
STATE0 = ideal_squeezed(-2.0, S)
CUTOFF, T = 60, 1.5

rho = fock.ideal_squeezed_density(-2.0, S, CUTOFF)
steps = fock.default_steps(DRIVE, T)
rho = fock.propagate(rho, fock.sp_hamiltonian(DRIVE, CUTOFF), T, steps)
print(f"propagated {steps} midpoint steps; "
      f"truncation tail {fock.tail_population(rho):.1e}, purity {fock.purity(rho):.12f}")

state = evolve_linear_sp(STATE0, DRIVE, T)
mean, cov = fock.moments(rho)
print(f"mean delta: {np.abs(mean - state.mean).max():.2e}")
print(f"cov delta:  {np.abs(cov - state.cov).max():.2e}")

grid = fock.GridSpec.around(state.mean, state.cov, sigmas=8.0, nx=101, np_=101)
w_oracle = fock.wigner_from_rho(rho, grid)
xg, pg = np.meshgrid(grid.x_axis(), grid.p_axis(), indexing="ij")
w_closed = wigner_value(state, np.stack([xg, pg], axis=-1))
print(f"Wigner sup delta: {np.abs(w_oracle - w_closed).max():.2e}")

fig, axes = plt.subplots(1, 3, figsize=(13, 4))
for ax, field, title in ((axes[0], w_closed, "closed form"),
                         (axes[1], w_oracle, "number-basis oracle")):
    ax.contourf(grid.x_axis(), grid.p_axis(), field.T, levels=24)
    ax.set_title(title)
    ax.set_aspect("equal")
im = axes[2].pcolormesh(grid.x_axis(), grid.p_axis(), (w_oracle - w_closed).T, cmap="RdBu")
axes[2].set_title("difference")
axes[2].set_aspect("equal")
fig.colorbar(im, ax=axes[2])

out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
fig.tight_layout()
fig.savefig(out / "oracle_crosscheck.png", dpi=120)
print(f"wrote {out / 'oracle_crosscheck.png'}")
