"""Pair energies over distance
==============================

The docking score is built from two pair terms: a Lennard-Jones curve
A/r^12 - B/r^6 and a Coulomb curve k*q1*q2/(eps*r).  Outside the
0.7-2.7 A proximity window a residue contributes a flat penalty instead
of a pair energy.  This script plots both terms and marks the window.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from pocketswarm import COULOMB_CONSTANT, EnergyConfig, PairParams, coulomb_energy, lj_energy

out_dir = Path(__file__).parent / "output"
out_dir.mkdir(exist_ok=True)

config = EnergyConfig()
params = PairParams(a=9.0, b=6.2)  # a typical catalog pair
r = np.linspace(0.8, 4.0, 400)

lj = np.array([lj_energy(params, ri) for ri in r])
attract = np.array([coulomb_energy(1.0, -1.0, ri, config) for ri in r])
repel = np.array([coulomb_energy(1.0, 1.0, ri, config) for ri in r])

# the analytic Lennard-Jones minimum sits at (2A/B)^(1/6)
r_star = (2 * params.a / params.b) ** (1 / 6)
print(f"LJ minimum at r* = {r_star:.4f} A, depth {-params.b**2 / (4 * params.a):.4f} kcal/mol")
print(f"Coulomb prefactor k = {COULOMB_CONSTANT:.4f} kcal*A/(mol*e^2)")

fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4), sharex=True)

ax1.plot(r, lj, label="A/r$^{12}$ - B/r$^6$")
ax1.axvline(r_star, color="gray", ls=":", label=f"r* = {r_star:.3f} A")
ax1.set_ylim(-1.5, 3)
ax1.set_title("Van der Waals pair term")
ax1.set_xlabel("separation (A)")
ax1.set_ylabel("energy (kcal/mol)")

ax2.plot(r, attract, label="opposite charges")
ax2.plot(r, repel, label="like charges")
ax2.set_ylim(-600, 600)
ax2.set_title("Electrostatic pair term")
ax2.set_xlabel("separation (A)")

for ax in (ax1, ax2):
    ax.axvspan(config.r_min, config.r_max, color="green", alpha=0.08, label="proximity window")
    ax.axhline(0, color="black", lw=0.5)
    ax.legend(fontsize=8)

fig.tight_layout()
fig.savefig(out_dir / "energy_terms.png", dpi=120)
print(f"wrote {out_dir / 'energy_terms.png'}")
