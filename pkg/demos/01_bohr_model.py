"""Bohr's correlated two-electron model.

With both electrons pinned on opposite sides of the nucleus (r1 = -a r2) the
energy is a closed-form function of the ratio a. This walk-through scans it,
minimizes it and finds the charge below which the model ion falls apart.
"""

import numpy as np

import helike

# %% The energy surface is symmetric under a -> 1/a and bottoms out at a = 1
for row in helike.scan_rows(z=2, n=1, a_min=0.25, a_max=4.0, count=9):
    print(f"a = {row.a:7.4f}   E = {row.e:.6f}")

# %% The minimizer agrees, for every small integer charge
for z in range(1, 6):
    res = helike.optimal_correlation(z)
    print(f"z = {z}: a* = {res.a_star:.9f}, E = {res.e_min:.6f}, -(z-1/4)^2 = {-(z - 0.25) ** 2:.6f}")

# %% ...but not for very small charges, where the edge of the search window wins
res = helike.optimal_correlation(0.5)
print(f"z = 0.5: a* = {res.a_star:g} (at_boundary={res.at_boundary}), E = {res.e_min:.6f}")

# %% Critical charge: where removing one electron stops costing energy
z0 = helike.critical_charge()
print(f"Z0 closed form = {z0:.15f}")
print(f"Z0 bisection   = {helike.critical_charge_numeric():.15f}")
zs = np.array([0.8, z0, 0.9, 1.0, 2.0])
print("I(1, z) =", [round(helike.ionization_energy(1.0, z), 6) for z in zs])
