"""The closed-form energy formulas side by side, with corrections."""

import helike
from helike import MethodId

# %% Each formula is a screened-hydrogenic energy; the interpolation slides
# the screening from 1/4 at Z0 up towards 5/16
print("z      sigma(z, 1/2)")
for z in (helike.Z0, 1, 2, 5, 10, 100, 1e6):
    print(f"{z:<8.4g} {helike.screening_sigma(z):.8f}")

# %% Uncorrected energies for the first few ions
header = "z  " + "".join(f"{m.value:>15}" for m in MethodId)
print(header)
for z in range(1, 6):
    print(f"{z:<3}" + "".join(f"{helike.evaluate(m, z):15.6f}" for m in MethodId))

# %% Both corrections grow roughly like z^4; the relativistic one dominates
for z in (1, 2, 5, 10):
    b = helike.corrected_energy("interpolation", z)
    print(f"z={z:<2} base={b.base:.6f} rel={b.relativistic:+.3e} qed={b.qed:+.3e} total={b.total:.6f}")
