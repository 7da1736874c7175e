"""How well is the square root in the interpolation formula pinned down?

Solve for the exponent ion by ion, then fit one exponent to all ions.
"""

import helike

refs = helike.bundled_reference()

# %% Per-ion exact solutions drift upward with z
for rec in refs:
    try:
        p = helike.solve_p_for_ion(rec, with_corrections=True)
        print(f"{rec.symbol:>5}: p = {p:.4f}")
    except helike.NoSolutionError as exc:
        print(f"{rec.symbol:>5}: {exc}")

# %% One exponent for the whole sequence, with and without corrections
for corr in (True, False):
    res = helike.fit_global_p(refs, with_corrections=corr)
    print(f"corrections={corr}: p = {res.p:.4f}, objective = {res.objective:.3e}")

# %% Leaving out H-
res = helike.fit_global_p(refs.without([1]))
print(f"z = 2..10 only: p = {res.p:.4f}")

# %% Sanity: data generated by the model itself gives its exponent back
synth = helike.ReferenceSet(
    tuple(helike.IonRecord(z, str(z), helike.interpolated_energy(z, 0.56)) for z in range(1, 11))
)
print(f"synthetic p0 = 0.56 -> {helike.fit_global_p(synth, with_corrections=False).p:.8f}")
