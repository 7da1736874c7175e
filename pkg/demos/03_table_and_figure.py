"""Experiment versus the corrected formulas for H- through Ne8+.

The same numbers are available from the command line as
``helike table`` and ``helike figure``. Pass ``--plot`` to draw the
relative differences with matplotlib, if installed.
"""

import sys

import helike

refs = helike.bundled_reference()

# %% Table: experimental energy and the two corrected theories
print(f"{'z':>2} {'ion':>5} {'experiment':>12} {'interp':>12} {'hylleraas':>12}")
for row in helike.table_rows(refs, p=0.5):
    print(f"{row.z:>2} {row.symbol:>5} {row.e_exp:12.6f} {row.e_interp_corrected:12.6f} {row.e_hylleraas_corrected:12.6f}")

# %% Relative differences (E_e - E_t)/E_e; positive means theory is less bound
fig = helike.figure_rows(refs, p=0.5)
for f in fig:
    print(f"z={f.z:<2}  interp {f.rel_diff_interp:+.2e}   hylleraas {f.rel_diff_hylleraas:+.2e}")

# %%
if "--plot" in sys.argv:
    import matplotlib.pyplot as plt

    zs = [f.z for f in fig]
    plt.plot(zs, [f.rel_diff_interp for f in fig], "s", label="interpolation")
    plt.plot(zs, [f.rel_diff_hylleraas for f in fig], "o", label="Hylleraas")
    plt.axhline(0, color="k", lw=0.5)
    plt.xlabel("Z")
    plt.ylabel("(E_e - E_t) / E_e")
    plt.legend()
    plt.savefig("relative_differences.png", dpi=150)
    print("wrote relative_differences.png")
