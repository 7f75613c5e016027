"""Renormalized vacuum stress across the trap, and how to read the pieces.

The renormalized expectation value at radius r splits as

    vev = k^(d+1) * (t0 + M * t1),    M = euler_gamma + 2 ln(2 kappa / k),

so t1 carries all of the dependence on the arbitrary scale kappa.  In even
dimensions t1 vanishes identically and the answer is scale-free.
"""

import numpy as np

from casimir_harmonic import (
    HarmonicConfig,
    conformal_split,
    stress_component,
    xi_conformal,
)

d = 3
cfg = HarmonicConfig(d=d, k=1.0, kappa=1.0, xi=xi_conformal(d))

print(f"d={d}, conformal coupling xi={cfg.xi:.6f}, kappa/k=1")
print(f"{'r':>5} {'tt':>14} {'rr':>14} {'angular (reduced)':>18}")
for r in np.linspace(0.0, 2.0, 5):
    vals = [stress_component(cfg, comp, float(r)).vev
            for comp in ("tt", "rr", "theta1theta1_reduced")]
    print(f"{r:>5.2f} {vals[0]:>14.6e} {vals[1]:>14.6e} {vals[2]:>18.6e}")

print()
print("Scale dependence lives entirely in t1 (d=3 has one; d=2 does not):")
for dd in (2, 3):
    c = HarmonicConfig(d=dd, k=1.0, kappa=1.0, xi=xi_conformal(dd))
    sv = stress_component(c, "tt", 0.5)
    print(f"  d={dd}: t0={sv.t0:+.6e}  t1={sv.t1:+.6e}")

print()
print("Any coupling decomposes into the conformal value plus a slope term:")
sv_any = stress_component(HarmonicConfig(d=3, k=1.0, kappa=1.0, xi=0.3),
                          "tt", 0.5)
split = conformal_split(HarmonicConfig(d=3, k=1.0, kappa=1.0, xi=0.3),
                        "tt", 0.5)
xi_c = xi_conformal(3)
recon = split["diamond"].t0 + (0.3 - xi_c) * split["square"].t0
print(f"  direct t0           : {sv_any.t0:+.12e}")
print(f"  diamond + dxi*square: {recon:+.12e}")
