"""How the neglected surface term behaves as the integration cut grows.

The bulk energy integral drops a boundary contribution at the cut radius
ell.  Its magnitude scales like ell^(2d - 3 - u) at large ell, so it only
decays in d=1; from d=2 up it grows, and the scan makes that visible rather
than sweeping it under a tolerance.
"""

import math

from casimir_harmonic import boundary_energy_scan

ells = [2.0, 4.0, 8.0, 16.0, 32.0]

for d, u in ((1, 0.0), (2, 0.0), (3, 0.5)):
    vals = boundary_energy_scan(d, u, ells)
    slope = math.log(vals[-1] / vals[-2]) / math.log(ells[-1] / ells[-2])
    print(f"d={d}, u={u}:")
    for ell, v in zip(ells, vals):
        print(f"  ell={ell:>5.1f}: {v:.6e}")
    print(f"  measured tail slope {slope:+.3f}  "
          f"(expected {2 * d - 3 - u:+.1f})")
    print()
