"""
The weighted threshold n_min(x, delta)
======================================

For x > 0 the graph K_{delta, n-delta} is the strict maximizer of P(G, x)
once n exceeds n_min(x, delta).  The curve falls towards 2 delta, but only
logarithmically in x.
"""

# %%
from fractions import Fraction

import numpy as np

from indseq import n_min, thresholds

th = thresholds(1)
print("C_1 =", th.C_x, " D_1 =", th.D_x)

# %%
# Tabulate on a log grid
# ----------------------
grid = np.logspace(-3, 12, 16)
for delta in (1, 2, 3):
    vals = [float(n_min(Fraction(x), delta)) for x in grid]
    print(f"delta={delta}: " + " ".join(f"{v:8.2f}" for v in vals))
    print(f"          ratio to 2*delta at x=1e12: {vals[-1] / (2 * delta):.3f}")
