"""
Random bipartite graphs G(n, n, p)
==================================

Sample a few graphs, count their independent sets exactly, and compare the
sequence against the binomial sandwich 2 C(n,t) <= i_t <= 2 (1 + x(t)) C(n,t).
"""

# %%
# One sample
# ----------
from fractions import Fraction
from math import comb

import numpy as np

from indseq import RngSpec, coefficient_sandwich, profile, sample_bipartite
from indseq.experiments import ExperimentConfig, run_experiment

b = sample_bipartite(10, Fraction(1, 2), RngSpec(seed=7, stream=0))
prof = profile(b)
print("edges:", b.num_edges, " K:", prof.K, " m:", prof.m)

rows = coefficient_sandwich(b, prof=prof)
for r in rows:
    print(f"t={r.t:2d}  2C(n,t)={r.lower:5d}  i_t={r.count:5d}  upper={float(r.upper):9.1f}")

# %%
# How much room does x(t) leave?
# ------------------------------
# The ratio i_t / (2 C(n,t)) - 1 is what x(t) has to cover.
slack = np.array([r.count / (2 * comb(10, r.t)) - 1 for r in rows])
xs = np.array([float(x) for x in prof.x_exact[1:]])
print("observed excess:", np.round(slack, 3))
print("x(t):          ", np.round(xs, 3))

# %%
# A seeded batch
# --------------
result = run_experiment(ExperimentConfig(n=12, samples=50, seed=1, p=Fraction(1, 2)))
for key, rate in sorted(result["rates"].items()):
    print(f"{key:32s} {rate:.2f}")
