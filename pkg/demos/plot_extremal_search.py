"""
Who has the most independent sets under a degree constraint?
============================================================

Exhaustive search over all isomorphism classes with minimum degree at
least delta, compared with K_{delta, n-delta}.
"""

# %%
# The five-vertex tie
# -------------------
from indseq import probe_conjecture3, read_graph6, verify_fixed_size, verify_max_total

rep = verify_max_total(5, 2)
print("max:", rep.max_value, " unique:", rep.unique)
for code in rep.maximizers:
    g = read_graph6(code.decode())
    print("  ", code.decode(), "edges:", g.edges())

# %%
# Scan delta = 1, 2 over n <= 7
# -----------------------------
for delta in (1, 2):
    for row in probe_conjecture3(delta, range(2, 8)):
        print(row)

# %%
# Fixed size t = 2 prefers few edges
# -----------------------------------
rep = verify_fixed_size(7, 1, 2)
print("i_2 max:", rep.max_value, "from", [c.decode() for c in rep.maximizers])
print("star value:", rep.kdn_value)
