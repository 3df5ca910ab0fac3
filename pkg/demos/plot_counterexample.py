"""
A graph whose independent set sequence is not unimodal
======================================================

Three disjoint copies of K4 joined to K37.  Every vertex of K37 sees
everything, so it only contributes singletons; the three K4 copies give
12 singletons, 48 pairs and 64 triples.
"""

# %%
# Build the graph from the expression language used by the CLI
# -------------------------------------------------------------
from indseq import analyze, ind_seq, is_real_rooted
from indseq.cli import parse_expression

g = parse_expression("join(union(K4,K4,K4),K37)")
print(g.n, "vertices,", g.num_edges, "edges")

# %%
# Count and classify
# ------------------
seq = ind_seq(g)
verdict = analyze(seq)
print("sequence:", seq)
print("unimodal:", verdict.unimodal, " modes:", verdict.modes)
print("log-concave from index", verdict.logconcave_from)
print("real-rooted:", is_real_rooted(seq))

# %%
# Paths for contrast: Fibonacci totals and real roots
# ---------------------------------------------------
from indseq import path, total_count

for n in range(1, 11):
    p = ind_seq(path(n))
    print(f"P{n:<2d} total={total_count(path(n)):4d} real-rooted={is_real_rooted(p)}")
