import random
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indseq.canonical import canonical
from indseq.enumeration import enumerate_graphs
from indseq.graph_core import Graph, cycle, path
from indseq.ind_poly import ind_seq
from indseq.seq_analysis import (
    analyze,
    count_distinct_real_roots,
    final_third_start,
    half_mode_membership,
    has_mode_at,
    is_log_concave,
    is_real_rooted,
    real_root_count,
    squarefree_factors,
)
from fractions import Fraction


def binom_row(n):
    return tuple(comb(n, t) for t in range(n + 1))


def test_counterexample_verdict():
    v = analyze((1, 49, 48, 64))
    assert not v.unimodal
    assert v.modes == (3,) and has_mode_at(v, 3)
    assert v.logconcave_from == 2
    assert v.increasing_prefix_len == 1


def test_plateau_and_c5():
    v = analyze((1, 3, 3, 1))
    assert v.unimodal and v.modes == (1, 2)
    v = analyze((1, 5, 5))
    assert v.unimodal and v.logconcave_from == 0 and v.increasing_prefix_len == 2


def test_errors():
    for bad in [(), (1, 0, 1), (1, -2)]:
        with pytest.raises(ValueError):
            analyze(bad)
    with pytest.raises(IndexError):
        is_log_concave((1, 2, 1), 3)
    with pytest.raises(IndexError):
        is_log_concave((1, 2, 1), -1)


def test_is_log_concave():
    assert is_log_concave(binom_row(10), 0)
    assert not is_log_concave((1, 49, 48, 64), 1)
    assert is_log_concave((1, 49, 48, 64), 2)
    assert is_log_concave((3, 1), 0) and is_log_concave((3, 1), 1)


def test_modes_of_binomial_rows():
    v = analyze(binom_row(10))
    assert v.modes == (5,) and half_mode_membership(v, 10) == {"floor": True, "ceil": True}
    v = analyze(binom_row(9))
    assert has_mode_at(v, 4) and has_mode_at(v, 5)
    v = analyze((1, 7, 10, 4))
    assert half_mode_membership(v, 3) == {"floor": False, "ceil": True}


def test_final_third():
    assert [final_third_start(a) for a in range(1, 8)] == [1, 1, 2, 3, 3, 4, 5]
    assert analyze((1, 6, 9, 8, 8)).decreasing_from_final_third
    assert not analyze((1, 6, 9, 8, 9)).decreasing_from_final_third
    assert analyze((1,)).decreasing_from_final_third


def test_real_rooted_examples():
    assert ind_seq(path(4)) == (1, 4, 3) and is_real_rooted((1, 4, 3))
    assert is_real_rooted((1, 5, 5))
    assert not is_real_rooted((1, 1, 1))
    assert is_real_rooted((1,)) and is_real_rooted((1, 9))
    assert is_real_rooted((1, 2, 1))  # double root
    assert is_real_rooted((0, 0, 1, 3, 2))  # x^2 (x+1)(2x+1)
    assert not is_real_rooted((1, 0, 1))
    assert real_root_count((1, 3, 3, 1)) == 3
    assert real_root_count((1, 2, 2, 1)) == 1  # (x+1)(x^2+x+1)


def test_squarefree_decomposition():
    # (x+1)^3 (x-2)
    p = [Fraction(c) for c in np.polynomial.polynomial.polymul([1, 3, 3, 1], [-2, 1]).astype(int)]
    factors = squarefree_factors(p)
    assert sorted(m for _, m in factors) == [1, 3]
    assert count_distinct_real_roots(p) == 2


def test_chain_over_all_small_graphs():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            seq = ind_seq(g)
            v = analyze(seq)
            if is_real_rooted(seq):
                assert is_log_concave(seq, 0)
            if is_log_concave(seq, 0):
                assert v.logconcave_from == 0 and v.unimodal
            if v.unimodal:
                lo, hi = min(v.modes), max(v.modes)
                assert v.modes == tuple(range(lo, hi + 1))


def line_graph(edges: list[tuple[int, int]]) -> Graph:
    m = len(edges)
    rows = [0] * m
    for i in range(m):
        for j in range(i):
            if set(edges[i]) & set(edges[j]):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(m, tuple(rows))


def edge_sets_up_to(max_edges: int):
    """One edge list per isomorphism class of graphs without isolated vertices."""
    layer = {b"": []}
    out = []
    for _ in range(max_edges):
        nxt = {}
        for edges in layer.values():
            nv = 1 + max((v for e in edges for v in e), default=-1)
            cand = [(i, j) for j in range(nv + 2) for i in range(min(j, nv + 1))]
            for e in cand:
                if e in edges:
                    continue
                new = edges + [e]
                k = 1 + max(v for f in new for v in f)
                rows = [0] * k
                for a, b in new:
                    rows[a] |= 1 << b
                    rows[b] |= 1 << a
                if any(r == 0 for r in rows):
                    continue
                nxt.setdefault(canonical(Graph(k, tuple(rows))), new)
        layer = nxt
        out.extend(layer.values())
    return out


def test_line_graphs_are_real_rooted():
    sets = edge_sets_up_to(7)
    # graphs without isolated vertices and 1..7 edges
    assert len(sets) == 1 + 2 + 5 + 11 + 26 + 68 + 177
    for edges in sets:
        assert is_real_rooted(ind_seq(line_graph(edges)))


@pytest.mark.parametrize("n", range(3, 13))
def test_paths_and_cycles_are_real_rooted(n):
    assert is_real_rooted(ind_seq(path(n)))
    assert is_real_rooted(ind_seq(cycle(n)))


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-6, 6).filter(lambda r: r != 0), min_size=1, max_size=6), st.integers(0, 4))
def test_root_count_against_product_form(roots, extra_pairs):
    # prod (x - r) * (x^2 + 1)^extra_pairs has exactly len(roots) real roots
    poly = np.array([1], dtype=object)
    for r in roots:
        poly = np.polynomial.polynomial.polymul(poly, np.array([-r, 1], dtype=object))
    for _ in range(extra_pairs):
        poly = np.polynomial.polynomial.polymul(poly, np.array([1, 0, 1], dtype=object))
    coeffs = [int(c) for c in poly]
    assert real_root_count(coeffs) == len(roots)


def test_random_sequences_against_numpy():
    rng = random.Random(11)
    for _ in range(300):
        seq = [rng.randint(1, 30) for _ in range(rng.randint(1, 6))]
        roots = np.roots(seq[::-1])
        numeric = all(abs(r.imag) < 1e-6 for r in roots)
        disc_margin = min((abs(r.imag) for r in roots if abs(r.imag) > 1e-9), default=1.0)
        if disc_margin > 1e-3 or numeric:
            assert is_real_rooted(seq) == numeric, seq
