"""Extremal independent-set counts under a minimum-degree constraint.

Closed forms for K_{delta, n-delta}, the weighted threshold constants C_x and
D_x, the Alekseev-type envelope, and exhaustive searches over all
isomorphism classes produced by :mod:`indseq.enumeration`.
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

import mpmath

from .canonical import CanonicalCode, canonical
from .enumeration import DEFAULT_MAX_N, enumerate_graphs
from .graph_core import Graph, complete_bipartite, empty, is_bipartite
from .ind_poly import CoeffSeq, binomial_row, compose_join, evaluate, ind_seq
from .seq_analysis import analyze

PRECISION_BITS = 128
ALEKSEEV_RTOL = mpmath.mpf("1e-12")


def kdn_seq(delta: int, n: int) -> CoeffSeq:
    """Coefficients of (1+x)^(n-delta) + (1+x)^delta - 1."""
    if not 1 <= delta <= n - 1:
        raise ValueError(f"need 1 <= delta <= n-1, got delta={delta}, n={n}")
    return compose_join(binomial_row(n - delta), binomial_row(delta))


def kdn_graph(delta: int, n: int) -> Graph:
    """K_{delta, n-delta}; delta = 0 gives the empty graph."""
    return empty(n) if delta == 0 else complete_bipartite(delta, n - delta)


# ---------------------------------------------------------------- thresholds

@dataclass(frozen=True)
class Threshold:
    x: Fraction
    C_x: mpmath.mpf
    D_x: mpmath.mpf

    def n_min(self, delta: int) -> mpmath.mpf:
        C, D = self.C_x, self.D_x
        return (C - 1) * delta**2 + ((1 - D) * C + 1 + D) * delta - D


def thresholds(x: Fraction | int | str) -> Threshold:
    xq = Fraction(x)
    if xq <= 0:
        raise ValueError("x must be positive")
    with mpmath.workprec(PRECISION_BITS):
        xm = mpmath.mpf(xq.numerator) / xq.denominator
        lg = mpmath.log1p(xm)
        C = lg / (lg - xm / (1 + xm))
        D = 2 * mpmath.log(xm / (1 + xm)) / lg
    return Threshold(xq, C, D)


def n_min(x: Fraction | int | str, delta: int) -> mpmath.mpf:
    """Right-hand side of the vertex-count condition guaranteeing a strict maximum."""
    with mpmath.workprec(PRECISION_BITS):
        return thresholds(x).n_min(delta)


# ---------------------------------------------------------------- Alekseev bound

def alekseev_check(g: Graph, x: Fraction | int | str) -> tuple[bool, bool]:
    """(P(G,x) <= (1 + n x / a)^a,  (1 + n x / a)^a <= (1+x)^a e^{(n-a) x / (1+x)}).

    The first comparison is exact.  The second involves e and is done at
    128-bit precision with relative tolerance 1e-12.
    """
    xq = Fraction(x)
    if xq <= 0:
        raise ValueError("x must be positive")
    seq = ind_seq(g)
    a = len(seq) - 1
    mid = (1 + Fraction(g.n) * xq / a) ** a
    first = evaluate(seq, xq) <= mid
    with mpmath.workprec(PRECISION_BITS):
        xm = mpmath.mpf(xq.numerator) / xq.denominator
        right = (1 + xm) ** a * mpmath.exp((g.n - a) * xm / (1 + xm))
        left = mpmath.mpf(mid.numerator) / mid.denominator
        second = left <= right * (1 + ALEKSEEV_RTOL)
    return first, bool(second)


# ---------------------------------------------------------------- exhaustive search

@dataclass
class ExtremalReport:
    n: int
    delta: int
    objective: str
    max_value: int | Fraction | None
    maximizers: list[CanonicalCode] = field(default_factory=list)
    kdn_value: int | Fraction | None = None
    kdn_is_max: bool = False
    classes: int = 0

    @property
    def unique(self) -> bool:
        return len(self.maximizers) == 1

    def to_dict(self) -> dict:
        def num(v):
            if isinstance(v, Fraction):
                return f"{v.numerator}/{v.denominator}"
            return None if v is None else str(v)

        return {
            "schema": "indseq/1",
            "n": self.n,
            "delta": self.delta,
            "objective": self.objective,
            "max_value": num(self.max_value),
            "maximizers": [c.decode("ascii") for c in self.maximizers],
            "unique": self.unique,
            "kdn_value": num(self.kdn_value),
            "kdn_is_max": self.kdn_is_max,
            "classes": self.classes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _objective(seq: CoeffSeq, objective: str, x: Fraction | None, t: int | None):
    if objective == "i":
        return sum(seq)
    if objective == "P":
        return evaluate(seq, x)
    return seq[t] if t < len(seq) else 0


@lru_cache(maxsize=16)
def class_sequences(n: int, delta: int, max_n: int = DEFAULT_MAX_N) -> tuple[tuple[Graph, CoeffSeq], ...]:
    """(graph, sequence) for every class with min degree >= delta, in enumeration order."""
    return tuple((g, ind_seq(g)) for g in enumerate_graphs(n, delta, max_n=max_n))


def _shard_best(args):
    n, delta, objective, x, t, shard, max_n = args
    if shard is None:
        pairs = class_sequences(n, delta, max_n)
    else:
        pairs = ((g, ind_seq(g)) for g in enumerate_graphs(n, delta, shard=shard, max_n=max_n))
    best = None
    winners: list[Graph] = []
    classes = 0
    for g, seq in pairs:
        classes += 1
        val = _objective(seq, objective, x, t)
        if best is None or val > best:
            best, winners = val, [g]
        elif val == best:
            winners.append(g)
    return best, [canonical(g) for g in winners], classes


@lru_cache(maxsize=64)
def _search(n, delta, objective, x, t, workers, max_n):
    if workers <= 1:
        parts = [_shard_best((n, delta, objective, x, t, None, max_n))]
    else:
        jobs = [(n, delta, objective, x, t, (i, workers), max_n) for i in range(workers)]
        with ProcessPoolExecutor(workers) as pool:
            parts = list(pool.map(_shard_best, jobs))
    best = None
    codes: set[bytes] = set()
    classes = 0
    for val, cs, cnt in parts:
        classes += cnt
        if val is None:
            continue
        if best is None or val > best:
            best, codes = val, set(cs)
        elif val == best:
            codes.update(cs)
    return best, tuple(sorted(codes)), classes


def _report(n, delta, objective, x, t, workers, max_n) -> ExtremalReport:
    if not 0 <= delta <= n - 1:
        raise ValueError(f"need 0 <= delta <= n-1, got delta={delta}, n={n}")
    best, codes, classes = _search(n, delta, objective, x, t, workers, max_n)
    kval, kmax = None, False
    if n >= 2 * delta:
        # below 2 delta the graph K_{delta, n-delta} breaks the degree condition
        kdn = kdn_graph(delta, n)
        kval = _objective(ind_seq(kdn), objective, x, t)
        kmax = canonical(kdn) in codes
    desc = {"i": "i(G)", "P": f"P(G,{x})", "t": f"i_{t}(G)"}[objective]
    return ExtremalReport(
        n=n,
        delta=delta,
        objective=desc,
        max_value=best,
        maximizers=list(codes),
        kdn_value=kval,
        kdn_is_max=kmax,
        classes=classes,
    )


def verify_max_total(
    n: int,
    delta: int,
    x: Fraction | int | str | None = None,
    workers: int = 1,
    max_n: int = DEFAULT_MAX_N,
) -> ExtremalReport:
    """Maximize i(G) (or P(G, x) for rational x > 0) over n-vertex graphs with min degree >= delta."""
    if x is None:
        return _report(n, delta, "i", None, None, workers, max_n)
    xq = Fraction(x)
    if xq <= 0:
        raise ValueError("x must be positive")
    return _report(n, delta, "P", xq, None, workers, max_n)


def verify_fixed_size(n: int, delta: int, t: int, workers: int = 1, max_n: int = DEFAULT_MAX_N) -> ExtremalReport:
    """Maximize i_t(G) over n-vertex graphs with min degree >= delta."""
    if not 0 <= t <= n:
        raise ValueError(f"t={t} outside 0..{n}")
    return _report(n, delta, "t", None, t, workers, max_n)


def probe_conjecture3(delta: int, n_range: range, workers: int = 1, max_n: int = DEFAULT_MAX_N) -> list[dict]:
    """For each n >= 2 delta in range (capped at max_n): does any class beat K_{delta,n-delta}?"""
    out = []
    for n in n_range:
        if n < max(2 * delta, delta + 1) or n > max_n:
            continue
        rep = verify_max_total(n, delta, workers=workers, max_n=max_n)
        beats = rep.max_value > rep.kdn_value
        ties = [c.decode("ascii") for c in rep.maximizers if c != canonical(kdn_graph(delta, n))] if not beats else []
        out.append(
            {
                "n": n,
                "delta": delta,
                "kdn_value": rep.kdn_value,
                "max_value": rep.max_value,
                "counterexample": beats,
                "kdn_unique": rep.kdn_is_max and rep.unique,
                "ties": ties,
            }
        )
    return out


def levit_mandrescu_check(g) -> bool:
    """Final third of the sequence, from index ceil((2 alpha - 1)/3), is nonincreasing.

    Accepts a Graph or a BipartiteGraph.
    """
    graph = g.to_graph() if hasattr(g, "biadj") else g
    return analyze(ind_seq(graph)).decreasing_from_final_third


def bipartite_classes(max_vertices: int) -> list[Graph]:
    """All bipartite isomorphism classes on 1..max_vertices vertices."""
    return [g for n in range(1, max_vertices + 1) for g in enumerate_graphs(n, 0) if is_bipartite(g)]


def matching_count(n: int, t: int) -> int:
    """i_t of the perfect matching on n (even) vertices: C(n/2, t) 2^t."""
    return comb(n // 2, t) * 2**t
