"""Exact independent-set sequences and the independence polynomial.

Sequences are tuples of Python ints, ``seq[t]`` = number of independent sets
of size t, trimmed so the last entry is nonzero (its index is alpha(G)).
"""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Sequence

from .errors import BudgetExceeded
from .graph_core import Graph, bits, components_of

CoeffSeq = tuple[int, ...]

DEFAULT_NODE_BUDGET = 10**8
# Per-call memo; when it reaches this many entries it is cleared wholesale.
MEMO_LIMIT = 1 << 20


def poly_add(p: Sequence[int], q: Sequence[int]) -> list[int]:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return out


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _trim(p: Sequence[int]) -> CoeffSeq:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def binomial_row(n: int) -> CoeffSeq:
    row = [1]
    for k in range(n):
        row.append(row[-1] * (n - k) // (k + 1))
    return tuple(row)


class _Counter:
    def __init__(self, g: Graph, node_budget: int):
        self.adj = g.adj
        self.budget = node_budget
        self.nodes = 0
        self.memo: dict[int, CoeffSeq] = {}

    def poly(self, mask: int) -> CoeffSeq:
        if not mask:
            return (1,)
        hit = self.memo.get(mask)
        if hit is not None:
            return hit
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(f"independence polynomial exceeded {self.budget} branch nodes")
        comps = components_of(self.adj, mask)
        if len(comps) > 1:
            out: list[int] = [1]
            for comp in comps:
                out = poly_mul(out, self.poly(comp))
            result = tuple(out)
        else:
            result = self._connected(mask)
        if len(self.memo) >= MEMO_LIMIT:
            self.memo.clear()
        self.memo[mask] = result
        return result

    def _connected(self, mask: int) -> CoeffSeq:
        adj = self.adj
        size = mask.bit_count()
        best_v, best_d = -1, -1
        for v in bits(mask):
            d = (adj[v] & mask).bit_count()
            if d > best_d:
                best_v, best_d = v, d
        if best_d == 0:
            return binomial_row(size)
        if best_d == size - 1 and all((adj[v] & mask).bit_count() == size - 1 for v in bits(mask)):
            return (1, size)
        v = best_v
        without = self.poly(mask & ~(1 << v))
        with_v = self.poly(mask & ~(adj[v] | (1 << v)))
        return tuple(poly_add(without, (0,) + with_v))


def ind_seq(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> CoeffSeq:
    """Independent-set sequence (i_0, ..., i_alpha) of ``g``.

    Uses P(G) = P(G - v) + x P(G - N[v]) with v of maximum degree, splitting
    into connected components first and memoizing on the vertex mask.

    Raises BudgetExceeded after ``node_budget`` branch nodes.
    """
    return _trim(_Counter(g, node_budget).poly(g.vertex_mask))


def total_count(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    return sum(ind_seq(g, node_budget))


def alpha(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    return len(ind_seq(g, node_budget)) - 1


def evaluate(p: Sequence[int], x: Fraction | int | str) -> Fraction:
    """Exact Horner evaluation of sum p[t] x^t."""
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose_union(*polys: Sequence[int]) -> CoeffSeq:
    """Sequence of a disjoint union: the product of the polynomials."""
    out: list[int] = [1]
    for p in polys:
        out = poly_mul(out, p)
    return _trim(out)


def compose_join(*polys: Sequence[int]) -> CoeffSeq:
    """Sequence of a join: every independent set lies inside one operand."""
    out: list[int] = [1]
    for p in polys:
        out = poly_add(out, p)
        out[0] -= 1
    return _trim(out)


def seq_to_json(seq: Sequence[int]) -> str:
    return json.dumps([str(c) for c in seq])


def seq_from_json(text: str) -> CoeffSeq:
    return tuple(int(c) for c in json.loads(text))
