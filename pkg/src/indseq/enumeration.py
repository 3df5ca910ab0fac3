"""Isomorph-free generation of small graphs (Read-Faradzev orderly method).

A labeled graph is *canonical* when its column code is maximal over all
relabelings.  The column code concatenates, for j = 1..n-1, the bits
A[0][j], ..., A[j-1][j], most significant first.  Deleting the last vertex of
a canonical graph leaves a canonical graph (its code is a prefix), so every
class on n vertices is reached exactly once by appending one new column to a
canonical graph on n-1 vertices and keeping the result when it is canonical.

Each n-vertex class has a unique parent, so the children of disjoint parent
sets are disjoint: ``shard=(i, k)`` restricts generation to parents whose
index is congruent to i mod k.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import BudgetExceeded, GraphError
from .graph_core import Graph

DEFAULT_MAX_N = 8
HARD_MAX_N = 10


def column_code(adj: tuple[int, ...]) -> int:
    code = 0
    for j in range(1, len(adj)):
        row = adj[j]
        for i in range(j):
            code = (code << 1) | (row >> i & 1)
    return code


def is_max_code(adj: tuple[int, ...]) -> bool:
    """True iff no relabeling of ``adj`` has a larger column code."""
    n = len(adj)
    # prefix[j]: code value of columns 1..j
    prefix = [0] * n
    val = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            val = (val << 1) | (row >> i & 1)
        prefix[j] = val
    perm: list[int] = []

    def bigger(j: int, used: int, val: int) -> bool:
        if j == n:
            return False
        for v in range(n):
            if used >> v & 1:
                continue
            col = 0
            for u in perm:
                col = (col << 1) | (adj[u] >> v & 1)
            nv = (val << j) | col
            if nv > prefix[j]:
                return True
            if nv < prefix[j]:
                continue
            perm.append(v)
            found = bigger(j + 1, used | (1 << v), nv)
            perm.pop()
            if found:
                return True
        return False

    # Fast reject: swapping the last two vertices only touches the last two columns.
    if n >= 3:
        last, prev = adj[n - 1], adj[n - 2]
        mask = (1 << (n - 2)) - 1
        a = _rev_bits(prev & mask, n - 2)
        b = _rev_bits(last & mask, n - 2)
        if b > a:
            return False
    return not bigger(0, 0, 0)


def _rev_bits(x: int, width: int) -> int:
    # column bits are read vertex 0 first, i.e. most significant
    out = 0
    for i in range(width):
        out = (out << 1) | (x >> i & 1)
    return out


def _children(adj: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    m = len(adj)
    for col in range(1 << m):
        rows = tuple(row | ((col >> i & 1) << m) for i, row in enumerate(adj)) + (col,)
        if is_max_code(rows):
            yield rows


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),)
    return tuple(child for parent in _level(n - 1) for child in _children(parent))


def enumerate_graphs(
    n: int,
    delta: int = 0,
    shard: tuple[int, int] | None = None,
    max_n: int = DEFAULT_MAX_N,
) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices with min degree >= ``delta``.

    Output order is deterministic.  ``max_n`` raises the default size limit,
    up to a hard wall of ``HARD_MAX_N``.
    """
    if n < 1:
        raise GraphError("n must be at least 1")
    limit = min(max_n, HARD_MAX_N)
    if n > limit:
        raise BudgetExceeded(f"enumeration limited to n <= {limit}, requested {n}")
    if shard is not None:
        index, count = shard
        if not 0 <= index < count:
            raise ValueError(f"bad shard {shard}")
    if shard is None or n == 1:
        parents_children: Iterator[tuple[int, ...]] = iter(_level(n) if shard is None or shard[0] == 0 else ())
    else:
        parents = _level(n - 1)
        parents_children = (
            child
            for idx in range(shard[0], len(parents), shard[1])
            for child in _children(parents[idx])
        )
    for rows in parents_children:
        if min(row.bit_count() for row in rows) >= delta:
            yield Graph(n, rows)


def count_graphs(n: int, delta: int = 0, max_n: int = DEFAULT_MAX_N) -> int:
    return sum(1 for _ in enumerate_graphs(n, delta, max_n=max_n))
