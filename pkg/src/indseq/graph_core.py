"""Bitset graphs, standard families, composition, and random bipartite sampling.

A :class:`Graph` stores one adjacency bitset (a Python ``int``) per vertex.
Vertex ``v`` corresponds to bit ``1 << v``.  Graphs are immutable and at most
64 vertices wide.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import GraphError

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency must have one row per vertex")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {v} uses bits beyond n={self.n}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in bits(self.adj[v]) if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of range(n)")
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            out = 0
            for u in bits(row):
                out |= 1 << perm[u]
            rows[perm[v]] = out
        return Graph(self.n, tuple(rows))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; position ``i`` of the result is ``vertices[i]``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            out = 0
            for u in bits(self.adj[v]):
                if u in index:
                    out |= 1 << index[u]
            rows.append(out)
        return Graph(len(vertices), tuple(rows))

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)))


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges are collapsed."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop edge at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def _need(n: int, least: int, family: str) -> None:
    if n < least:
        raise GraphError(f"{family} needs at least {least} vertices, got {n}")


# Family builders.  Vertex orderings:
#   path: 0-1-...-(n-1); cycle: path plus (n-1, 0);
#   complete_bipartite(a, b): side A = 0..a-1, side B = a..a+b-1;
#   star(n) = complete_bipartite(1, n-1), centre 0.

def empty(n: int) -> Graph:
    _need(n, 1, "empty graph")
    return Graph(n, (0,) * n)


def complete(n: int) -> Graph:
    _need(n, 1, "complete graph")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def path(n: int) -> Graph:
    _need(n, 1, "path")
    return build(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n, 3, "cycle")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    _need(a, 1, "complete bipartite side")
    _need(b, 1, "complete bipartite side")
    return join(empty(a), empty(b))


def star(n: int) -> Graph:
    _need(n, 2, "star")
    return complete_bipartite(1, n - 1)


def _check_budget(graphs: Sequence[Graph]) -> int:
    total = sum(g.n for g in graphs)
    if total > MAX_VERTICES:
        raise GraphError(f"combined vertex count {total} exceeds {MAX_VERTICES}")
    return total


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; vertices of later graphs are shifted past earlier ones."""
    total = _check_budget(graphs)
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(total, tuple(rows))


def join(*graphs: Graph) -> Graph:
    """Disjoint union plus every edge between vertices of different operands."""
    total = _check_budget(graphs)
    full = (1 << total) - 1
    rows: list[int] = []
    offset = 0
    for g in graphs:
        block = ((1 << g.n) - 1) << offset
        rows.extend((row << offset) | (full & ~block) for row in g.adj)
        offset += g.n
    return Graph(total, tuple(rows))


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def component_masks(g: Graph, mask: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``mask``, as bitmasks."""
    return components_of(g.adj, g.vertex_mask if mask is None else mask)


def components_of(adj: Sequence[int], mask: int) -> list[int]:
    comps = []
    remaining = mask
    while remaining:
        frontier = remaining & -remaining
        comp = frontier
        while frontier:
            grow = 0
            for v in bits(frontier):
                grow |= adj[v]
            frontier = grow & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) == 1


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
                elif color[u] == color[v]:
                    return False
    return True


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with sides E = {e_0..e_{n-1}} and O = {o_0..o_{n-1}}.

    ``biadj[u]`` is the bitset of O-neighbours of ``e_u``.
    """

    n: int
    biadj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES // 2:
            raise GraphError(f"side size {self.n} outside 1..{MAX_VERTICES // 2}")
        if len(self.biadj) != self.n:
            raise GraphError("biadjacency must have one row per E-vertex")
        full = (1 << self.n) - 1
        if any(row & ~full for row in self.biadj):
            raise GraphError("biadjacency row uses bits beyond n")

    def transpose(self) -> tuple[int, ...]:
        """Rows indexed by O-vertices: the E-neighbours of each ``o_v``."""
        cols = [0] * self.n
        for u, row in enumerate(self.biadj):
            for v in bits(row):
                cols[v] |= 1 << u
        return tuple(cols)

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.biadj)

    def to_graph(self) -> Graph:
        """Graph on 2n vertices: E is 0..n-1, O is n..2n-1."""
        n = self.n
        rows = [row << n for row in self.biadj]
        rows.extend(self.transpose())
        return Graph(2 * n, tuple(rows))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "rows": [format(r, "x") for r in self.biadj]})

    @classmethod
    def from_json(cls, text: str | dict) -> "BipartiteGraph":
        obj = json.loads(text) if isinstance(text, str) else text
        try:
            return cls(int(obj["n"]), tuple(int(r, 16) for r in obj["rows"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed bipartite JSON: {exc}") from exc

    @classmethod
    def complete(cls, n: int) -> "BipartiteGraph":
        return cls(n, ((1 << n) - 1,) * n)

    @classmethod
    def empty(cls, n: int) -> "BipartiteGraph":
        return cls(n, (0,) * n)

    @classmethod
    def matching(cls, n: int) -> "BipartiteGraph":
        """Perfect matching e_i -- o_i."""
        return cls(n, tuple(1 << i for i in range(n)))


def has_perfect_matching(b: BipartiteGraph) -> bool:
    """Decide whether ``b`` has a perfect matching (Kuhn's augmenting paths)."""
    match_o = [-1] * b.n

    def augment(u: int, seen: list[bool]) -> bool:
        for v in bits(b.biadj[u]):
            if seen[v]:
                continue
            seen[v] = True
            if match_o[v] < 0 or augment(match_o[v], seen):
                match_o[v] = u
                return True
        return False

    return all(augment(u, [False] * b.n) for u in range(b.n))


@dataclass(frozen=True)
class RngSpec:
    """Key for the Philox4x64 counter generator used by :func:`sample_bipartite`."""

    seed: int
    stream: int = 0

    def generator(self) -> np.random.Philox:
        mask = (1 << 64) - 1
        return np.random.Philox(key=np.array([self.seed & mask, self.stream & mask], dtype=np.uint64))


def edge_threshold(p: float | Fraction) -> int:
    """Integer cut-off T with Pr[u < T] = p for u uniform on [0, 2**64)."""
    q = Fraction(p)
    if not 0 <= q <= 1:
        raise GraphError(f"probability {p} outside [0, 1]")
    return int(q * (1 << 64))


def sample_bipartite(n: int, p: float | Fraction, rng: RngSpec) -> BipartiteGraph:
    """Draw G(n, n, p).

    Raw 64-bit word ``k = u*n + v`` of the Philox stream keyed by
    ``(rng.seed, rng.stream)`` decides the pair (e_u, o_v): the edge is present
    iff the word is below ``edge_threshold(p)``.  Only integer comparisons are
    involved, so samples are bit-identical on every platform.
    """
    if n > MAX_VERTICES // 2:
        raise GraphError(f"side size {n} exceeds {MAX_VERTICES // 2}")
    cut = edge_threshold(p)
    raw = rng.generator().random_raw(n * n)
    rows = []
    for u in range(n):
        row = 0
        for v in range(n):
            if int(raw[u * n + v]) < cut:
                row |= 1 << v
        rows.append(row)
    return BipartiteGraph(n, tuple(rows))
