"""Canonical labeling by colour refinement and individualization search.

The certificate of a graph is the graph6 string of its canonically relabeled
copy, so two graphs share a code exactly when they are isomorphic.

Before searching, disconnected graphs (and graphs whose complement is
disconnected) are split into components that are labeled recursively and
concatenated in sorted code order.  The search itself explores the
individualization tree of the equitable partition, pruning children that are
equivalent under automorphisms already discovered (twin transpositions and
automorphisms read off equal leaves).
"""
from __future__ import annotations

from .errors import BudgetExceeded, GraphError
from .graph6 import write_graph6
from .graph_core import Graph, bits, component_masks

CanonicalCode = bytes

MAX_CANON_VERTICES = 16
DEFAULT_NODE_BUDGET = 200_000


def canonical(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> CanonicalCode:
    """Isomorphism-invariant certificate of ``g`` (graph6 bytes)."""
    return write_graph6(canonical_form(g, node_budget)).encode("ascii")


def canonical_form(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> Graph:
    order = canonical_order(g, node_budget)
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v] = i
    return g.relabel(position)


def canonical_order(g: Graph, node_budget: int = DEFAULT_NODE_BUDGET) -> list[int]:
    """Vertices of ``g`` listed in canonical position order."""
    if g.n > MAX_CANON_VERTICES:
        raise GraphError(f"canonical labeling supports n <= {MAX_CANON_VERTICES}, got {g.n}")
    return _Labeler(node_budget).order(g)


def _certificate(g: Graph, order: list[int]) -> int:
    cert = 0
    for j in range(1, len(order)):
        row = g.adj[order[j]]
        for i in range(j):
            cert = (cert << 1) | (row >> order[i] & 1)
    return cert


class _Labeler:
    def __init__(self, node_budget: int):
        self.budget = node_budget
        self.nodes = 0

    def order(self, g: Graph) -> list[int]:
        if g.n <= 2:
            return list(range(g.n))
        comps = component_masks(g)
        if len(comps) == 1:
            co = g.complement()
            co_comps = component_masks(co)
            if len(co_comps) == 1:
                return self._search(g)
            return self._combine(co, co_comps)
        return self._combine(g, comps)

    def _combine(self, g: Graph, comps: list[int]) -> list[int]:
        keyed = []
        for mask in comps:
            verts = list(bits(mask))
            sub = g.induced(verts)
            local = self.order(sub)
            cert = _certificate(sub, local)
            keyed.append(((len(verts), cert), [verts[i] for i in local]))
        keyed.sort(key=lambda item: item[0])
        return [v for _, part in keyed for v in part]

    def _refine(self, g: Graph, cells: list[list[int]]) -> list[list[int]]:
        cells = [c[:] for c in cells]
        changed = True
        while changed:
            changed = False
            for w in range(len(cells)):
                wmask = 0
                for v in cells[w]:
                    wmask |= 1 << v
                for x in range(len(cells)):
                    cell = cells[x]
                    if len(cell) == 1:
                        continue
                    counts = [(g.adj[v] & wmask).bit_count() for v in cell]
                    if min(counts) == max(counts):
                        continue
                    groups: dict[int, list[int]] = {}
                    for c, v in zip(counts, cell):
                        groups.setdefault(c, []).append(v)
                    cells[x:x + 1] = [groups[c] for c in sorted(groups)]
                    changed = True
                    break
                if changed:
                    break
        return cells

    def _search(self, g: Graph) -> list[int]:
        n = g.n
        autos: list[tuple[int, ...]] = []
        for u in range(n):
            for v in range(u + 1, n):
                if g.adj[u] & ~(1 << v) == g.adj[v] & ~(1 << u):
                    perm = list(range(n))
                    perm[u], perm[v] = v, u
                    autos.append(tuple(perm))
        state = {"first": None, "best": None}

        def leaf(order: list[int]) -> None:
            cert = _certificate(g, order)
            for key in ("first", "best"):
                known = state[key]
                if known is not None and known[0] == cert:
                    perm = [0] * n
                    for a, b in zip(known[1], order):
                        perm[a] = b
                    autos.append(tuple(perm))
            if state["first"] is None:
                state["first"] = (cert, order)
            if state["best"] is None or cert > state["best"][0]:
                state["best"] = (cert, order)

        def orbit_roots(prefix: list[int]) -> list[int]:
            parent = list(range(n))

            def find(a: int) -> int:
                while parent[a] != a:
                    parent[a] = parent[parent[a]]
                    a = parent[a]
                return a

            for perm in autos:
                if all(perm[p] == p for p in prefix):
                    for a in range(n):
                        ra, rb = find(a), find(perm[a])
                        if ra != rb:
                            parent[ra] = rb
            return [find(a) for a in range(n)]

        def visit(cells: list[list[int]], prefix: list[int]) -> None:
            self.nodes += 1
            if self.nodes > self.budget:
                raise BudgetExceeded(f"canonical labeling exceeded {self.budget} search nodes")
            cells = self._refine(g, cells)
            if len(cells) == n:
                leaf([c[0] for c in cells])
                return
            ti = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: len(cells[i]))
            target = sorted(cells[ti])
            tried_roots: set[int] = set()
            for v in target:
                roots = orbit_roots(prefix)
                if any(roots[v] == roots[u] for u in tried_roots):
                    continue
                tried_roots.add(v)
                rest = [u for u in target if u != v]
                visit(cells[:ti] + [[v], rest] + cells[ti + 1:], prefix + [v])

        visit([list(range(n))], [])
        return state["best"][1]
