"""Coefficient bounds for bipartite graphs with two sides of size n.

Notation (for a bipartite graph B with sides E and O):

* ``m(k)``: the largest number of vertices on one side that avoid the
  neighbourhood of some k-set on the other side (maximum over both sides).
* ``K``: the least k such that every k-subset of E has an edge to every
  k-subset of O, or ``None`` when no k <= n works (B has no edges).
* ``x(t)``: the correction factor in i_t <= 2 (1 + x(t)) C(n, t), computed as
  sum_{k=1}^{min(K, floor(t/2))} C(t, k) (m(k))_(t-k) / (n-k)_(t-k)
  with falling powers, so it is exact and needs no side conditions.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .errors import BudgetExceeded
from .graph_core import BipartiteGraph, is_connected
from .ind_poly import DEFAULT_NODE_BUDGET, ind_seq

DEFAULT_SEARCH_BUDGET = 10**7
# Above this side size profile() switches from subset DP to branch and bound.
DP_MAX_SIDE = 20
PROPERTY_RTOL = 1e-9


class ThresholdRangeError(ValueError):
    """t lies outside the ranges where a threshold condition is defined."""


def falling(a: int, b: int) -> int:
    """Falling power a (a-1) ... (a-b+1); zero once a factor hits zero."""
    out = 1
    for i in range(b):
        out *= a - i
        if out == 0:
            return 0
    return out


# ---------------------------------------------------------------- coverage

def min_cover(rows: tuple[int, ...], k: int, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    """Smallest |N(A)| over k-subsets A of the rows (branch and bound)."""
    n = len(rows)
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    if k == 0:
        return 0
    order = sorted(range(n), key=lambda v: rows[v].bit_count())
    sizes = [rows[v].bit_count() for v in order]
    seed = 0
    for v in order[:k]:
        seed |= rows[v]
    best = seed.bit_count()
    nodes = 0

    def dfs(start: int, chosen: int, union: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceeded(f"coverage search exceeded {budget} nodes")
        if chosen == k:
            best = min(best, union.bit_count())
            return
        need = k - chosen
        for i in range(start, n - need + 1):
            # rows are sorted by size, so later rows cannot beat this bound
            if sizes[i] >= best:
                break
            nu = union | rows[order[i]]
            if nu.bit_count() >= best:
                continue
            dfs(i + 1, chosen + 1, nu)

    dfs(0, 0, 0)
    return best


def cover_profile(rows: tuple[int, ...]) -> list[int]:
    """min_cover(rows, k) for k = 0..n at once, by DP over all 2^n subsets."""
    n = len(rows)
    if n > DP_MAX_SIDE:
        raise BudgetExceeded(f"subset DP limited to n <= {DP_MAX_SIDE}")
    nbr = np.zeros(1 << n, dtype=np.uint64)
    size = np.zeros(1 << n, dtype=np.uint8)
    for i, row in enumerate(rows):
        half = 1 << i
        nbr[half:2 * half] = nbr[:half] | np.uint64(row)
        size[half:2 * half] = size[:half] + 1
    cover = np.bitwise_count(nbr)
    best = np.full(n + 1, n + 1, dtype=np.int64)
    np.minimum.at(best, size, cover)
    return [int(v) for v in best]


def _m_side(rows: tuple[int, ...], k: int, budget: int) -> int:
    return len(rows) - min_cover(rows, k, budget)


def compute_m(b: BipartiteGraph, k: int, budget: int = DEFAULT_SEARCH_BUDGET) -> int:
    if not 1 <= k <= b.n:
        raise ValueError(f"k={k} outside 1..{b.n}")
    return max(_m_side(b.biadj, k, budget), _m_side(b.transpose(), k, budget))


def compute_K(b: BipartiteGraph, budget: int = DEFAULT_SEARCH_BUDGET) -> int | None:
    # k-sets A in E, B in O with no edge exist iff |O \ N(A)| >= k for some A,
    # and n - min_cover is nonincreasing in k, so the first k that fails is K.
    for k in range(1, b.n + 1):
        if _m_side(b.biadj, k, budget) < k:
            return k
    return None


# ---------------------------------------------------------------- profile

@dataclass(frozen=True)
class BoundProfile:
    n: int
    K: int | None
    m: tuple[int, ...]          # m[k-1] = m(k) for k = 1..len(m)
    x_exact: tuple[Fraction, ...]  # x(t) for t = 0..n

    def m_of(self, k: int) -> int:
        return self.m[k - 1]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "K": self.K,
            "m": list(self.m),
            "x": [f"{x.numerator}/{x.denominator}" for x in self.x_exact],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "BoundProfile":
        obj = json.loads(text)
        return cls(obj["n"], obj["K"], tuple(obj["m"]), tuple(Fraction(x) for x in obj["x"]))


def _x_value(n: int, K: int | None, m: tuple[int, ...], t: int) -> Fraction:
    kmax = t // 2 if K is None else min(K, t // 2)
    total = Fraction(0)
    for k in range(1, kmax + 1):
        num = falling(m[k - 1], t - k)
        if num == 0:
            continue
        den = falling(n - k, t - k)
        if den == 0:
            raise ValueError(f"x({t}) is undefined for n={n}: C(n, t) = 0 but a term is nonzero")
        total += Fraction(comb(t, k) * num, den)
    return total


def profile(b: BipartiteGraph, budget: int = DEFAULT_SEARCH_BUDGET) -> BoundProfile:
    """K, m(1..K) (m(1..n) when K is None) and x(0..n) for ``b``."""
    n = b.n
    if n <= DP_MAX_SIDE:
        ce = cover_profile(b.biadj)
        co = cover_profile(b.transpose())
        m_e = [n - c for c in ce]
        K = next((k for k in range(1, n + 1) if m_e[k] < k), None)
        top = n if K is None else K
        m = tuple(max(n - ce[k], n - co[k]) for k in range(1, top + 1))
    else:
        K = compute_K(b, budget)
        top = n if K is None else K
        m = tuple(compute_m(b, k, budget) for k in range(1, top + 1))
    xs = tuple(_x_value(n, K, m, t) for t in range(n + 1))
    return BoundProfile(n, K, m, xs)


def x_of(prof: BoundProfile, t: int) -> Fraction:
    """x(t) for 0 <= t <= 2n.

    Past t = n the binomial C(n, t) vanishes; the value is 0 when every term
    vanishes and ValueError is raised otherwise.
    """
    if not 0 <= t <= 2 * prof.n:
        raise ValueError(f"t={t} outside 0..{2 * prof.n}")
    if t <= prof.n:
        return prof.x_exact[t]
    return _x_value(prof.n, prof.K, prof.m, t)


def x_direct(prof: BoundProfile, t: int) -> Fraction:
    """x(t) as sum C(n,k) C(m(k), t-k) / C(n, t); for cross-checking x_of."""
    n = prof.n
    kmax = t // 2 if prof.K is None else min(prof.K, t // 2)
    return sum((Fraction(comb(n, k) * comb(prof.m_of(k), t - k), comb(n, t)) for k in range(1, kmax + 1)), Fraction(0))


# ---------------------------------------------------------------- thresholds

def unimodality_bound(n: int, t: int) -> Fraction:
    """Largest x(t) that still forces the step towards the middle at t."""
    if 1 <= t and 2 * t <= n - 2:
        return Fraction(n - 2 * t - 1, t + 1)
    if 2 * t >= n + 2 and t <= n:
        return Fraction(2 * t - 1 - n, n - t + 1)
    raise ThresholdRangeError(f"t={t} is in neither range 1..n/2-1 nor n/2+1..n for n={n}")


def unimodality_threshold_ok(prof: BoundProfile, t: int) -> bool:
    """x(t) small enough to force i_t <= i_{t+1} (left range) or i_t <= i_{t-1} (right)."""
    return prof.x_exact[t] <= unimodality_bound(prof.n, t)


def unimodality_ranges(n: int) -> tuple[range, range]:
    return range(1, (n - 2) // 2 + 1), range(-(-(n + 2) // 2), n + 1)


def logconcavity_threshold_ok(prof: BoundProfile, t: int) -> bool:
    """(1 + 1/t)(1 + 1/(n-t)) >= (1 + x(t-1))(1 + x(t+1)), forcing i_t^2 >= i_{t-1} i_{t+1}."""
    n = prof.n
    if not 1 <= t <= n - 1:
        raise ThresholdRangeError(f"t={t} outside 1..{n - 1}")
    lhs = (1 + Fraction(1, t)) * (1 + Fraction(1, n - t))
    return lhs >= (1 + prof.x_exact[t - 1]) * (1 + prof.x_exact[t + 1])


# ---------------------------------------------------------------- sandwich

@dataclass(frozen=True)
class SandwichRow:
    t: int
    count: int
    lower: int
    upper: Fraction
    lower_ok: bool
    upper_ok: bool

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "i_t": str(self.count),
            "lower": str(self.lower),
            "upper": f"{self.upper.numerator}/{self.upper.denominator}",
            "lower_ok": self.lower_ok,
            "upper_ok": self.upper_ok,
        }


def coefficient_sandwich(
    b: BipartiteGraph,
    seq: tuple[int, ...] | None = None,
    prof: BoundProfile | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> list[SandwichRow]:
    """Check 2 C(n,t) <= i_t <= 2 (1 + x(t)) C(n,t) for t = 1..n."""
    if seq is None:
        seq = ind_seq(b.to_graph(), node_budget)
    if prof is None:
        prof = profile(b)
    rows = []
    for t in range(1, b.n + 1):
        count = seq[t] if t < len(seq) else 0
        lower = 2 * comb(b.n, t)
        upper = 2 * (1 + prof.x_exact[t]) * comb(b.n, t)
        rows.append(SandwichRow(t, count, lower, upper, lower <= count, count <= upper))
    return rows


def final_form_applicable(prof: BoundProfile) -> bool:
    """m(k) <= n - k for every recorded k (needed by the power-form relaxation)."""
    return all(m <= prof.n - k for k, m in enumerate(prof.m, start=1))


def x_power_bound(prof: BoundProfile, t: int) -> Fraction:
    """sum C(t,k) (m(k)/(n-k))^(t-k): the relaxed upper bound on x(t)."""
    n = prof.n
    kmax = t // 2 if prof.K is None else min(prof.K, t // 2)
    return sum((comb(t, k) * Fraction(prof.m_of(k), n - k) ** (t - k) for k in range(1, kmax + 1)), Fraction(0))


# ---------------------------------------------------------------- a.s. properties

@dataclass(frozen=True)
class PropertyReport:
    K_small: bool
    m_concentrated: bool
    connected: bool
    m_at_most_n_minus_k: bool

    def to_dict(self) -> dict:
        return {
            "K_small": self.K_small,
            "m_concentrated": self.m_concentrated,
            "connected": self.connected,
            "m_at_most_n_minus_k": self.m_at_most_n_minus_k,
        }


def _le(a: float, b: float) -> bool:
    return a <= b + PROPERTY_RTOL * max(1.0, abs(b))


def as_properties(b: BipartiteGraph, p: float, prof: BoundProfile | None = None) -> PropertyReport:
    """Evaluate the four structural properties of a G(n, n, p) sample.

    ``d = n p`` uses the nominal p.  Natural logarithms throughout.
    Raises ValueError when d <= 1.
    """
    n = b.n
    d = n * float(p)
    if d <= 1:
        raise ValueError(f"d = n p = {d} must exceed 1")
    if prof is None:
        prof = profile(b)
    q = 1.0 - float(p)
    K_small = prof.K is not None and _le(prof.K, 2 * n * math.log(d) / d)
    logn = math.log(n)
    m_conc = all(
        _le(m, n * q**k + 3 * math.sqrt(k * n * q**k * logn)) for k, m in enumerate(prof.m, start=1)
    )
    return PropertyReport(
        K_small=K_small,
        m_concentrated=m_conc,
        connected=is_connected(b.to_graph()),
        m_at_most_n_minus_k=final_form_applicable(prof),
    )
