"""Unimodality, log-concavity and real-rootedness of positive integer sequences.

All verdicts use exact integer or rational arithmetic.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Sequence


@dataclass(frozen=True)
class SeqVerdict:
    unimodal: bool
    modes: tuple[int, ...]
    logconcave_from: int
    increasing_prefix_len: int
    decreasing_from_final_third: bool

    def to_dict(self) -> dict:
        d = asdict(self)
        d["modes"] = list(self.modes)
        return d


def _check_positive(seq: Sequence[int]) -> None:
    if len(seq) == 0:
        raise ValueError("sequence must be nonempty")
    if any(a <= 0 for a in seq):
        raise ValueError("sequence entries must be positive")


def final_third_start(alpha: int) -> int:
    """ceil((2*alpha - 1) / 3)."""
    return -((1 - 2 * alpha) // 3)


def analyze(seq: Sequence[int]) -> SeqVerdict:
    _check_positive(seq)
    a = list(seq)
    top = max(a)
    modes = tuple(i for i, v in enumerate(a) if v == top)

    k = 0
    while k + 1 < len(a) and a[k] <= a[k + 1]:
        k += 1
    unimodal = all(a[i] >= a[i + 1] for i in range(k, len(a) - 1))

    lc_from = 0
    for t in range(len(a) - 2, 0, -1):
        if a[t] * a[t] < a[t - 1] * a[t + 1]:
            lc_from = t
            break

    start = final_third_start(len(a) - 1)
    final_third = all(a[t] >= a[t + 1] for t in range(max(start, 0), len(a) - 1))
    return SeqVerdict(unimodal, modes, lc_from, k, final_third)


def is_log_concave(seq: Sequence[int], start: int = 0) -> bool:
    """True iff a_t^2 >= a_{t-1} a_{t+1} for every t with start < t < len-1."""
    if not 0 <= start < len(seq):
        raise IndexError(f"start index {start} outside sequence of length {len(seq)}")
    return all(seq[t] * seq[t] >= seq[t - 1] * seq[t + 1] for t in range(start + 1, len(seq) - 1))


def has_mode_at(verdict: SeqVerdict, idx: int) -> bool:
    return idx in verdict.modes


def half_mode_membership(verdict: SeqVerdict, n: int) -> dict[str, bool]:
    """Whether floor(n/2) and ceil(n/2) are modes (reported separately)."""
    return {"floor": has_mode_at(verdict, n // 2), "ceil": has_mode_at(verdict, -(-n // 2))}


# --- exact polynomial arithmetic (coefficient lists, lowest degree first) ---

Poly = list[Fraction]


def _strip(p: Poly) -> Poly:
    while p and p[-1] == 0:
        p.pop()
    return p


def _divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    num = list(num)
    quot = [Fraction(0)] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    while len(num) >= len(den) and num:
        shift = len(num) - len(den)
        c = num[-1] / lead
        quot[shift] = c
        for i, d in enumerate(den):
            num[i + shift] -= c * d
        _strip(num)
    return _strip(quot), num


def _deriv(p: Poly) -> Poly:
    return _strip([i * c for i, c in enumerate(p)][1:])


def _monic_gcd(p: Poly, q: Poly) -> Poly:
    a, b = list(p), list(q)
    while b:
        a, b = b, _divmod(a, b)[1]
    return [c / a[-1] for c in a]


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [list(p), _deriv(p)]
    while chain[-1]:
        rem = _divmod(chain[-2], chain[-1])[1]
        chain.append([-c for c in rem])
    chain.pop()
    return chain


def _sign_changes(signs: list[int]) -> int:
    nz = [s for s in signs if s]
    return sum(1 for x, y in zip(nz, nz[1:]) if x != y)


def count_distinct_real_roots(p: Poly) -> int:
    """Number of distinct real roots, by Sturm's theorem on (-inf, +inf)."""
    chain = sturm_chain(p)
    at_pos = [(1 if q[-1] > 0 else -1) for q in chain]
    at_neg = [(1 if q[-1] > 0 else -1) * (-1 if (len(q) - 1) % 2 else 1) for q in chain]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def squarefree_factors(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's decomposition: p = c * prod f_i^i with each f_i squarefree."""
    out = []
    g = _monic_gcd(p, _deriv(p))
    c = _divmod(p, g)[0]
    d = _divmod(_deriv(p), g)[0]
    i = 1
    while len(c) > 1:
        d = _strip([x - y for x, y in _zip_pad(d, _deriv(c))])
        a = _monic_gcd(c, d)
        if len(a) > 1:
            out.append((a, i))
        c = _divmod(c, a)[0]
        d = _divmod(d, a)[0]
        i += 1
    return out


def _zip_pad(p: Poly, q: Poly):
    m = max(len(p), len(q))
    return zip(p + [Fraction(0)] * (m - len(p)), q + [Fraction(0)] * (m - len(q)))


def real_root_count(coeffs: Sequence[int]) -> int:
    """Real roots counted with multiplicity (x = 0 included)."""
    p = _strip([Fraction(c) for c in coeffs])
    if not p:
        raise ValueError("zero polynomial")
    zeros = 0
    while p[0] == 0:
        p.pop(0)
        zeros += 1
    return zeros + sum(mult * count_distinct_real_roots(f) for f, mult in squarefree_factors(p))


def is_real_rooted(coeffs: Sequence[int]) -> bool:
    """True iff sum coeffs[t] x^t has only real roots."""
    p = _strip([Fraction(c) for c in coeffs])
    if not p:
        raise ValueError("zero polynomial")
    return real_root_count(coeffs) == len(p) - 1
