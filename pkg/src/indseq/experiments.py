"""Seeded Monte Carlo runs over G(n, n, p).

Sample ``i`` of a run uses ``RngSpec(seed, i)``.  Records are gathered in
stream order whatever the worker count, so output is reproducible byte for
byte.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction

from .bipartite_bounds import (
    as_properties,
    coefficient_sandwich,
    logconcavity_threshold_ok,
    profile,
    unimodality_ranges,
    unimodality_threshold_ok,
)
from .graph_core import RngSpec, sample_bipartite
from .ind_poly import DEFAULT_NODE_BUDGET, ind_seq
from .seq_analysis import analyze, half_mode_membership

EXACT_MAX_SIDE = 13
SCHEDULES = ("dense", "sqrt", "hamilton")
SCHEDULE_DEFAULTS = {"dense": 0.5, "sqrt": 1.0, "hamilton": 1.0}


@dataclass(frozen=True)
class ExperimentConfig:
    """One Monte Carlo run.

    ``p`` fixes the edge probability; otherwise ``schedule`` picks it from n:

    * ``dense``:    p = const
    * ``sqrt``:     p = const * n^(-1/2) * (log n)^(1/2)
    * ``hamilton``: p = (log n + log log n + const) / n
    """

    n: int
    samples: int = 1
    seed: int = 0
    p: Fraction | None = None
    schedule: str | None = None
    const: float | None = None
    workers: int = 1
    bounds_only: bool = False
    node_budget: int = DEFAULT_NODE_BUDGET

    def edge_probability(self) -> Fraction:
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if (self.p is None) == (self.schedule is None):
            raise ValueError("give exactly one of p and schedule")
        if self.p is not None:
            p = Fraction(self.p)
        else:
            if self.schedule not in SCHEDULES:
                raise ValueError(f"unknown schedule {self.schedule!r}")
            c = SCHEDULE_DEFAULTS[self.schedule] if self.const is None else self.const
            n = self.n
            if self.schedule == "dense":
                val = c
            elif self.schedule == "sqrt":
                val = c * n**-0.5 * math.log(n) ** 0.5
            else:
                if n < 3:
                    raise ValueError("hamilton schedule needs n >= 3 (log log n)")
                val = (math.log(n) + math.log(math.log(n)) + c) / n
            p = Fraction(val)
        if not 0 <= p <= 1:
            raise ValueError(f"edge probability {float(p)} outside [0, 1]")
        return p

    def describe(self) -> dict:
        # workers is deliberately left out: output must not depend on it
        d = asdict(self)
        d.pop("workers")
        p = self.edge_probability()
        d["p"] = f"{p.numerator}/{p.denominator}"
        d["p_float"] = float(p)
        return d


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def prefix_target(n: int) -> int | None:
    """floor(log n - 2 log log n), the length of the guaranteed increasing start."""
    if n < 3:
        return None
    return math.floor(math.log(n) - 2 * math.log(math.log(n)))


def run_sample(cfg: ExperimentConfig, stream: int) -> dict:
    p = cfg.edge_probability()
    b = sample_bipartite(cfg.n, p, RngSpec(cfg.seed, stream))
    n = cfg.n
    prof = profile(b)
    xs = prof.x_exact[1:]
    left, right = unimodality_ranges(n)
    rec: dict = {
        "stream": stream,
        "edges": b.num_edges,
        "K": prof.K,
        "x_min": _frac(min(xs)),
        "x_max": _frac(max(xs)),
        "uni_threshold_all": all(unimodality_threshold_ok(prof, t) for t in (*left, *right)),
        "logcon_threshold_all": all(logconcavity_threshold_ok(prof, t) for t in range(1, n)),
    }
    d = n * float(p)
    rec["properties"] = as_properties(b, float(p), prof).to_dict() if d > 1 else None
    if not cfg.bounds_only:
        seq = ind_seq(b.to_graph(), cfg.node_budget)
        verdict = analyze(seq)
        half = half_mode_membership(verdict, n)
        target = prefix_target(n)
        rec.update(
            sequence=[str(c) for c in seq],
            unimodal=verdict.unimodal,
            modes=list(verdict.modes),
            mode_floor_half=half["floor"],
            mode_ceil_half=half["ceil"],
            logconcave_from=verdict.logconcave_from,
            log_concave=verdict.logconcave_from == 0,
            increasing_prefix_len=verdict.increasing_prefix_len,
            prefix_target=target,
            prefix_ok=None if target is None else verdict.increasing_prefix_len >= target,
            sandwich_ok=all(r.lower_ok and r.upper_ok for r in coefficient_sandwich(b, seq, prof)),
        )
    return rec


def _run_chunk(args: tuple[ExperimentConfig, list[int]]) -> list[dict]:
    cfg, streams = args
    return [run_sample(cfg, s) for s in streams]


def _rates(records: list[dict]) -> dict:
    keys = ["uni_threshold_all", "logcon_threshold_all", "unimodal", "mode_floor_half", "mode_ceil_half",
            "log_concave", "prefix_ok", "sandwich_ok"]
    out = {}
    for key in keys:
        vals = [r[key] for r in records if r.get(key) is not None]
        if vals:
            out[key] = sum(vals) / len(vals)
    props = [r["properties"] for r in records if r["properties"] is not None]
    if props:
        for key in props[0]:
            out["property_" + key] = sum(p[key] for p in props) / len(props)
    return out


def run_experiment(cfg: ExperimentConfig) -> dict:
    """Run all samples and return the JSON-ready result (schema indseq/1)."""
    cfg.edge_probability()
    if not 1 <= cfg.n <= 32:
        raise ValueError(f"side size {cfg.n} outside 1..32")
    if not cfg.bounds_only and cfg.n > EXACT_MAX_SIDE:
        raise ValueError(f"exact counting needs n <= {EXACT_MAX_SIDE}; use bounds-only mode")
    streams = list(range(cfg.samples))
    if cfg.workers <= 1:
        records = _run_chunk((cfg, streams))
    else:
        chunks = [streams[i::cfg.workers] for i in range(cfg.workers)]
        with ProcessPoolExecutor(cfg.workers) as pool:
            parts = list(pool.map(_run_chunk, [(cfg, c) for c in chunks if c]))
        records = sorted((r for part in parts for r in part), key=lambda r: r["stream"])
    return {
        "schema": "indseq/1",
        "config": cfg.describe(),
        "samples": records,
        "rates": _rates(records),
    }
