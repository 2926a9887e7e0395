"""Brute-force ground truth: enumerate every maximal independent set."""
from __future__ import annotations

import os
import time
from typing import Iterator

from . import kernels
from .errors import OracleBudgetExceeded
from .graph import Graph, degeneracy_ordering, set_of
from .reports import GraphStats, WellCoveredReport

DEFAULT_BUDGET = 10_000_000


def oracle_budget(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("WCOV_ORACLE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def enumerate_maximal_independent_sets(g: Graph, budget: int | None = None) -> Iterator[frozenset]:
    """Stream every maximal independent set exactly once, in a fixed order."""
    limit = oracle_budget(budget)
    for count, m in enumerate(kernels.iter_mis(g.masks), 1):
        if count > limit:
            raise OracleBudgetExceeded(f"more than {limit} maximal independent sets")
        yield set_of(m)


def maximal_independent_set_masks(g: Graph, budget: int | None = None) -> list[int]:
    return kernels.mis_all(g.masks, oracle_budget(budget))


def enumerate_minimal_vertex_covers_oracle(g: Graph, budget: int | None = None) -> Iterator[frozenset]:
    full = (1 << g.n) - 1
    for m in maximal_independent_set_masks(g, budget):
        yield set_of(full & ~m)


def graph_stats_oracle(g: Graph, budget: int | None = None) -> GraphStats:
    _, i_min, _, alpha, _ = kernels.mis_extremes(g.masks, oracle_budget(budget))
    _, d = degeneracy_ordering(g)
    return GraphStats(alpha=alpha, vc=g.n - alpha, vc_plus=g.n - i_min, i_min=i_min, degeneracy=d)


def is_well_covered_oracle(g: Graph, budget: int | None = None) -> WellCoveredReport:
    start = time.perf_counter()
    count, lo, lo_mask, hi, hi_mask = kernels.mis_extremes(g.masks, oracle_budget(budget))
    wc = lo == hi
    return WellCoveredReport(
        well_covered=wc,
        algorithm="oracle",
        n=g.n,
        alpha=hi,
        vc=g.n - hi,
        vc_plus=g.n - lo,
        witness_small=None if wc else set_of(lo_mask),
        witness_large=None if wc else set_of(hi_mask),
        stats={"maximal_independent_sets": count, "elapsed_ms": (time.perf_counter() - start) * 1e3},
    )
