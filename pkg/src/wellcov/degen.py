"""Search tree over closed neighbourhoods of minimum-degree vertices.

Every maximal independent set of the residual contains a vertex of ``N[v]``
for any residual vertex ``v``, so branching on the members of ``N[v]``
reaches every maximal independent set.  Taking ``v`` of minimum degree keeps
the fan-out at most ``d + 1`` for a d-degenerate graph.
"""
from __future__ import annotations

import time

from . import kernels
from .graph import Graph, degeneracy_ordering, set_of
from .reports import TreeStats, WellCoveredReport


def well_covered_degenerate(g: Graph, early_exit: bool = True) -> WellCoveredReport:
    """Decide by comparing leaf depths; stop at the second distinct depth unless told not to.

    Size fields are filled in only when the whole tree was explored.
    """
    start = time.perf_counter()
    leaves, nodes, lo, lo_mask, hi, hi_mask, stopped = kernels.degen_search(g.masks, early_exit)
    wc = lo == hi
    complete = not stopped
    _, d = degeneracy_ordering(g)
    return WellCoveredReport(
        well_covered=wc,
        algorithm="degen",
        n=g.n,
        alpha=hi if complete else None,
        vc=g.n - hi if complete else None,
        vc_plus=g.n - lo if complete else None,
        witness_small=None if wc else set_of(lo_mask),
        witness_large=None if wc else set_of(hi_mask),
        stats={
            "tree_leaves": leaves,
            "tree_nodes": nodes,
            "degeneracy": d,
            "complete_tree": complete,
            "elapsed_ms": (time.perf_counter() - start) * 1e3,
        },
    )


def degen_tree_stats(g: Graph) -> TreeStats:
    """Leaf and node counts of the full tree; ``k`` is the deepest leaf, which is alpha."""
    leaves, nodes, _, _, hi, _, _ = kernels.degen_search(g.masks, False)
    return TreeStats(leaves=leaves, nodes=nodes, k=hi)
