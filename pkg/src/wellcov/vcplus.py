"""Bounded search tree over high-degree vertices, parameterised by vc+.

A node holds the residual vertex set, its budget and the partial cover.
It branches on a vertex ``x`` of residual degree at least 3: either ``x``
joins the cover, or ``x`` stays out and all of ``N(x)`` joins.  When the
residual has maximum degree 2 the remaining choices are made exactly by a
dynamic program over its paths and cycles.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, degree2_components, iter_bits, mask_of, set_of
from .reports import TreeStats, WellCoveredReport

CONSTRAINT_FLAG = 20


@dataclass(frozen=True)
class SearchNode:
    residual: frozenset
    budget: int
    partial_cover: frozenset = frozenset()
    excluded: frozenset = frozenset()


@dataclass
class BranchResult:
    vc: int
    vc_plus: int
    min_cover: frozenset
    max_cover: frozenset
    tree: TreeStats
    truncated: bool
    max_constraints: int = 0


# ------------------------------------------------------------ leaf solver

def _leaf_extensions(masks, r: int, k: int, cover: int, excl: int):
    """Minimum and maximum ``X`` within ``G[r]`` making ``cover | X`` a minimal cover.

    Returns ``(min_x, max_x, n_constraints, cut)`` where the X values are
    masks (or None when no extension exists within budget ``k``) and ``cut``
    says whether some extension was discarded for exceeding ``k``.
    """
    # cover vertices still waiting for a neighbour outside the cover
    constraints = []
    for c in iter_bits(cover):
        if masks[c] & excl:
            continue
        t = masks[c] & r
        if not t:
            return None, None, 0, False
        constraints.append(t)
    cons_of = {}
    for j, t in enumerate(constraints):
        for v in iter_bits(t):
            cons_of[v] = cons_of.get(v, 0) | (1 << j)
    full = (1 << len(constraints)) - 1

    # table: constraint mask -> {size: representative X}
    table = {0: {0: 0}}
    cut = False
    for order, cyclic in degree2_components(masks, r):
        comp, comp_cut = _component_table(masks, order, cyclic, excl, cons_of, k)
        cut |= comp_cut
        merged: dict = {}
        for ma, sa in table.items():
            for mb, sb in comp.items():
                slot = merged.setdefault(ma | mb, {})
                for za, xa in sa.items():
                    for zb, xb in sb.items():
                        z = za + zb
                        if z > k:
                            cut = True
                        elif z not in slot:
                            slot[z] = xa | xb
        table = merged
        if not table:
            break
    sizes = table.get(full)
    if not sizes:
        return None, None, len(constraints), cut
    return sizes[min(sizes)], sizes[max(sizes)], len(constraints), cut


def _component_table(masks, order, cyclic, excl, cons_of, k):
    """DP along one path or cycle.

    State: (first in X, first still needs a witness, previous in X,
    previous still needs a witness).  A vertex in X needs a neighbour
    outside the final cover; an excluded neighbour settles it at once.
    """
    states = {}
    cut = False
    last = len(order) - 1
    for i, v in enumerate(order):
        free = bool(masks[v] & excl)
        bit = 1 << v
        cmask = cons_of.get(v, 0)
        nxt: dict = {}
        if i == 0:
            for inx in (0, 1):
                need = bool(inx and not free)
                key = (inx, need, inx, need if not cyclic else False)
                nxt[key] = {cmask if not inx else 0: {inx: bit if inx else 0}}
            states = nxt
            continue
        for (f_in, f_need, p_in, p_need), table in states.items():
            for inx in (0, 1):
                if not inx and not p_in:
                    continue  # edge left uncovered
                if inx and p_need:
                    continue  # previous vertex loses its last chance
                need = bool(inx and not free and p_in)
                nf_need = f_need
                if cyclic and i == 1 and not inx:
                    nf_need = False
                key = (f_in, nf_need, inx, need)
                slot = nxt.setdefault(key, {})
                for m, sizes in table.items():
                    m2 = m if inx else m | cmask
                    dst = slot.setdefault(m2, {})
                    for z, x in sizes.items():
                        z2 = z + inx
                        if z2 > k:
                            cut = True
                        elif z2 not in dst:
                            dst[z2] = x | bit if inx else x
        states = nxt
    out: dict = {}
    for (f_in, f_need, p_in, p_need), table in states.items():
        if cyclic and last > 0:
            if not f_in and not p_in:
                continue
            if p_need and p_in and f_in:
                continue
            if f_need and f_in and p_in:
                continue
        elif p_need:
            continue
        for m, sizes in table.items():
            dst = out.setdefault(m, {})
            for z, x in sizes.items():
                dst.setdefault(z, x)
    return out, cut


def solve_degree2_leaf(original: Graph, node: SearchNode):
    """``(min_ext, max_ext)`` extending the node's partial cover to a minimal cover, or None."""
    r = mask_of(node.residual)
    if any((original.masks[v] & r).bit_count() > 2 for v in iter_bits(r)):
        raise ValueError("residual has a vertex of degree above 2")
    lo, hi, _, _ = _leaf_extensions(
        original.masks, r, node.budget, mask_of(node.partial_cover), mask_of(node.excluded)
    )
    if lo is None:
        return None
    return set_of(lo), set_of(hi)


# ------------------------------------------------------------ search tree

class _Search:
    def __init__(self, masks, k: int):
        self.masks = masks
        self.k = k
        self.leaves = 0
        self.nodes = 0
        self.truncated = False
        self.max_constraints = 0
        self.lo = self.hi = None
        self.lo_cover = self.hi_cover = 0

    def run(self, n: int):
        stack = [((1 << n) - 1, self.k, 0, 0)]
        masks = self.masks
        while stack:
            r, k, cover, excl = stack.pop()
            self.nodes += 1
            x, best = -1, 2
            for v in iter_bits(r):
                d = (masks[v] & r).bit_count()
                if d > best:
                    x, best = v, d
            if x < 0:
                self.leaves += 1
                self._leaf(r, k, cover, excl)
                continue
            if k == 0:
                self.leaves += 1
                self.truncated = True
                continue
            nb = masks[x] & r
            children = [(r & ~(1 << x), k - 1, cover | (1 << x), excl)]
            if nb.bit_count() <= k:
                children.append((r & ~nb & ~(1 << x), k - nb.bit_count(), cover | nb, excl | (1 << x)))
            else:
                self.truncated = True
            stack.extend(reversed(children))

    def _leaf(self, r, k, cover, excl):
        lo, hi, ncons, cut = _leaf_extensions(self.masks, r, k, cover, excl)
        self.truncated |= cut
        self.max_constraints = max(self.max_constraints, ncons)
        if lo is None:
            return
        small, large = cover | lo, cover | hi
        if self.lo is None or small.bit_count() < self.lo:
            self.lo, self.lo_cover = small.bit_count(), small
        if self.hi is None or large.bit_count() > self.hi:
            self.hi, self.hi_cover = large.bit_count(), large


def vc_and_vcplus_branching(g: Graph, k: int) -> Optional[BranchResult]:
    """Smallest and largest minimal vertex covers among those of size at most ``k``.

    ``truncated`` in the result reports whether the budget cut anything off.
    It is conservative (a discarded partial extension may not have led to a
    minimal cover); when it is False the sizes are the true vc and vc+.
    """
    if k < 0:
        raise ValueError("budget must be non-negative")
    s = _Search(g.masks, k)
    s.run(g.n)
    if s.lo is None:
        return None
    return BranchResult(
        vc=s.lo,
        vc_plus=s.hi,
        min_cover=set_of(s.lo_cover),
        max_cover=set_of(s.hi_cover),
        tree=TreeStats(leaves=s.leaves, nodes=s.nodes, k=k),
        truncated=s.truncated,
        max_constraints=s.max_constraints,
    )


def greedy_minimal_cover(g: Graph) -> frozenset:
    """Start from all vertices and drop each one whose neighbours are all still in."""
    cover = (1 << g.n) - 1
    for v in g.vertices:
        if not g.masks[v] & ~cover:
            cover &= ~(1 << v)
    return set_of(cover)


def well_covered_via_branching(g: Graph) -> WellCoveredReport:
    start = time.perf_counter()
    k = len(greedy_minimal_cover(g))
    runs = 0
    while True:
        runs += 1
        res = vc_and_vcplus_branching(g, k)
        if res is not None and not res.truncated:
            break
        if k >= g.n:
            raise AssertionError("search truncated with budget n")
        k = min(max(2 * k, 1), g.n)
    if res.tree.k != res.vc_plus:
        # rerun at k = vc+ so the tree statistics describe the bounded tree
        runs += 1
        final = vc_and_vcplus_branching(g, res.vc_plus)
        res = BranchResult(res.vc, res.vc_plus, res.min_cover, res.max_cover, final.tree,
                           False, max(res.max_constraints, final.max_constraints))
    wc = res.vc == res.vc_plus
    everything = frozenset(g.vertices)
    return WellCoveredReport(
        well_covered=wc,
        algorithm="vcplus",
        n=g.n,
        alpha=g.n - res.vc,
        vc=res.vc,
        vc_plus=res.vc_plus,
        witness_small=None if wc else everything - res.max_cover,
        witness_large=None if wc else everything - res.min_cover,
        stats={
            "tree_leaves": res.tree.leaves,
            "tree_nodes": res.tree.nodes,
            "tree_k": res.tree.k,
            "runs": runs,
            "max_leaf_constraints": res.max_constraints,
            "constraint_flag": res.max_constraints > CONSTRAINT_FLAG,
            "elapsed_ms": (time.perf_counter() - start) * 1e3,
        },
    )
