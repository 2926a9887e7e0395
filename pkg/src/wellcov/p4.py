"""Well-coveredness for graphs with few induced P4s.

The graph is split recursively: disjoint union, join, pseudo-split or
quasi-spider partitions, a separable p-component, or a small / fixed base
graph.  Each piece reports whether it is well covered, its independence
number and a maximum independent set; NO answers carry two maximal
independent sets of different sizes, lifted back to the caller's ids.

The split is found with straightforward polynomial-time tests rather than a
linear-time decomposition.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from . import kernels
from .errors import ContractError, DecompositionFailed, GuardExceeded
from .graph import (
    Graph,
    complement,
    connected_components,
    induced_subgraph,
    iter_bits,
    mask_of,
    set_of,
)
from .reports import WellCoveredReport

P4_GUARD = 500
EXT_LADEN_GUARD = 30
QQ4_GUARD = 20
MODES = ("ext-laden", "qq4")


# ------------------------------------------------------------------ P4s

def iter_induced_p4s(g: Graph):
    """Yield each induced P4 once as ``(w, x, y, z)`` with middle edge ``x < y``."""
    masks = g.masks
    for x, y in g.edges:
        ends_x = masks[x] & ~masks[y] & ~(1 << y)
        ends_y = masks[y] & ~masks[x] & ~(1 << x)
        if not ends_x or not ends_y:
            continue
        for w in iter_bits(ends_x):
            for z in iter_bits(ends_y & ~masks[w]):
                yield (w, x, y, z)


def count_induced_p4s(g: Graph) -> int:
    return sum(1 for _ in iter_induced_p4s(g))


def p_components(g: Graph) -> list[frozenset]:
    """Classes of the relation "lie together on an induced P4", ordered by smallest member."""
    if g.n > P4_GUARD:
        raise GuardExceeded(f"P4 enumeration limited to n <= {P4_GUARD}")
    parent = list(range(g.n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a, b):
        a, b = find(a), find(b)
        if a != b:
            parent[max(a, b)] = min(a, b)

    masks = g.masks
    for x, y in g.edges:
        ends_x = masks[x] & ~masks[y] & ~(1 << y)
        ends_y = masks[y] & ~masks[x] & ~(1 << x)
        for w in iter_bits(ends_x):
            zs = ends_y & ~masks[w]
            if zs:
                union(w, x)
                union(x, y)
                for z in iter_bits(zs):
                    union(y, z)
    groups: dict[int, list[int]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    return sorted((frozenset(vs) for vs in groups.values()), key=min)


# ----------------------------------------------------------- partitions

@dataclass(frozen=True)
class PseudoSplitPartition:
    R: frozenset
    C: frozenset
    S: frozenset


@dataclass(frozen=True)
class SpiderPartition:
    base: PseudoSplitPartition
    kind: str  # "thin" | "thick"
    pairs: tuple  # (c, s) pairs of the underlying spider
    substitution: Optional[tuple] = None  # (position, "K2" | "co-K2", (u, v))

    @property
    def k(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True)
class PComponentSeparation:
    H: frozenset
    H1: frozenset
    H2: frozenset


def is_pseudo_split(g: Graph, part: PseudoSplitPartition) -> bool:
    r, c, s = mask_of(part.R), mask_of(part.C), mask_of(part.S)
    if r & c or r & s or c & s or (r | c | s) != (1 << g.n) - 1 or not c or not s:
        return False
    m = g.masks
    for v in iter_bits(c):
        if (m[v] | (1 << v)) & c != c or not m[v] & s:
            return False
    for v in iter_bits(s):
        if m[v] & s or m[v] & c == c:
            return False
    for v in iter_bits(r):
        if m[v] & c != c or m[v] & s:
            return False
    return True


def iter_pseudo_split_partitions(g: Graph):
    """Every pseudo-split partition, by degree stratification.

    A C vertex has degree at least |C|+|R|, an R vertex between |C| and
    |C|+|R|-1 and an S vertex below |C|, so the sizes fix the partition.
    """
    n = g.n
    deg = [m.bit_count() for m in g.masks]
    at_least = [0] * (n + 2)
    for d in deg:
        at_least[d] += 1
    for d in range(n - 1, -1, -1):
        at_least[d] += at_least[d + 1]
    for nr in range(0, n - 1):
        for nc in range(1, n - nr):
            if at_least[nc + nr] != nc or at_least[nc] != nc + nr:
                continue
            C = frozenset(v for v in g.vertices if deg[v] >= nc + nr)
            R = frozenset(v for v in g.vertices if nc <= deg[v] < nc + nr)
            S = frozenset(g.vertices) - C - R
            part = PseudoSplitPartition(R, C, S)
            if is_pseudo_split(g, part):
                yield part


def pseudo_split_partition(g: Graph) -> Optional[PseudoSplitPartition]:
    return next(iter_pseudo_split_partitions(g), None)


def _spider_pairs(g: Graph, part: PseudoSplitPartition):
    """``(kind, pairs)`` if the partition is a spider, else None."""
    k = len(part.C)
    if k < 2 or len(part.S) != k:
        return None
    smask = mask_of(part.S)
    cmask = mask_of(part.C)
    for kind, want in (("thin", 1), ("thick", k - 1)):
        pairs = []
        for c in sorted(part.C):
            nb = g.masks[c] & smask
            if nb.bit_count() != want:
                break
            partner = nb if kind == "thin" else smask & ~nb
            if partner.bit_count() != 1:
                break
            pairs.append((c, partner.bit_length() - 1))
        else:
            if len({s for _, s in pairs}) == k and all(
                (g.masks[s] & cmask).bit_count() == want for s in part.S
            ):
                return kind, tuple(pairs)
    return None


def spider_partition(g: Graph) -> Optional[SpiderPartition]:
    for part in iter_pseudo_split_partitions(g):
        found = _spider_pairs(g, part)
        if found:
            return SpiderPartition(part, found[0], found[1])
    return None


def quasi_spider_partition(g: Graph) -> Optional[SpiderPartition]:
    """A spider, or a spider with one C or S vertex replaced by a K2 or its complement."""
    plain = spider_partition(g)
    if plain is not None:
        return plain
    masks = g.masks
    for u in g.vertices:
        for v in range(u + 1, g.n):
            if masks[u] | (1 << u) == masks[v] | (1 << v):
                sub = "K2"
            elif masks[u] == masks[v]:
                sub = "co-K2"
            else:
                continue
            keep = [w for w in g.vertices if w != v]
            h, ids = induced_subgraph(g, keep)
            found = spider_partition(h)
            if found is None:
                continue
            base = found.base
            lift = lambda vs: frozenset(ids[i] for i in vs)  # noqa: E731
            C, S, R = lift(base.C), lift(base.S), lift(base.R)
            if u in C:
                C = C | {v}
            elif u in S:
                S = S | {v}
            else:
                continue
            pairs = tuple((ids[a], ids[b]) for a, b in found.pairs)
            return SpiderPartition(PseudoSplitPartition(R, C, S), found.kind, pairs, (u, sub, (u, v)))
    return None


def _require_separable_input(g: Graph) -> list[frozenset]:
    if g.n > P4_GUARD:
        raise GuardExceeded(f"P4 enumeration limited to n <= {P4_GUARD}")
    if len(connected_components(g)) != 1 or len(connected_components(complement(g))) != 1:
        raise ContractError("graph and its complement must both be connected")
    comps = p_components(g)
    if len(comps) == 1:
        raise ContractError("graph is p-connected")
    return comps


def separable_p_component(g: Graph, max_size: int | None = None) -> Optional[PComponentSeparation]:
    """First p-component H (by smallest member) whose outside is complete to H1 and anticomplete to H2."""
    comps = _require_separable_input(g)
    everything = (1 << g.n) - 1
    for comp in comps:
        if len(comp) < 2 or (max_size is not None and len(comp) > max_size):
            continue
        hmask = mask_of(comp)
        out = everything & ~hmask
        if not out:
            continue
        h1 = {v for v in comp if g.masks[v] & out == out}
        h2 = {v for v in comp if not g.masks[v] & out}
        if len(h1) + len(h2) != len(comp):
            continue
        sub, ids = induced_subgraph(g, comp)
        ok = True
        for w, x, y, z in iter_induced_p4s(sub):
            quad = (ids[w], ids[x], ids[y], ids[z])
            inside = sum(1 for a in quad if a in h1)
            if 0 < inside < 4 and not (quad[1] in h1 and quad[2] in h1 and quad[0] in h2 and quad[3] in h2):
                ok = False
                break
        if ok:
            return PComponentSeparation(comp, frozenset(h1), frozenset(h2))
    return None


# --------------------------------------------------------------- base graphs

def _is_path(g: Graph) -> bool:
    degs = sorted(g.degree(v) for v in g.vertices)
    return g.m == g.n - 1 and len(connected_components(g)) == 1 and degs[-1] <= 2


def base_graph_kind(g: Graph) -> Optional[str]:
    """"c5", "p5" or "p5bar" for those three 5-vertex graphs."""
    if g.n != 5:
        return None
    if g.m == 5 and all(g.degree(v) == 2 for v in g.vertices) and len(connected_components(g)) == 1:
        return "c5"
    if _is_path(g):
        return "p5"
    if g.m == 6 and _is_path(complement(g)):
        return "p5bar"
    return None


# ------------------------------------------------------------ decomposition

@dataclass
class DecompositionCase:
    tag: str  # single-vertex|union|join|c5|p5|p5bar|pseudo-split|quasi-spider|p-component|small
    parts: Optional[list] = None
    partition: object = None
    separation: Optional[PComponentSeparation] = None


def _check_mode(mode: str, q: int | None) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown class {mode!r}")
    if mode == "qq4" and (q is None or q < 4):
        raise ValueError("qq4 mode needs q >= 4")


def decompose_step(g: Graph, mode: str = "ext-laden", q: int | None = None) -> DecompositionCase:
    _check_mode(mode, q)
    if g.n == 0:
        raise DecompositionFailed("empty graph")
    if g.n == 1:
        return DecompositionCase("single-vertex")
    comps = connected_components(g)
    if len(comps) > 1:
        return DecompositionCase("union", parts=comps)
    cocomps = connected_components(complement(g))
    if len(cocomps) > 1:
        return DecompositionCase("join", parts=cocomps)
    if mode == "ext-laden":
        kind = base_graph_kind(g)
        if kind:
            return DecompositionCase(kind)
    part = pseudo_split_partition(g)
    if part is not None:
        return DecompositionCase("pseudo-split", partition=part)
    spider = quasi_spider_partition(g)
    if spider is not None:
        return DecompositionCase("quasi-spider", partition=spider)
    if mode == "qq4":
        if g.n > P4_GUARD:
            raise GuardExceeded(f"P4 enumeration limited to n <= {P4_GUARD}")
        if len(p_components(g)) > 1:
            sep = separable_p_component(g, max_size=q - 1)
            if sep is not None:
                return DecompositionCase("p-component", separation=sep)
        if g.n < q:
            return DecompositionCase("small")
    raise DecompositionFailed(f"no decomposition case applies ({mode}, n={g.n})", residual=g)


@dataclass
class _Res:
    wc: bool
    alpha: int
    max_is: frozenset
    small: Optional[frozenset] = None
    large: Optional[frozenset] = None


def _no(a: frozenset, b: frozenset):
    return (a, b) if len(a) < len(b) else (b, a)


class _Solver:
    def __init__(self, g: Graph, mode: str, q: int | None):
        self.g = g
        self.mode = mode
        self.q = q
        self.counts: dict[str, int] = {}

    def solve(self, vs) -> _Res:
        sub, ids = induced_subgraph(self.g, vs)
        try:
            case = decompose_step(sub, self.mode, self.q)
        except DecompositionFailed as exc:
            raise DecompositionFailed(str(exc), residual=sub, mapping=ids) from None
        self.counts[case.tag] = self.counts.get(case.tag, 0) + 1
        lift = lambda xs: frozenset(ids[i] for i in xs)  # noqa: E731
        tag = case.tag
        if tag == "single-vertex":
            return _Res(True, 1, frozenset(ids))
        if tag == "union":
            return self._union([self.solve(lift(p)) for p in case.parts])
        if tag == "join":
            return self._join([self.solve(lift(p)) for p in case.parts])
        if tag in ("c5", "p5", "p5bar", "small"):
            return self._brute(sub, ids, expect={"c5": True, "p5bar": True, "p5": False}.get(tag))
        if tag == "pseudo-split":
            p = case.partition
            return self._pseudo_split(lift(p.R), lift(p.C), lift(p.S))
        if tag == "quasi-spider":
            return self._quasi_spider(case.partition, lift)
        if tag == "p-component":
            return self._p_component(case.separation, lift, ids)
        raise AssertionError(tag)

    # each rule below works in original ids

    def _union(self, parts: list[_Res]) -> _Res:
        base = frozenset().union(*(p.max_is for p in parts))
        res = _Res(all(p.wc for p in parts), sum(p.alpha for p in parts), base)
        if not res.wc:
            bad = next(p for p in parts if not p.wc)
            others = base - bad.max_is
            res.small, res.large = bad.small | others, bad.large | others
        return res

    def _join(self, parts: list[_Res]) -> _Res:
        best = max(parts, key=lambda p: p.alpha)
        res = _Res(False, best.alpha, best.max_is)
        bad = next((p for p in parts if not p.wc), None)
        if bad is not None:
            res.small, res.large = bad.small, bad.large
        elif len({p.alpha for p in parts}) > 1:
            lo = min(parts, key=lambda p: p.alpha)
            res.small, res.large = lo.max_is, best.max_is
        else:
            res.wc = True
        return res

    def _brute(self, sub: Graph, ids, expect=None) -> _Res:
        _, lo, lo_m, hi, hi_m = kernels.mis_extremes(sub.masks, 10**7)
        lift = lambda m: frozenset(ids[i] for i in iter_bits(m))  # noqa: E731
        wc = lo == hi
        if expect is not None and wc != expect:
            raise AssertionError("base graph verdict disagrees with its rule")
        res = _Res(wc, hi, lift(hi_m))
        if not wc:
            res.small, res.large = lift(lo_m), lift(hi_m)
        return res

    def _pseudo_split(self, R, C, S) -> _Res:
        g = self.g
        if R:
            rres = self.solve(R)
            large = S | rres.max_is
            c = min(C)
            small = frozenset({c}) | (S - g.neighbors(c))
            return _Res(False, len(large), large, small, large)
        multi = [c for c in sorted(C) if len(g.neighbors(c) & S) != 1]
        if not multi:
            return _Res(True, len(S), S)
        c = multi[0]
        small = frozenset({c}) | (S - g.neighbors(c))
        return _Res(False, len(S), S, small, S)

    def _quasi_spider(self, sp: SpiderPartition, lift) -> _Res:
        g = self.g
        base = sp.base
        R, C, S = lift(base.R), lift(base.C), lift(base.S)
        sub_kind = sp.substitution[1] if sp.substitution else None
        rule_wc = not R and (sp.kind == "thin" or sp.k == 2) and sub_kind in (None, "K2")
        # maximal independent sets of G[C u S]; there are O(k) of them
        pv = sorted(C | S)
        ph, pids = induced_subgraph(g, pv)
        cl = mask_of(i for i, v in enumerate(pids) if v in C)
        p_sets = kernels.mis_all(ph.masks, 10**7)
        lift_p = lambda m: frozenset(pids[i] for i in iter_bits(m))  # noqa: E731
        rres = None
        if not R:
            family = [lift_p(m) for m in p_sets]
        else:
            # a set meeting R avoids C, so it is an R part plus an S part
            rres = self.solve(R)
            family = [lift_p(m) for m in p_sets if m & cl]
            s_sets = [lift_p(m) for m in p_sets if not m & cl]
            family += [rres.max_is | t for t in s_sets]
        lo = min(family, key=len)
        hi = max(family, key=len)
        res = _Res(len(lo) == len(hi), len(hi), hi)
        if rres is not None and not rres.wc:
            res.wc = False
            res.small, res.large = rres.small | s_sets[0], rres.large | s_sets[0]
        elif not res.wc:
            res.small, res.large = lo, hi
        self._confirm(rule_wc, res.wc)
        return res

    @staticmethod
    def _confirm(rule_wc: bool, found_wc: bool) -> None:
        if rule_wc != found_wc:
            raise AssertionError("quasi-spider rule disagrees with its independent sets")

    def _p_component(self, sep: PComponentSeparation, lift, ids) -> _Res:
        g = self.g
        H, H1, H2 = lift(sep.H), lift(sep.H1), lift(sep.H2)
        rest = frozenset(ids) - H
        kres = self.solve(rest)
        if H2:
            h2g, h2ids = induced_subgraph(g, H2)
            h2res = self._brute(h2g, h2ids)
        else:
            h2res = _Res(True, 0, frozenset())
        target = kres.alpha + h2res.alpha
        outer = kres.max_is | h2res.max_is
        hg, hids = induced_subgraph(g, H)
        h1mask = mask_of(i for i, v in enumerate(hids) if v in H1)
        inner = [frozenset(hids[i] for i in iter_bits(m))
                 for m in kernels.mis_all(hg.masks, 10**7) if m & h1mask]
        top = max([outer] + inner, key=len)
        res = _Res(False, len(top), top)
        if not kres.wc:
            res.small, res.large = kres.small | h2res.max_is, kres.large | h2res.max_is
        elif not h2res.wc:
            res.small, res.large = kres.max_is | h2res.small, kres.max_is | h2res.large
        else:
            odd = next((s for s in inner if len(s) != target), None)
            if odd is None:
                res.wc = True
            else:
                res.small, res.large = _no(odd, outer)
        return res


def well_covered_few_p4(g: Graph, mode: str = "ext-laden", q: int | None = None):
    """Decide by decomposition; returns ``(report, alpha)``.

    vc+ is not computed on NO answers; on YES it equals vc.
    """
    _check_mode(mode, q)
    start = time.perf_counter()
    if g.n == 0:
        rep = WellCoveredReport(True, "p4", 0, 0, 0, 0, stats={"cases": {}})
        return rep, 0
    solver = _Solver(g, mode, q)
    res = solver.solve(range(g.n))
    rep = WellCoveredReport(
        well_covered=res.wc,
        algorithm="p4",
        n=g.n,
        alpha=res.alpha,
        vc=g.n - res.alpha,
        vc_plus=g.n - res.alpha if res.wc else None,
        witness_small=res.small,
        witness_large=res.large,
        stats={
            "class": mode,
            "q": q,
            "cases": dict(sorted(solver.counts.items())),
            "elapsed_ms": (time.perf_counter() - start) * 1e3,
        },
    )
    return rep, res.alpha


# ------------------------------------------------------------ class check

def _quads(g: Graph):
    p4s, bad = [], []
    for quad in combinations(g.vertices, 4):
        m = mask_of(quad)
        degs = sorted((g.masks[v] & m).bit_count() for v in quad)
        if degs == [1, 1, 2, 2]:
            # four vertices with degrees 1,1,2,2 and three edges form a P4
            p4s.append(m)
        elif degs == [1, 1, 1, 1] or degs == [2, 2, 2, 2]:
            bad.append(m)  # 2K2 or C4
    return p4s, bad


def is_class_member(g: Graph, mode: str = "ext-laden", q: int | None = None) -> bool:
    """Literal check of the class definition by brute force over small vertex subsets."""
    _check_mode(mode, q)
    if mode == "ext-laden":
        if g.n > EXT_LADEN_GUARD:
            raise GuardExceeded(f"ext-laden membership check limited to n <= {EXT_LADEN_GUARD}")
        p4s, bad = _quads(g)
        if len(p4s) <= 2 or not bad:
            return True
        if g.n <= 6:
            return False
        # counts only grow with the subset, so six-vertex supersets of each
        # 2K2/C4 are the only sets to test
        for b in bad:
            outside = [v for v in g.vertices if not b >> v & 1]
            for a, c in combinations(outside, 2):
                s = b | (1 << a) | (1 << c)
                if sum(1 for p in p4s if p & s == p) > 2:
                    return False
        return True
    if g.n > QQ4_GUARD:
        raise GuardExceeded(f"(q,q-4) membership check limited to n <= {QQ4_GUARD}")
    p4s, _ = _quads(g)
    if len(p4s) <= q - 4:
        return True
    if g.n <= q:
        return False
    for sub in combinations(g.vertices, q):
        s = mask_of(sub)
        if sum(1 for p in p4s if p & s == p) > q - 4:
            return False
    return True
