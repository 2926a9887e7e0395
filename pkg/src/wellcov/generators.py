"""Reproducible instance families.

Randomness comes from an embedded SplitMix64 stream so that a (family,
parameters, seed) triple names the same graph in any implementation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError

PRNG_VERSION = "splitmix64-v1"
_M64 = (1 << 64) - 1

FAMILIES = (
    "gnp", "path", "cycle", "star", "complete", "empty", "corona",
    "thin-spider", "thick-spider", "pseudo-split", "cograph", "union-join-recipe",
    "clique-fringe", "books", "separable", "figure1",
)
SUBSTITUTIONS = (None, "c-K2", "c-coK2", "s-K2", "s-coK2")


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _M64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _M64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform in [0, 1) with 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection (no modulo bias)."""
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def between(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def split(self) -> "SplitMix64":
        return SplitMix64(self.next_u64())


@dataclass(frozen=True)
class GenSpec:
    family: str
    n: Optional[int] = None
    p: Optional[float] = None
    k: Optional[int] = None
    q: Optional[int] = None
    seed: int = 0
    variant: Optional[str] = None  # spider substitution, corona base, recipe text
    r: int = 0  # size of the R part for spiders


# ---------------------------------------------------------------- builders

def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for h in graphs:
        edges.extend((u + off, v + off) for u, v in h.edges)
        off += h.n
    return Graph(off, edges)


def join(*graphs: Graph) -> Graph:
    g = disjoint_union(*graphs)
    edges = list(g.edges)
    offs, off = [], 0
    for h in graphs:
        offs.append((off, off + h.n))
        off += h.n
    for i, (a0, a1) in enumerate(offs):
        for b0, b1 in offs[i + 1:]:
            edges.extend((u, v) for u in range(a0, a1) for v in range(b0, b1))
    return Graph(g.n, edges)


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def corona(h: Graph) -> Graph:
    """Attach one pendant vertex ``v + n`` to every vertex ``v``."""
    return Graph(2 * h.n, list(h.edges) + [(v, v + h.n) for v in h.vertices])


def gnp(n: int, p: float, rng: SplitMix64) -> Graph:
    # pairs i < j in lexicographic order, one draw each
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def figure1() -> Graph:
    """c1..c5 are 0..4 and n1..n5 are 5..9."""
    edges = [(0, 1), (1, 2), (2, 3), (0, 5), (0, 6), (1, 6), (2, 7), (3, 8), (4, 8), (4, 9)]
    return Graph(10, edges)


def p5bar() -> Graph:
    p5 = path(5)
    return Graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5) if not p5.has_edge(i, j)])


def spider(k: int, thick: bool = False, substitution: Optional[str] = None,
           r_part: Optional[Graph] = None, position: int = 0) -> Graph:
    """c_i = i, s_i = k + i, R after that, the substituted copy last.

    ``substitution`` is one of "c-K2", "c-coK2", "s-K2", "s-coK2"; the copy
    twins ``c_position`` or ``s_position``.
    """
    if k < 2:
        raise GraphError("a spider needs k >= 2")
    if substitution not in SUBSTITUTIONS:
        raise GraphError(f"unknown substitution {substitution!r}")
    r_part = r_part or Graph(0)
    rn = r_part.n
    n = 2 * k + rn + (1 if substitution else 0)
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for i in range(k):
        for j in range(k):
            if (i == j) != thick:
                edges.append((i, k + j))
    base = 2 * k
    edges.extend((base + u, base + v) for u, v in r_part.edges)
    edges.extend((c, base + x) for c in range(k) for x in range(rn))
    if substitution:
        side, kind = substitution.split("-")
        orig = position if side == "c" else k + position
        copy = n - 1
        nbrs = {v for u, v in edges if u == orig} | {u for u, v in edges if v == orig}
        edges.extend((copy, w) for w in nbrs)
        if kind == "K2":
            edges.append((orig, copy))
    return Graph(n, edges)


def random_cograph(n: int, rng: SplitMix64, max_mis: int = 2_000_000) -> Graph:
    """Random union/join tree; unions whose set count would pass ``max_mis`` become joins."""
    g, _ = _cograph(n, rng, max_mis)
    return g


def _cograph(n, rng, cap):
    if n == 1:
        return Graph(1), 1
    left = rng.between(1, n - 1)
    a, ca = _cograph(left, rng, cap)
    b, cb = _cograph(n - left, rng, cap)
    # the set count multiplies under union and adds under join
    if rng.random() < 0.5 and ca * cb <= cap:
        return disjoint_union(a, b), ca * cb
    return join(a, b), ca + cb


def random_pseudo_split(n: int, rng: SplitMix64) -> Graph:
    """C = 0.., S after C, R last; R is a cograph or a smaller pseudo-split."""
    if n < 4:
        raise GraphError("pseudo-split generator needs n >= 4")
    for _ in range(1000):
        roll = rng.below(3)
        nr = 0 if roll == 0 or n < 5 else rng.between(1, max(1, min(n // 3, n - 4)))
        # C and S both need two vertices: a lone C vertex's S neighbour
        # would see all of C, and a lone S vertex would see all of C
        nc = rng.between(2, n - nr - 2)
        ns = n - nr - nc
        edges = [(i, j) for i in range(nc) for j in range(i + 1, nc)]
        if roll == 0:
            # every C vertex gets exactly one S neighbour
            for c in range(nc):
                edges.append((c, nc + rng.below(ns)))
        else:
            p = 0.2 + 0.6 * rng.random()
            edges.extend((c, nc + s) for c in range(nc) for s in range(ns) if rng.random() < p)
        if nr:
            if nr >= 4 and rng.below(2):
                r_part = random_pseudo_split(nr, rng)
            else:
                r_part = random_cograph(nr, rng)
            off = nc + ns
            edges.extend((off + u, off + v) for u, v in r_part.edges)
            edges.extend((c, off + x) for c in range(nc) for x in range(nr))
        g = Graph(n, edges)
        if _valid_pseudo_split(g, nc, ns):
            return g
    raise GraphError("could not build a pseudo-split")


def _valid_pseudo_split(g: Graph, nc: int, ns: int) -> bool:
    cmask = (1 << nc) - 1
    smask = ((1 << ns) - 1) << nc
    return all(g.masks[c] & smask for c in range(nc)) and all(
        g.masks[s] & cmask != cmask for s in range(nc, nc + ns)
    )


def clique_fringe(n: int, k: int, rng: SplitMix64) -> Graph:
    """K_k core plus ``n - k`` fringe vertices, each joined to 1-3 core vertices.

    Every core vertex gets a fringe neighbour, so the core is a minimum cover.
    """
    if k < 1 or n < 2 * k:
        raise GraphError("clique-fringe needs k >= 1 and n >= 2k")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for f in range(k, n):
        if f < 2 * k:
            edges.append((f - k, f))
            continue
        picks = {rng.below(k) for _ in range(rng.between(1, 3))}
        edges.extend((c, f) for c in sorted(picks))
    return Graph(n, edges)


def books(n: int, count: int) -> Graph:
    """``count`` disjoint books: a spine edge plus pages adjacent to both spine ends."""
    if count < 1 or n < 3 * count:
        raise GraphError("books need n >= 3 * count")
    parts = []
    for i in range(count):
        size = n // count + (1 if i < n % count else 0)
        pages = size - 2
        parts.append(Graph(size, [(0, 1)] + [(e, p) for p in range(2, 2 + pages) for e in (0, 1)]))
    return disjoint_union(*parts)


def separable_instance(n: int, rng: SplitMix64, variant: Optional[str] = None) -> Graph:
    """P4 ``s1 c1 c2 s2`` with both ends replaced by K2 or co-K2, plus a cograph joined to c1, c2.

    The P4 part (6 vertices) is a separable p-component with c1, c2 on the
    inside; ``variant`` like "K2,coK2" fixes the two replacements.
    """
    if n < 7:
        raise GraphError("separable family needs n >= 7")
    kinds = variant.split(",") if variant else [("K2", "coK2")[rng.below(2)] for _ in range(2)]
    if len(kinds) != 2 or any(x not in ("K2", "coK2") for x in kinds):
        raise GraphError(f"bad separable variant {variant!r}")
    # ids: s1=0 s1'=1 c1=2 c2=3 s2=4 s2'=5, cograph 6..
    edges = [(2, 3), (0, 2), (1, 2), (3, 4), (3, 5)]
    if kinds[0] == "K2":
        edges.append((0, 1))
    if kinds[1] == "K2":
        edges.append((4, 5))
    rest = random_cograph(n - 6, rng)
    edges.extend((6 + u, 6 + v) for u, v in rest.edges)
    edges.extend((c, x) for c in (2, 3) for x in range(6, n))
    return Graph(n, edges)


_NAMED = {
    "c5": lambda: cycle(5),
    "p5": lambda: path(5),
    "p5bar": p5bar,
    "figure1": figure1,
}


def parse_recipe(text: str) -> Graph:
    """Build a graph from ``union(a, b, ...)`` / ``join(...)`` over leaves like ``cycle:5``."""
    pos = 0
    text = text.replace(" ", "")

    def expr():
        nonlocal pos
        m = re.match(r"([a-z0-9-]+)(?::(\d+))?", text[pos:])
        if not m:
            raise GraphError(f"bad recipe near {text[pos:]!r}")
        name, arg = m.group(1), m.group(2)
        pos += m.end()
        if name in ("union", "join") and pos < len(text) and text[pos] == "(":
            pos += 1
            parts = [expr()]
            while text[pos] == ",":
                pos += 1
                parts.append(expr())
            if text[pos] != ")":
                raise GraphError("unbalanced recipe")
            pos += 1
            return disjoint_union(*parts) if name == "union" else join(*parts)
        size = int(arg) if arg else None
        builders = {"cycle": cycle, "path": path, "complete": complete, "star": star,
                    "empty": Graph, "corona-cycle": lambda t: corona(cycle(t)),
                    "corona-path": lambda t: corona(path(t))}
        if name in builders:
            if size is None:
                raise GraphError(f"{name} needs a size")
            return builders[name](size)
        if name in _NAMED:
            return _NAMED[name]()
        raise GraphError(f"unknown recipe leaf {name!r}")

    try:
        g = expr()
    except IndexError:
        raise GraphError("truncated recipe") from None
    if pos != len(text):
        raise GraphError(f"trailing recipe text {text[pos:]!r}")
    return g


def generate(spec: GenSpec) -> Graph:
    f = spec.family
    rng = SplitMix64(spec.seed)

    def need_n(lo=0):
        if spec.n is None or spec.n < lo:
            raise GraphError(f"{f} needs n >= {lo}")
        return spec.n

    if f == "gnp":
        if spec.p is None or not 0 <= spec.p <= 1:
            raise GraphError("gnp needs 0 <= p <= 1")
        return gnp(need_n(), spec.p, rng)
    if f == "path":
        return path(need_n())
    if f == "cycle":
        return cycle(need_n(3))
    if f == "star":
        return star(need_n(2) - 1)
    if f == "complete":
        return complete(need_n())
    if f == "empty":
        return Graph(need_n())
    if f == "corona":
        base = GenSpec(spec.variant or "cycle", n=spec.n, p=spec.p, k=spec.k, seed=spec.seed)
        return corona(generate(base))
    if f in ("thin-spider", "thick-spider"):
        k = spec.k if spec.k is not None else 3
        sub = spec.variant or None
        r_part = random_cograph(spec.r, rng.split()) if spec.r else None
        position = rng.below(k)
        return spider(k, thick=f == "thick-spider", substitution=sub, r_part=r_part, position=position)
    if f == "pseudo-split":
        return random_pseudo_split(need_n(4), rng)
    if f == "cograph":
        return random_cograph(need_n(1), rng)
    if f == "union-join-recipe":
        if not spec.variant:
            raise GraphError("union-join-recipe needs a recipe in variant")
        return parse_recipe(spec.variant)
    if f == "clique-fringe":
        return clique_fringe(need_n(2), spec.k if spec.k is not None else 20, rng)
    if f == "books":
        return books(need_n(3), spec.k if spec.k is not None else 4)
    if f == "separable":
        return separable_instance(need_n(7), rng, spec.variant)
    if f in _NAMED:
        return _NAMED[f]()
    raise GraphError(f"unknown family {f!r}")
