"""Crown decompositions and the size kernel for well-covered graphs."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .errors import ContractError
from .graph import (
    Graph,
    greedy_maximal_matching,
    induced_subgraph,
    is_independent_set,
    max_bipartite_matching,
)
from .mvc_enum import minimum_vertex_cover


@dataclass(frozen=True)
class CrownDecomposition:
    crown: frozenset
    head: frozenset
    rest: frozenset
    matching: tuple  # (head vertex, crown vertex) pairs

    # short aliases matching the usual C / H / R names
    @property
    def C(self):
        return self.crown

    @property
    def H(self):
        return self.head

    @property
    def R(self):
        return self.rest


@dataclass(frozen=True)
class KernelOutcome:
    tag: str  # "not-well-covered" | "kernel"
    kernel_graph: Optional[Graph]
    k: int

    @property
    def is_kernel(self) -> bool:
        return self.tag == "kernel"


def isolated_vertices(g: Graph) -> list[int]:
    return [v for v in g.vertices if not g.masks[v]]


def strip_isolated(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Drop isolated vertices.  They lie in every maximal independent set,
    so the verdict is unchanged."""
    return induced_subgraph(g, [v for v in g.vertices if g.masks[v]])


def _require_no_isolated(g: Graph) -> None:
    iso = isolated_vertices(g)
    if iso:
        raise ContractError(f"graph has isolated vertices, e.g. {iso[0]}")


def find_crown_or_matching(g: Graph, k: int):
    """Either a list of ``k+1`` disjoint edges or a crown decomposition.

    Greedy maximal matching first; when it is small its unmatched side is
    independent, and a maximum matching from the matched vertices into it
    either is large or leaves unsaturated vertices whose alternating reach
    gives the crown.
    """
    _require_no_isolated(g)
    if k < 0 or g.n < 3 * k + 1:
        raise ContractError(f"need n >= 3k+1 (n={g.n}, k={k})")
    m1 = greedy_maximal_matching(g)
    if len(m1) > k:
        return m1[: k + 1]
    matched = frozenset(v for e in m1 for v in e)
    rest = frozenset(g.vertices) - matched
    m2 = max_bipartite_matching(g, matched, rest)
    if len(m2) > k:
        return m2.pairs[: k + 1]
    crown, head = m2.alternating_reach("right")
    # vertices whose whole neighbourhood is already in the head can join the crown
    crown = set(crown)
    for v in sorted(frozenset(g.vertices) - crown - head):
        if g.neighbors(v) <= head:
            crown.add(v)
    crown = frozenset(crown)
    pairs = tuple(sorted((h, m2.mate[h]) for h in head))
    remainder = frozenset(g.vertices) - crown - head
    return CrownDecomposition(crown, head, remainder, pairs)


def validate_crown(g: Graph, crown: CrownDecomposition) -> bool:
    c, h, r = crown.crown, crown.head, crown.rest
    if not c:
        return False
    if c & h or c & r or h & r or (c | h | r) != frozenset(g.vertices):
        return False
    if not is_independent_set(g, c):
        return False
    if any(g.neighbors(v) & r for v in c):
        return False
    used = set()
    for a, b in crown.matching:
        if a not in h or b not in c or not g.has_edge(a, b) or a in used or b in used:
            return False
        used.update((a, b))
    return h <= used


def kernelize(g: Graph) -> KernelOutcome:
    """A well-covered graph without isolated vertices has at most 5*vc vertices."""
    _require_no_isolated(g)
    k = len(minimum_vertex_cover(g))
    if g.n > 5 * k:
        return KernelOutcome("not-well-covered", None, k)
    return KernelOutcome("kernel", g, k)


def enumerate_crowns(g: Graph) -> Iterator[CrownDecomposition]:
    """Every crown decomposition of a small graph (brute force over crowns)."""
    everything = frozenset(g.vertices)
    for size in range(1, g.n + 1):
        for c in combinations(g.vertices, size):
            c = frozenset(c)
            if not is_independent_set(g, c):
                continue
            h = frozenset().union(*(g.neighbors(v) for v in c))
            m = max_bipartite_matching(g, h, c)
            if len(m) != len(h):
                continue
            yield CrownDecomposition(c, h, everything - c - h, tuple(m.pairs))


@dataclass(frozen=True)
class CrownAudit:
    crown: CrownDecomposition
    well_covered: bool
    rest_well_covered: bool
    crown_head_well_covered: bool
    crown_equals_head: bool
    rest_has_isolated: bool


def audit_crown(g: Graph, crown: CrownDecomposition, budget: int | None = None) -> CrownAudit:
    from .oracle import is_well_covered_oracle

    def wc(vs):
        return is_well_covered_oracle(induced_subgraph(g, vs)[0], budget).well_covered

    rest_graph = induced_subgraph(g, crown.rest)[0]
    return CrownAudit(
        crown=crown,
        well_covered=is_well_covered_oracle(g, budget).well_covered,
        rest_well_covered=wc(crown.rest),
        crown_head_well_covered=wc(crown.crown | crown.head),
        crown_equals_head=len(crown.crown) == len(crown.head),
        rest_has_isolated=bool(isolated_vertices(rest_graph)),
    )


def crown_lemma_audit(g: Graph, budget: int | None = None) -> CrownAudit:
    """Find a crown of ``g`` and record the oracle facts the crown lemmas speak about."""
    _require_no_isolated(g)
    k = len(minimum_vertex_cover(g))
    found = find_crown_or_matching(g, k)
    if not isinstance(found, CrownDecomposition):
        # a matching larger than a vertex cover cannot exist
        raise AssertionError("matching of size vc+1 found")
    return audit_crown(g, found, budget)
