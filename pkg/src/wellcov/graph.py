"""Simple undirected graphs on dense vertex ids, plus the shared subroutines.

Vertices are ``0..n-1``.  Besides adjacency sets every graph carries an
adjacency bitmask per vertex (a Python int), which is what the search
kernels operate on.  All iteration orders are by ascending id.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

VertexSet = frozenset
Matching = list  # list of (u, v) pairs


class GraphError(ValueError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> frozenset:
    return frozenset(iter_bits(mask))


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("_n", "_adj", "_masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("negative vertex count")
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._adj = tuple(frozenset(a) for a in adj)
        self._masks = tuple(mask_of(a) for a in adj)
        self._edges = tuple((u, v) for u in range(n) for v in sorted(adj[u]) if u < v)

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        n = len(masks)
        return cls(n, ((u, v) for u in range(n) for v in iter_bits(masks[u]) if u < v))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def vertices(self) -> range:
        return range(self._n)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def adjacency(self) -> tuple[frozenset, ...]:
        return self._adj

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self._adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def closed_neighborhood_mask(self, v: int) -> int:
        return self._masks[v] | (1 << v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.m})"


# ---------------------------------------------------------------- parsing

def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    """Parse ``edge-list`` (0-indexed "u v" lines) or ``dimacs`` (1-indexed)."""
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "edge-list":
        return _parse_edge_list(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    raise GraphError(f"unknown graph format {fmt!r}")


def detect_format(text: str) -> str:
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        return "dimacs" if line[0] in "pce" and not line[0].isdigit() else "edge-list"
    return "edge-list"


def read_graph(path, fmt: str = "auto") -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read(), fmt)


def _parse_edge_list(text: str) -> Graph:
    declared = None
    edges: list[tuple[int, int]] = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            # "# vertices: N" keeps isolated vertices across a round trip
            body = line[1:].strip()
            if body.startswith("vertices:"):
                try:
                    declared = int(body.split(":", 1)[1])
                except ValueError:
                    raise ParseError(f"bad vertex count {body!r}", lineno) from None
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {raw!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {raw!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex id in {raw!r}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        if declared is not None and max(u, v) >= declared:
            raise ParseError(f"vertex id out of range (n={declared})", lineno)
        top = max(top, u, v)
        edges.append((u, v))
    n = declared if declared is not None else top + 1
    return Graph(n, edges)


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] == "c" or line[0] == "#":
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(f"bad problem line {raw!r}", lineno)
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise ParseError(f"bad problem line {raw!r}", lineno) from None
            continue
        if parts[0] == "e":
            if len(parts) != 3:
                raise ParseError(f"bad edge line {raw!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError(f"non-integer vertex in {raw!r}", lineno) from None
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            if u < 1 or v < 1 or (n is not None and (u > n or v > n)):
                raise ParseError(f"vertex id out of range in {raw!r}", lineno)
            edges.append((u - 1, v - 1))
            continue
        raise ParseError(f"unrecognised line {raw!r}", lineno)
    if n is None:
        if edges:
            raise ParseError("missing 'p edge' header")
        n = 0
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"# vertices: {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def format_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ------------------------------------------------------------ structure

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph.from_masks([full & ~g.masks[v] & ~(1 << v) for v in g.vertices])


def connected_components(g: Graph) -> list[frozenset]:
    """Components ordered by smallest member."""
    seen = 0
    comps = []
    masks = g.masks
    for s in g.vertices:
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= masks[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(set_of(comp))
    return comps


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``(h, mapping)`` where ``mapping[i]`` is the id in ``g`` of vertex i of ``h``."""
    keep = tuple(sorted(set(s)))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u in keep for v in g.neighbors(u) if u < v and v in index]
    return Graph(len(keep), edges), keep


def degeneracy_ordering(g: Graph) -> tuple[list[int], int]:
    """Repeatedly remove a minimum-degree vertex (lowest id on ties)."""
    deg = [g.degree(v) for v in g.vertices]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order = []
    d_max = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        d_max = max(d_max, d)
        for u in g.neighbors(v):
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return order, d_max


# ------------------------------------------------------------- matchings

def greedy_maximal_matching(g: Graph) -> list[tuple[int, int]]:
    used = 0
    pairs = []
    for u, v in g.edges:
        if not (used >> u & 1 or used >> v & 1):
            pairs.append((u, v))
            used |= (1 << u) | (1 << v)
    return pairs


@dataclass
class BipartiteMatching:
    """Maximum matching between ``left`` and ``right`` with alternating-path access."""

    graph: Graph
    left: frozenset
    right: frozenset
    mate: dict = field(default_factory=dict)

    @property
    def pairs(self) -> list[tuple[int, int]]:
        return sorted((u, self.mate[u]) for u in self.left if u in self.mate)

    def __len__(self) -> int:
        return sum(1 for u in self.left if u in self.mate)

    def unmatched(self, side: frozenset) -> list[int]:
        return sorted(v for v in side if v not in self.mate)

    def alternating_reach(self, start_side: str = "right") -> tuple[frozenset, frozenset]:
        """Vertices reachable from unmatched ``start_side`` vertices by alternating paths.

        Steps leave the start side along non-matching edges and come back along
        matching edges.  Returns ``(reached_start_side, reached_other_side)``.
        """
        start, other = (self.right, self.left) if start_side == "right" else (self.left, self.right)
        reached_start = set(self.unmatched(start))
        reached_other: set[int] = set()
        queue = deque(sorted(reached_start))
        while queue:
            v = queue.popleft()
            for w in sorted(self.graph.neighbors(v)):
                if w not in other or w in reached_other or self.mate.get(v) == w:
                    continue
                reached_other.add(w)
                partner = self.mate.get(w)
                if partner is not None and partner not in reached_start:
                    reached_start.add(partner)
                    queue.append(partner)
        return frozenset(reached_start), frozenset(reached_other)


def max_bipartite_matching(g: Graph, left: Iterable[int], right: Iterable[int]) -> BipartiteMatching:
    """Maximum matching using only edges between ``left`` and ``right`` (augmenting paths)."""
    left = frozenset(left)
    right = frozenset(right)
    if left & right:
        raise GraphError("left and right sides overlap")
    nbrs = {u: sorted(w for w in g.neighbors(u) if w in right) for u in left}
    mate: dict[int, int] = {}
    for root in sorted(left):
        # BFS over left vertices for a shortest augmenting path from root
        parent: dict[int, int] = {}  # right vertex -> left vertex it was reached from
        queue = deque([root])
        seen_left = {root}
        end = None
        while queue and end is None:
            u = queue.popleft()
            for w in nbrs[u]:
                if w in parent:
                    continue
                parent[w] = u
                nxt = mate.get(w)
                if nxt is None:
                    end = w
                    break
                if nxt not in seen_left:
                    seen_left.add(nxt)
                    queue.append(nxt)
        while end is not None:
            u = parent[end]
            prev = mate.get(u)
            mate[u] = end
            mate[end] = u
            end = prev
    return BipartiteMatching(g, left, right, mate)


# ------------------------------------------------------------ predicates

def is_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    return all(m >> u & 1 or m >> v & 1 for u, v in g.edges)


def is_independent_set(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    return all(not g.masks[v] & m for v in iter_bits(m))


def is_minimal_vertex_cover(g: Graph, s: Iterable[int]) -> bool:
    """Cover test plus the private-edge witness: each member has a neighbour outside."""
    m = mask_of(s)
    if not is_vertex_cover(g, iter_bits(m)):
        return False
    return all(g.masks[v] & ~m for v in iter_bits(m))


def is_maximal_independent_set(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    if not is_independent_set(g, iter_bits(m)):
        return False
    return all(g.masks[v] & m for v in g.vertices if not m >> v & 1)


def degree2_components(masks: Sequence[int], r: int) -> list[tuple[list[int], bool]]:
    """Split ``G[r]`` (maximum degree at most 2) into ``(vertex order, is_cycle)`` pieces.

    Paths are walked from their lower-id endpoint, cycles from their lowest id
    toward its lower-id neighbour.  Isolated vertices come out as 1-vertex paths.
    """
    out = []
    left = r
    # paths first so that every cycle start is a cycle vertex
    for start in iter_bits(r):
        if not left >> start & 1 or (masks[start] & r).bit_count() == 2:
            continue
        order = [start]
        left &= ~(1 << start)
        cur = start
        while True:
            nxt = masks[cur] & left
            if not nxt:
                break
            cur = (nxt & -nxt).bit_length() - 1
            order.append(cur)
            left &= ~(1 << cur)
        out.append((order, False))
    for start in iter_bits(left):
        if not left >> start & 1:
            continue
        order = [start]
        left &= ~(1 << start)
        cur = start
        while True:
            nxt = masks[cur] & left
            if not nxt:
                break
            cur = (nxt & -nxt).bit_length() - 1
            order.append(cur)
            left &= ~(1 << cur)
        out.append((order, True))
    out.sort(key=lambda item: min(item[0]))
    return out
