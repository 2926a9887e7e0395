from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from wellcov.graph import Graph, is_maximal_independent_set, mask_of


def brute_mis(g: Graph) -> set[frozenset]:
    """Maximal independent sets by testing every subset; independent of the oracle's search."""
    out = set()
    for bits in range(1 << g.n):
        s = [v for v in g.vertices if bits >> v & 1]
        if is_maximal_independent_set(g, s):
            out.add(frozenset(s))
    return out


def brute_minimal_covers(g: Graph) -> set[frozenset]:
    everything = frozenset(g.vertices)
    return {everything - s for s in brute_mis(g)}


def labeled_graph(n: int, code: int) -> Graph:
    """Graph number ``code`` among the 2^(n choose 2) labeled graphs on n vertices."""
    pairs = list(combinations(range(n), 2))
    return Graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    bits = draw(st.integers(0, (1 << len(pairs)) - 1)) if pairs else 0
    return Graph(n, [pairs[i] for i in range(len(pairs)) if bits >> i & 1])


def C(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def P(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def K(n):
    return Graph(n, list(combinations(range(n), 2)))


def star(t):
    return Graph(t + 1, [(0, i) for i in range(1, t + 1)])


__all__ = ["ACCEPTANCE_LINES", "brute_mis", "brute_minimal_covers", "labeled_graph", "graphs", "C", "P", "K", "star", "mask_of"]


# one line per acceptance criterion, shown after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
