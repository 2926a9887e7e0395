import pytest
from hypothesis import given, settings

from conftest import C, K, P, brute_minimal_covers, graphs
from wellcov.errors import BudgetExceeded, ContractError
from wellcov.generators import GenSpec, figure1, generate
from wellcov.graph import Graph
from wellcov.mvc_enum import (
    MAX_COVER_BITS,
    classify_partition,
    enumerate_minimal_vertex_covers,
    iter_partition_candidates,
    minimum_vertex_cover,
    scan_partitions,
    well_covered_via_mvc_enum,
)
from wellcov.oracle import graph_stats_oracle

# Figure-1 naming: c1..c5 -> 0..4, n1..n5 -> 5..9
c = {i: i - 1 for i in range(1, 6)}
nn = {i: i + 4 for i in range(1, 6)}


def test_figure1_minimum_cover():
    g = figure1()
    assert len(minimum_vertex_cover(g)) == graph_stats_oracle(g).vc == 5
    # the c-vertices form one of the minimum covers
    assert all(u < 5 or v < 5 for u, v in g.edges)


def test_figure1_partition_verdicts():
    g = figure1()
    first = classify_partition(g, [c[1], c[2], c[3], c[4]], [c[5]])
    assert first.candidate == {c[1], c[2], c[3], c[4], nn[4], nn[5]}
    assert first.verdict == "cover-not-minimal"

    second = classify_partition(g, [c[3], c[4], c[5]], [c[1], c[2]])
    assert second.verdict == "not-a-cover"

    third = classify_partition(g, [c[2], c[3], c[4], c[5]], [c[1]])
    assert third.candidate == {c[2], c[3], c[4], c[5], nn[1], nn[2]}
    assert third.verdict == "minimal-cover"


def test_candidates_binary_counter_order():
    cands = list(iter_partition_candidates(P(3), {1}))
    assert [x.b for x in cands] == [frozenset(), frozenset({1})]
    assert [x.candidate for x in cands] == [frozenset({1}), frozenset({0, 2})]


@pytest.mark.parametrize("g,count", [(C(4), 2), (C(7), 7), (K(4), 4), (P(4), 3), (Graph(3), 1)])
def test_cover_counts(g, count):
    covers = list(enumerate_minimal_vertex_covers(g, minimum_vertex_cover(g)))
    assert len(covers) == len(set(covers)) == count


@settings(max_examples=200)
@given(graphs(max_n=10))
def test_enumeration_matches_brute_force(g):
    cmin = minimum_vertex_cover(g)
    covers = list(enumerate_minimal_vertex_covers(g, cmin))
    assert len(covers) == len(set(covers))
    assert set(covers) == brute_minimal_covers(g)


@settings(max_examples=200)
@given(graphs(max_n=11))
def test_minimum_cover_is_minimum(g):
    cmin = minimum_vertex_cover(g)
    assert len(cmin) == graph_stats_oracle(g).vc
    assert all(u in cmin or v in cmin for u, v in g.edges)


@settings(max_examples=200)
@given(graphs(max_n=11))
def test_report_matches_oracle(g):
    st = graph_stats_oracle(g)
    rep = well_covered_via_mvc_enum(g)
    rep.check_invariants()
    assert (rep.vc, rep.vc_plus, rep.alpha) == (st.vc, st.vc_plus, st.alpha)
    assert rep.well_covered == (st.vc == st.vc_plus)
    fast = well_covered_via_mvc_enum(g, decide_only=True)
    assert fast.well_covered == rep.well_covered
    if not rep.well_covered:
        assert len(rep.witness_small) == st.i_min
        assert len(rep.witness_large) == st.alpha


def test_decide_only_stops_early():
    g = generate(GenSpec("gnp", n=24, p=0.3, seed=5))
    rep = well_covered_via_mvc_enum(g, decide_only=True)
    assert not rep.well_covered and rep.vc_plus is None
    assert rep.stats["partitions"] < 2 ** rep.vc


def test_non_minimum_cover_rejected():
    with pytest.raises(ContractError):
        list(enumerate_minimal_vertex_covers(P(3), {0, 2}))
    with pytest.raises(ContractError):
        list(enumerate_minimal_vertex_covers(P(3), {0}))


def test_cover_bit_limit():
    g = Graph(2 * (MAX_COVER_BITS + 1), [(2 * i, 2 * i + 1) for i in range(MAX_COVER_BITS + 1)])
    with pytest.raises(BudgetExceeded):
        scan_partitions(g, range(0, g.n, 2))


def test_minimum_cover_budget():
    g = generate(GenSpec("gnp", n=40, p=0.5, seed=1))
    assert minimum_vertex_cover(g, budget=5) is None
