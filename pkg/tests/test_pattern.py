from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.algorithms import isomorphism as nxiso

from planturan.errors import BudgetExceeded
from planturan.family import q_triangulation, tc3_lower, two_ck_lower
from planturan.graph import Graph, complete, complete_bipartite, cycle, empty, join, union
from planturan.pattern import (
    PatternSyntaxError,
    contains,
    contains_k2t,
    find_embedding_generic,
    is_embedding,
    is_free,
    parse,
    prism,
)

from conftest import graphs, to_nx

OCTAHEDRON = join(empty(2), cycle(4))
SUITE = ["C3", "C4", "C5", "2C3", "2C4", "C3^+", "C4^+", "K4", "K2,3", "K2,4", "K3,2", "prism",
         "C3 U C3^+", "K1,3", "C3 U K2", "g6:Bw", "3C3"]


def _naive_contains(host: Graph, pat: Graph) -> bool:
    """Try every injective map (independent of the engine)."""
    if pat.n > host.n:
        return False
    edges = pat.edges()
    for image in itertools.permutations(range(host.n), pat.n):
        if all(host.has_edge(image[a], image[b]) for a, b in edges):
            return True
    return False


def test_parse_shapes():
    p = parse("2C3")
    assert (p.target.n, p.target.m) == (6, 6)
    p = parse("C4 U C4^+")
    assert (p.target.n, p.target.m) == (9, 9)
    p = parse("K2,4")
    assert (p.target.n, p.target.m) == (6, 8)
    assert parse("prism").target == prism()
    assert parse("g6:Bw").target == complete(3)
    assert parse("C5^+").target.degree_sequence() == (3, 2, 2, 2, 2, 1)
    assert parse("2C3") is parse("2C3")


@pytest.mark.parametrize("text", ["", "2", "C", "C2", "0C3", "X", "C3 U", "C3U C3", "K2,", "g6:!!", "C3^"])
def test_parse_errors_have_positions(text):
    with pytest.raises(PatternSyntaxError) as exc:
        parse(text)
    assert 0 <= exc.value.position <= len(text)


def test_spec_examples():
    assert contains(OCTAHEDRON, "prism") is not None
    assert contains(q_triangulation(3, 0), "prism") is None
    hit = contains(cycle(6), "C6")
    assert hit is not None and is_embedding(cycle(6), cycle(6), hit)
    assert is_free(tc3_lower(10), "2C3")
    assert not is_free(complete(4), "C3")
    assert is_free(two_ck_lower(10, 4), "2C4")
    assert contains_k2t(OCTAHEDRON, 2)
    assert not contains_k2t(cycle(8), 2)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7, density=0.55), st.sampled_from(SUITE))
def test_agrees_with_naive_injections(g, text):
    p = parse(text)
    hit = contains(g, p)
    assert (hit is not None) == _naive_contains(g, p.target)
    if hit is not None:
        assert is_embedding(g, p.target, hit)


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=5, max_n=11, density=0.5), st.sampled_from(SUITE))
def test_agrees_with_networkx_monomorphism(g, text):
    p = parse(text)
    expect = nxiso.GraphMatcher(to_nx(g), to_nx(p.target)).subgraph_is_monomorphic()
    assert (contains(g, p) is not None) == expect


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=5, max_n=10, density=0.5), st.sampled_from(["2C3", "C4", "2C4", "C5", "K2,3", "K2,4"]))
def test_fast_paths_match_generic_engine(g, text):
    p = parse(text)
    assert (contains(g, p) is None) == (find_embedding_generic(g, p.target) is None)


@given(graphs(max_n=8), st.integers(1, 5))
def test_common_neighbour_count_matches_k2t(g, t):
    assert contains_k2t(g, t) == (contains(g, f"K2,{t}") is not None)


@settings(deadline=None)
@given(graphs(max_n=8, density=0.5), graphs(max_n=4), st.sampled_from(SUITE))
def test_monotone_under_union_and_edge_addition(g, h, text):
    if contains(g, text) is None:
        return
    assert contains(union([g, h]), text) is not None
    missing = [(a, b) for a, b in itertools.combinations(range(g.n), 2) if not g.has_edge(a, b)]
    if missing:
        assert contains(g.add_edges(missing[:1]), text) is not None


def test_disjoint_cycles_are_vertex_disjoint():
    g = union([cycle(4), cycle(4), cycle(5)])
    hit = contains(g, "2C4")
    assert hit is not None and len(set(hit.values())) == 8
    assert contains(g, "3C4") is None
    # two 4-cycles sharing a vertex are not 2C4
    bowtie = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)])
    assert contains(bowtie, "2C4") is None


def test_budget_is_an_error_not_a_negative():
    host = complete_bipartite(6, 6)
    with pytest.raises(BudgetExceeded):
        contains(host, "K4", budget=5)
