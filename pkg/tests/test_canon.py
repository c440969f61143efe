from __future__ import annotations

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st
from networkx.algorithms import isomorphism as nxiso

from planturan.canon import automorphism_orbits, canonical, canonical_graph, canonical_key, isomorphic
from planturan.graph import Graph, complete, complete_bipartite, cycle, empty, path

from conftest import graphs, to_nx


def _nx_orbits(g: Graph) -> set[frozenset[int]]:
    G = to_nx(g)
    orbit = {v: {v} for v in G}
    for m in nxiso.GraphMatcher(G, G).isomorphisms_iter():
        for v, u in m.items():
            orbit[v].add(u)
    return {frozenset(o) for o in orbit.values()}


def _orbit_partition(orbits) -> set[frozenset[int]]:
    parts: dict[int, set[int]] = {}
    for v, o in enumerate(orbits):
        parts.setdefault(o, set()).add(v)
    return {frozenset(p) for p in parts.values()}


@given(graphs(max_n=9), st.randoms(use_true_random=False))
def test_canonical_form_is_labeling_invariant(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert canonical_key(g) == canonical_key(h)
    assert canonical_graph(g) == canonical_graph(h)


@given(graphs(max_n=9))
def test_canonical_graph_is_isomorphic_copy(g):
    cf = canonical(g)
    assert cf.graph() == g.relabel(cf.perm)
    assert nx.is_isomorphic(to_nx(g), to_nx(cf.graph()))


@settings(max_examples=150)
@given(graphs(max_n=8), graphs(max_n=8))
def test_isomorphism_agrees_with_networkx(g, h):
    if g.n == h.n:
        assert isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))


@settings(max_examples=120)
@given(graphs(max_n=8))
def test_orbits_agree_with_networkx(g):
    assert _orbit_partition(automorphism_orbits(g)) == _nx_orbits(g)


@given(graphs(max_n=8))
def test_generators_are_automorphisms(g):
    edges = set(g.edges())
    for gen in canonical(g).generators:
        assert {tuple(sorted((gen[u], gen[v]))) for u, v in edges} == edges


def test_orbits_of_familiar_graphs():
    assert len(set(automorphism_orbits(cycle(7)))) == 1
    assert len(set(automorphism_orbits(path(5)))) == 3
    assert len(set(automorphism_orbits(complete_bipartite(2, 3)))) == 2
    assert len(set(automorphism_orbits(empty(4)))) == 1


def test_colors_break_symmetry():
    g = complete(4)
    cf = canonical(g, [1, 0, 0, 0])
    assert len(set(cf.orbits)) == 2
    assert cf.canon != canonical(g).canon


def test_distinguishes_cospectral_style_pair():
    # C6 and two triangles: same degree sequence, not isomorphic
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not isomorphic(cycle(6), two_triangles)
