from __future__ import annotations

import networkx as nx
from hypothesis import given, settings

from planturan.enumerate import EnumerationConstraints, enumerate_graphs
from planturan.family import hex_family, q_triangulation, tc3_lower
from planturan.graph import complete, complete_bipartite, cycle, empty, join, path
from planturan.planar import (
    embed,
    face_census,
    is_kuratowski_subdivision,
    is_outerplanar,
    is_planar,
    is_triangulation,
    is_valid_embedding,
    planarity,
)

from conftest import graphs, to_nx

OCTAHEDRON = join(empty(2), cycle(4))


def test_k5_and_k33_rejected_with_witness():
    for g, kind in ((complete(5), "K5"), (complete_bipartite(3, 3), "K3,3")):
        res = planarity(g)
        assert not res.planar
        assert res.kuratowski_kind == kind
        assert is_kuratowski_subdivision(res.kuratowski)


def test_known_planar_graphs():
    assert is_planar(OCTAHEDRON)
    assert is_planar(q_triangulation(3, 0))
    assert is_triangulation(join(complete(2), path(4)))
    assert not is_triangulation(cycle(6))
    assert is_triangulation(hex_family(4, 0))


def test_face_counts_of_small_embeddings():
    assert face_census(embed(cycle(5))).counts == {5: 2}
    assert face_census(embed(OCTAHEDRON)).counts == {3: 8}
    assert face_census(embed(join(complete(2), path(5)))).counts == {3: 10}
    assert face_census(embed(cycle(4))).f(4) == 2
    assert face_census(embed(join(complete(2), path(4)))).f(3) == 8


def test_bridge_counts_twice():
    census = face_census(embed(path(3)))
    assert census.counts == {4: 1}


def test_two_disjoint_triangles_free_graph_has_few_triangular_faces():
    # the face-count step used for the 2C3 upper bound, checked on one embedding each
    assert face_census(embed(tc3_lower(8))).f(3) <= 7
    for n in (8, 9):
        graphs_ = enumerate_graphs(EnumerationConstraints(n=n, planar=True, connected=True, forbidden=("2C3",)))
        assert graphs_
        for g in graphs_:
            assert face_census(embed(g)).f(3) <= n - 1


@settings(max_examples=200)
@given(graphs(max_n=10, density=0.45))
def test_planarity_matches_networkx_and_witnesses_check(g):
    res = planarity(g)
    assert res.planar == nx.check_planarity(to_nx(g))[0]
    assert is_planar(g) == res.planar
    if res.planar:
        assert is_valid_embedding(res.embedding, g)
    else:
        assert is_kuratowski_subdivision(res.kuratowski)
        assert all(g.has_edge(u, v) for u, v in res.kuratowski.edges())


@settings(max_examples=150)
@given(graphs(min_n=3, max_n=10, density=0.4))
def test_euler_and_double_counting(g):
    if not g.is_connected() or not is_planar(g):
        return
    census = face_census(embed(g))
    assert g.n - g.m + census.total == 2
    assert sum(i * c for i, c in census.counts.items()) == 2 * g.m


@given(graphs(min_n=3, max_n=10, density=0.7))
def test_euler_prefilter_never_contradicted(g):
    if g.m > 3 * g.n - 6:
        assert not is_planar(g)


def test_outerplanar():
    assert is_outerplanar(cycle(6))
    assert not is_outerplanar(complete(4))
    assert not is_outerplanar(complete_bipartite(2, 3))
