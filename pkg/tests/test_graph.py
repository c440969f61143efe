from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from planturan.graph import Graph, complete, complete_bipartite, copies, cycle, empty, join, path, pendant_cycle, union

from conftest import graphs, to_nx


def test_primitives_sizes():
    assert (path(5).n, path(5).m) == (5, 4)
    assert (cycle(6).n, cycle(6).m) == (6, 6)
    assert complete(5).m == 10
    assert complete_bipartite(2, 3).m == 6
    assert empty(4).m == 0
    assert pendant_cycle(3).degree_sequence() == (3, 2, 2, 1)


def test_algebra():
    assert union([cycle(3), cycle(3)]).m == 6
    assert copies(3, cycle(4)).n == 12
    wheel = join(empty(1), cycle(5))
    assert (wheel.n, wheel.m) == (6, 10)
    assert join(empty(2), empty(3)).m == 6


def test_constructor_rejects_bad_input():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0b00])  # asymmetric
    with pytest.raises(ValueError):
        Graph(1, [0b1])  # loop
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        cycle(2)


def test_edge_editing():
    g = path(4)
    with pytest.raises(ValueError):
        g.add_edges([(0, 1)])
    h = g.add_edges([(0, 3)])
    assert h == cycle(4)
    assert h.remove_edges([(0, 3)]) == g
    k = cycle(5).remove_vertices([0])
    assert k == path(4)


@given(graphs())
def test_degrees_and_components_match_networkx(g):
    G = to_nx(g)
    assert g.degrees() == [d for _, d in sorted(G.degree())]
    assert sorted(map(sorted, g.components())) == sorted(sorted(c) for c in nx.connected_components(G))
    assert g.m == G.number_of_edges()


@given(graphs(max_n=8))
def test_relabel_preserves_degree_sequence(g):
    perm = list(reversed(range(g.n)))
    h = g.relabel(perm)
    assert h.degree_sequence() == g.degree_sequence()
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())
