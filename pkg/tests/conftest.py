from __future__ import annotations

import itertools

import networkx as nx
from hypothesis import settings
from hypothesis import strategies as st

from planturan.graph import Graph

# Exact combinatorial checks vary widely in cost per example; no deadline.
settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 9, density: float | None = None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    if density is None:
        chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    else:
        rnd = draw(st.randoms(use_true_random=False))
        chosen = [rnd.random() < density for _ in pairs]
    return Graph.from_edges(n, [p for p, c in zip(pairs, chosen) if c])


@st.composite
def permutations_of(draw, n: int):
    return draw(st.permutations(list(range(n))))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[num][1])
