"""Planarity, rotation systems, faces and triangulation predicates.

The planarity decision and Kuratowski witness come from networkx's
left-right implementation; face tracing and all census logic live here.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import networkx as nx

from .graph import Graph, bits


@dataclass(frozen=True)
class PlaneEmbedding:
    """Rotation system: ``rotation[v]`` lists the neighbors of ``v`` in cyclic order."""

    n: int
    rotation: tuple[tuple[int, ...], ...]

    def face_walks(self) -> list[tuple[int, ...]]:
        """Closed walks bounding the faces; each directed edge is used once.

        A walk ``(a, b, c, ...)`` traverses darts ``a->b, b->c, ...`` and back
        to ``a``.  Isolated vertices contribute no walk.
        """
        succ = {}
        for v, rot in enumerate(self.rotation):
            k = len(rot)
            for i, u in enumerate(rot):
                succ[(v, u)] = rot[(i + 1) % k]
        seen = set()
        walks = []
        for v, rot in enumerate(self.rotation):
            for u in rot:
                if (u, v) in seen:
                    continue
                walk = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    walk.append(a)
                    a, b = b, succ[(b, a)]
                walks.append(tuple(walk))
        return walks

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, {(min(v, u), max(v, u)) for v, rot in enumerate(self.rotation) for u in rot})


@dataclass(frozen=True)
class FaceCensus:
    counts: dict[int, int]
    total: int

    def f(self, i: int) -> int:
        return self.counts.get(i, 0)


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: PlaneEmbedding | None = None
    kuratowski: Graph | None = None
    kuratowski_kind: str | None = None

    def __bool__(self) -> bool:
        return self.planar


def _to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges())
    return G


def _surely_planar(g: Graph) -> bool | None:
    n, m = g.n, g.m
    if n <= 4 or m <= 8:
        return True
    if m > 3 * n - 6:
        return False
    degs = g.degrees()
    # a Kuratowski subdivision needs five vertices of degree >= 4 or six of degree >= 3
    if sum(d >= 4 for d in degs) < 5 and sum(d >= 3 for d in degs) < 6:
        return True
    return None


def is_planar(g: Graph) -> bool:
    """Planarity decision only (cheap prefilters, then the full test)."""
    quick = _surely_planar(g)
    if quick is not None:
        return quick
    planar, _ = nx.check_planarity(_to_nx(g))
    return planar


def planarity(g: Graph) -> PlanarityResult:
    """Planarity with witness: an embedding, or a K5/K3,3 subdivision."""
    G = _to_nx(g)
    planar, cert = nx.check_planarity(G, counterexample=True)
    if planar:
        rotation = tuple(tuple(cert.neighbors_cw_order(v)) if cert.degree(v) else () for v in range(g.n))
        return PlanarityResult(True, embedding=PlaneEmbedding(g.n, rotation))
    sub = Graph.from_edges(g.n, [(min(u, v), max(u, v)) for u, v in cert.edges()])
    return PlanarityResult(False, kuratowski=sub, kuratowski_kind=kuratowski_kind(sub))


def kuratowski_kind(sub: Graph) -> str:
    """Classify a Kuratowski subdivision by its branch vertices."""
    branch = [d for d in sub.degrees() if d >= 3]
    if len(branch) == 5 and all(d == 4 for d in branch):
        return "K5"
    if len(branch) == 6 and all(d == 3 for d in branch):
        return "K3,3"
    raise ValueError("not a Kuratowski subdivision")


def is_kuratowski_subdivision(sub: Graph) -> bool:
    """Check that ``sub`` (ignoring isolated vertices) subdivides K5 or K3,3."""
    core = sub.induced([v for v in range(sub.n) if sub.degree(v)])
    degs = core.degrees()
    if any(d not in (2, 3, 4) for d in degs) or not core.is_connected():
        return False
    branch = [v for v in range(core.n) if degs[v] >= 3]
    # contract the degree-2 threads between branch vertices
    contracted = set()
    for b in branch:
        for first in core.neighbors(b):
            prev, cur = b, first
            while degs[cur] == 2:
                nxt = [u for u in core.neighbors(cur) if u != prev]
                prev, cur = cur, nxt[0]
            if cur == b:
                return False
            contracted.add((min(b, cur), max(b, cur)))
    index = {v: i for i, v in enumerate(branch)}
    edge_count = sum(degs[v] for v in branch) // 2
    if len(contracted) != edge_count:
        return False
    h = Graph.from_edges(len(branch), [(index[a], index[b]) for a, b in contracted])
    if len(branch) == 5:
        return h.m == 10
    if len(branch) == 6 and all(d == 3 for d in h.degrees()):
        # K3,3 is the only bipartite cubic graph on six vertices
        return _bipartite(h)
    return False


def _bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in bits(g.adj[v]):
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


def embed(g: Graph) -> PlaneEmbedding:
    """A plane embedding of a connected planar graph."""
    if not g.is_connected():
        raise ValueError("embed requires a connected graph")
    res = planarity(g)
    if not res.planar:
        raise ValueError(f"graph is not planar ({res.kuratowski_kind} subdivision found)")
    return res.embedding


def face_census(emb: PlaneEmbedding) -> FaceCensus:
    """Count faces by order; a bridge contributes twice to its face."""
    walks = emb.face_walks()
    if not walks:
        # a single vertex (or empty graph) has one face of order 0
        counts = Counter({0: 1}) if emb.n else Counter()
        return FaceCensus(dict(counts), sum(counts.values()))
    counts = Counter(len(w) for w in walks)
    return FaceCensus(dict(counts), len(walks))


def is_valid_embedding(emb: PlaneEmbedding, g: Graph) -> bool:
    """Rotation matches ``g``, every dart lies on one walk, and Euler holds per component."""
    for v in range(g.n):
        rot = emb.rotation[v]
        if len(set(rot)) != len(rot) or set(rot) != set(g.neighbors(v)):
            return False
    walks = emb.face_walks()
    darts = Counter()
    for w in walks:
        for i, a in enumerate(w):
            darts[(a, w[(i + 1) % len(w)])] += 1
    if any(c != 1 for c in darts.values()) or len(darts) != 2 * g.m:
        return False
    comp_of = {}
    for i, comp in enumerate(g.components()):
        for v in comp:
            comp_of[v] = i
    faces_per = Counter(comp_of[w[0]] for w in walks)
    for i, comp in enumerate(g.components()):
        if len(comp) == 1:
            continue
        e = sum(g.degree(v) for v in comp) // 2
        if len(comp) - e + faces_per[i] != 2:
            return False
    return True


def is_triangulation(g: Graph) -> bool:
    """Maximal planar on n >= 3 vertices: connected, planar, 3n - 6 edges."""
    return g.n >= 3 and g.m == 3 * g.n - 6 and g.is_connected() and is_planar(g)


def is_outerplanar(g: Graph) -> bool:
    """Planar with every vertex on one face (apex test)."""
    return is_planar(g.add_vertex(range(g.n)))
