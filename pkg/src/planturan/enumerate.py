"""Isomorph-free generation of small graphs and of plane triangulations.

General graphs grow one vertex at a time by canonical augmentation: a
child is kept only when its new vertex lies in the automorphism orbit of
the child's canonical deletion vertex (a minimum-degree vertex chosen by an
invariant, ties broken by the canonical labeling), and sibling extensions
are reduced to one per orbit of the parent's automorphism group.  Every
constraint that survives taking induced subgraphs prunes the tree early.

Triangulations grow from K_4 by the three expansions that insert a vertex
of degree 3, 4 or 5 into a rotation system; a child is kept when its new
vertex is a minimum-degree reducible vertex with the largest invariant, and
survivors are deduplicated by canonical key.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import networkx as nx
from networkx.algorithms import isomorphism as nxiso

from .canon import canonical
from .errors import BudgetExceeded
from .graph import Graph, bits
from .pattern import as_pattern, contains
from .planar import is_planar

MAX_GRAPH_N = 10
MAX_TRIANGULATION_N = 12
MAX_ORACLE_N = 8


@dataclass(frozen=True)
class EnumerationConstraints:
    n: int
    min_degree: int = 0
    max_degree: int | None = None
    regular: int | None = None
    min_edges: int = 0
    max_edges: int | None = None
    planar: bool = False
    connected: bool = False
    forbidden: tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        lo, hi = self.degree_bounds()
        if hi is not None and lo > hi:
            raise ValueError(f"inconsistent degree bounds: min {lo} > max {hi}")
        if self.max_edges is not None and self.min_edges > self.max_edges:
            raise ValueError(f"inconsistent edge bounds: min {self.min_edges} > max {self.max_edges}")
        if self.regular is not None and self.regular < 0:
            raise ValueError("regular degree must be non-negative")

    def degree_bounds(self) -> tuple[int, int | None]:
        lo, hi = self.min_degree, self.max_degree
        if self.regular is not None:
            lo = max(lo, self.regular)
            hi = self.regular if hi is None else min(hi, self.regular)
        return lo, hi

    def edge_cap(self) -> int:
        n = self.n
        cap = n * (n - 1) // 2
        if self.planar and n >= 3:
            cap = min(cap, 3 * n - 6)
        _, hi = self.degree_bounds()
        if hi is not None:
            cap = min(cap, n * hi // 2)
        if self.max_edges is not None:
            cap = min(cap, self.max_edges)
        return cap

    def accepts(self, g: Graph) -> bool:
        """Full (final-level) membership test."""
        if g.n != self.n:
            return False
        lo, hi = self.degree_bounds()
        degs = g.degrees()
        if degs and (min(degs) < lo or (hi is not None and max(degs) > hi)):
            return False
        if g.m < self.min_edges or (self.max_edges is not None and g.m > self.max_edges):
            return False
        if self.connected and not g.is_connected():
            return False
        if self.planar and not is_planar(g):
            return False
        return all(contains(g, p) is None for p in self.forbidden)


# -- general graphs -----------------------------------------------------


def _vertex_invariant(adj, degs, v):
    return (-degs[v], tuple(sorted(degs[u] for u in bits(adj[v]))))


def _same_orbit(g: Graph, a: int, b: int) -> bool:
    """Exact orbit test: individualizing a or b gives the same canonical form."""
    ca = [1 if v == a else 0 for v in range(g.n)]
    cb = [1 if v == b else 0 for v in range(g.n)]
    return canonical(g, ca).canon == canonical(g, cb).canon


def _subset_orbit_reps(k: int, gens: Sequence[Sequence[int]]) -> list[int]:
    """One subset of {0..k-1} per orbit of the group generated by ``gens``."""
    total = 1 << k
    if not gens:
        return list(range(total))
    parent = list(range(total))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for s in range(total):
            img = 0
            for v in bits(s):
                img |= 1 << g[v]
            a, b = find(s), find(img)
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [s for s in range(total) if find(s) == s]


class _GraphGenerator:
    def __init__(self, c: EnumerationConstraints, budget: int):
        self.c = c
        self.n = c.n
        self.lo, self.hi = c.degree_bounds()
        self.cap = c.edge_cap()
        self.patterns = [as_pattern(p) for p in c.forbidden]
        self.budget = budget
        self.nodes = 0

    def _spend(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded("enumeration budget exceeded", used=self.nodes, limit=self.budget)

    def _max_future_edges(self, k: int, m: int) -> int:
        """Upper bound on the final edge count from a k-vertex partial graph."""
        total = m
        for j in range(k, self.n):
            step = j
            if self.hi is not None:
                step = min(step, self.hi)
            if self.c.planar:
                step = min(step, 5)
            total += step
        return min(total, self.cap)

    def children(self, parent: Graph, gens) -> Iterator[Graph]:
        k = parent.n
        n = self.n
        remaining = n - k - 1
        pdeg = parent.degrees()
        pmin = min(pdeg) if pdeg else None
        lo_here = self.lo - remaining
        for s in _subset_orbit_reps(k, gens):
            d = s.bit_count()
            self._spend()
            if self.hi is not None and d > self.hi:
                continue
            if d < lo_here:
                continue
            # the new vertex must have minimum degree in the child
            if pmin is not None:
                if any(pdeg[v] + 1 < d for v in bits(s)):
                    continue
                rest = ((1 << k) - 1) & ~s
                if rest and min(pdeg[v] for v in bits(rest)) < d:
                    continue
            if self.hi is not None and any(pdeg[v] + 1 > self.hi for v in bits(s)):
                continue
            if lo_here > 0 and any(pdeg[v] + (1 if s >> v & 1 else 0) < lo_here for v in range(k)):
                continue
            m = parent.m + d
            if m > self.cap:
                continue
            if self._max_future_edges(k + 1, m) < self.c.min_edges:
                continue
            adj = [row | ((s >> v & 1) << k) for v, row in enumerate(parent.adj)]
            adj.append(s)
            child = Graph._trusted(k + 1, tuple(adj))
            cf = self._accept(child)
            if cf is None:
                continue
            if self.c.planar and not is_planar(child):
                continue
            if any(contains(child, p) is not None for p in self.patterns):
                continue
            yield child, cf

    def _accept(self, child: Graph):
        """Canonical form if the new vertex is the canonical deletion vertex (up to orbit)."""
        k = child.n
        new = k - 1
        degs = child.degrees()
        adj = child.adj
        inv = [_vertex_invariant(adj, degs, v) for v in range(k)]
        best = max(inv)
        if inv[new] != best:
            return None
        cf = canonical(child)
        ties = [v for v in range(k) if inv[v] == best]
        star = max(ties, key=lambda v: cf.perm[v])
        if cf.orbits[star] != cf.orbits[new] and not _same_orbit(child, star, new):
            return None
        return cf

    def run(self) -> list[Graph]:
        n = self.n
        if n == 0:
            g = Graph(0)
            return [g] if self.c.accepts(g) else []
        level = [(Graph(1), ())]
        for _ in range(1, n):
            nxt = {}
            for parent, gens in level:
                for child, cf in self.children(parent, gens):
                    nxt.setdefault(cf.canon, (child, cf.generators))
            level = [nxt[key] for key in sorted(nxt)]
        out = {}
        for g, _ in level:
            if self.c.accepts(g):
                cf = canonical(g)
                out[cf.canon] = cf.graph()
        return [out[k] for k in sorted(out)]


def enumerate_graphs(c: EnumerationConstraints, budget: int = 200_000_000) -> list[Graph]:
    """One canonically labeled representative per isomorphism class, sorted by canonical key."""
    if c.n > MAX_GRAPH_N:
        raise BudgetExceeded(f"general graph enumeration supports n <= {MAX_GRAPH_N}, got {c.n}", limit=MAX_GRAPH_N)
    return _GraphGenerator(c, budget).run()


# -- plane triangulations -------------------------------------------------


Rotation = tuple[tuple[int, ...], ...]


def _adj_from_rot(rot: Rotation) -> tuple[int, ...]:
    out = []
    for nbrs in rot:
        row = 0
        for u in nbrs:
            row |= 1 << u
        out.append(row)
    return tuple(out)


def _insert_after(lst: list[int], x: int, w: int):
    lst.insert(lst.index(x) + 1, w)


def _replace(lst: list[int], x: int, w: int):
    lst[lst.index(x)] = w


def _next(lst, x):
    return lst[(lst.index(x) + 1) % len(lst)]


def _prev(lst, x):
    return lst[lst.index(x) - 1]


def _expansions(rot: Rotation) -> Iterator[list[list[int]]]:
    """All E3 (face), E4 (edge) and E5 (vertex wedge) expansions of a rotation system."""
    n = len(rot)
    w = n
    # E3: stack a vertex into each face (a, b, c), counted once via a = min
    for a in range(n):
        ra = rot[a]
        for i, b in enumerate(ra):
            c = ra[(i + 1) % len(ra)]
            if a < b and a < c:
                new = [list(x) for x in rot]
                _insert_after(new[a], b, w)
                _insert_after(new[b], c, w)
                _insert_after(new[c], a, w)
                new.append([a, b, c])
                yield new
    # E4: subdivide each edge ab into a new vertex joined to both opposite vertices
    for a in range(n):
        for b in rot[a]:
            if a > b:
                continue
            c = _next(rot[a], b)
            d = _prev(rot[a], b)
            new = [list(x) for x in rot]
            _replace(new[a], b, w)
            _replace(new[b], a, w)
            _insert_after(new[c], a, w)
            _insert_after(new[d], b, w)
            new.append([a, d, b, c])
            yield new
    # E5: at vertex a with consecutive neighbors b, c, d, e, drop ac and ad
    for a in range(n):
        ra = rot[a]
        k = len(ra)
        if k < 4:
            continue
        for i in range(k):
            b, c, d, e = (ra[(i + j) % k] for j in range(4))
            new = [list(x) for x in rot]
            na = new[a]
            na.remove(c)
            na.remove(d)
            _insert_after(na, b, w)
            _replace(new[c], a, w)
            _replace(new[d], a, w)
            _insert_after(new[b], c, w)
            _insert_after(new[e], a, w)
            new.append([a, b, c, d, e])
            yield new


def _reducible(rot, adj, v) -> bool:
    link = rot[v]
    k = len(link)
    if k == 3:
        return True
    if k == 4:
        a, b, c, d = link
        return not (adj[a] >> c & 1 and adj[b] >> d & 1)
    if k == 5:
        for i in range(5):
            x = link[i]
            if not adj[x] >> link[(i + 2) % 5] & 1 and not adj[x] >> link[(i + 3) % 5] & 1:
                return True
    return False


def _keep_child(rot, adj) -> bool:
    """New vertex is a minimum-degree reducible vertex with the largest invariant."""
    n = len(rot)
    new = n - 1
    degs = [len(r) for r in rot]
    dn = degs[new]
    if any(d < dn for d in degs):
        # a smaller-degree vertex is always reducible when its degree is 3 or 4
        if any(d < dn and (d <= 4 or _reducible(rot, adj, v)) for v, d in enumerate(degs)):
            return False
    mine = _vertex_invariant(adj, degs, new)
    for v in range(n - 1):
        if degs[v] == dn and _vertex_invariant(adj, degs, v) > mine and _reducible(rot, adj, v):
            return False
    return True


def _expand_batch(parents: list[Rotation]) -> dict:
    found = {}
    for rot in parents:
        for new in _expansions(rot):
            r = tuple(tuple(x) for x in new)
            adj = _adj_from_rot(r)
            if not _keep_child(r, adj):
                continue
            key = canonical(Graph._trusted(len(r), adj)).canon
            if key not in found:
                found[key] = r
    return found


K4_ROTATION: Rotation = ((1, 2, 3), (0, 3, 2), (0, 1, 3), (0, 2, 1))


def _chunks(seq, k):
    size = max(1, -(-len(seq) // k))
    return [seq[i:i + size] for i in range(0, len(seq), size)]


@lru_cache(maxsize=None)
def _triangulation_levels(n: int, jobs: int = 1) -> tuple[tuple[tuple, Rotation], ...]:
    if n == 4:
        g = Graph._trusted(4, _adj_from_rot(K4_ROTATION))
        return ((canonical(g).canon, K4_ROTATION),)
    parents = [r for _, r in _triangulation_levels(n - 1, jobs)]
    if jobs > 1 and len(parents) > 8:
        found = {}
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_expand_batch, _chunks(parents, jobs * 4)):
                for key, r in part.items():
                    found.setdefault(key, r)
    else:
        found = _expand_batch(parents)
    return tuple(sorted(found.items(), key=lambda kv: kv[0]))


def enumerate_triangulations(n: int, jobs: int = 1, with_rotation: bool = False):
    """One representative per isomorphism class of triangulations on n vertices.

    Representatives are canonically labeled and sorted by canonical key, so
    the output is identical for every ``jobs`` value.
    """
    if n < 3:
        raise ValueError(f"triangulations need n >= 3, got {n}")
    if n > MAX_TRIANGULATION_N:
        raise BudgetExceeded(
            f"triangulation enumeration supports n <= {MAX_TRIANGULATION_N}, got {n}", limit=MAX_TRIANGULATION_N
        )
    if n == 3:
        g = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        rot = ((1, 2), (2, 0), (0, 1))
        return [(g, rot)] if with_rotation else [g]
    out = []
    for key, rot in _triangulation_levels(n, max(1, jobs)):
        g = Graph._trusted(n, key[-1])
        if with_rotation:
            perm = canonical(Graph._trusted(n, _adj_from_rot(rot))).perm
            relabeled = [None] * n
            for v, nbrs in enumerate(rot):
                relabeled[perm[v]] = tuple(perm[u] for u in nbrs)
            out.append((g, tuple(relabeled)))
        else:
            out.append(g)
    return out


# -- independent oracle -------------------------------------------------


def _nx_graph(n, edges) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(edges)
    return G


@lru_cache(maxsize=None)
def _all_classes_nx(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Every graph on n vertices up to isomorphism, built by single-edge
    additions and deduplicated with networkx isomorphism tests."""
    pairs = list(itertools.combinations(range(n), 2))
    level = [()]
    out = [()]
    for _ in range(len(pairs)):
        buckets: dict[tuple, list[nx.Graph]] = {}
        nxt = []
        for edges in level:
            present = set(edges)
            for p in pairs:
                if p in present:
                    continue
                cand = tuple(sorted(present | {p}))
                G = _nx_graph(n, cand)
                key = (tuple(sorted(d for _, d in G.degree())), nx.weisfeiler_lehman_graph_hash(G, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(G, H) for H in bucket):
                    continue
                bucket.append(G)
                nxt.append(cand)
        level = nxt
        out.extend(nxt)
        if not level:
            break
    return tuple(out)


def filter_oracle(c: EnumerationConstraints) -> list[Graph]:
    """Slow independent enumeration: all classes via networkx, then filtering.

    Planarity and pattern tests here also go through networkx, so the
    result shares no search code with :func:`enumerate_graphs`.
    """
    if c.n > MAX_ORACLE_N:
        raise BudgetExceeded(f"filter oracle supports n <= {MAX_ORACLE_N}, got {c.n}", limit=MAX_ORACLE_N)
    lo, hi = c.degree_bounds()
    targets = [_nx_graph(as_pattern(p).target.n, as_pattern(p).target.edges()) for p in c.forbidden]
    out = []
    for edges in _all_classes_nx(c.n):
        G = _nx_graph(c.n, edges)
        degs = [d for _, d in G.degree()]
        if degs and (min(degs) < lo or (hi is not None and max(degs) > hi)):
            continue
        m = len(edges)
        if m < c.min_edges or (c.max_edges is not None and m > c.max_edges):
            continue
        if c.connected and c.n > 0 and not nx.is_connected(G):
            continue
        if c.planar and not nx.check_planarity(G)[0]:
            continue
        if any(nxiso.GraphMatcher(G, T).subgraph_is_monomorphic() for T in targets):
            continue
        out.append(Graph.from_edges(c.n, edges))
    return out
