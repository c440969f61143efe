"""Simple undirected graphs on vertices ``0..n-1`` stored as adjacency bitmasks.

Every constructor documents its labeling so that witnesses are reproducible
bit for bit.  Graphs are immutable; all operations return new graphs.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple graph on ``0..n-1``.

    ``adj[v]`` is an int whose bit ``u`` is set iff ``uv`` is an edge.
    """

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, adj: Sequence[int] | None = None):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        if adj is None:
            adj = (0,) * n
        adj = tuple(adj)
        if len(adj) != n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full or row >> v & 1:
                raise ValueError(f"invalid adjacency row for vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {u},{v}")
        self.n = n
        self.adj = adj
        self._m = sum(row.bit_count() for row in adj) // 2

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        g._m = sum(row.bit_count() for row in adj) // 2
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    # -- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        """Number of edges."""
        return self._m

    def num_edges(self) -> int:
        return self._m

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v, row in enumerate(self.adj):
            for u in bits(row >> (v + 1)):
                out.append((v, v + 1 + u))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted in non-increasing order."""
        return tuple(sorted(self.degrees(), reverse=True))

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def common_neighbors(self, u: int, v: int) -> list[int]:
        return list(bits(self.adj[u] & self.adj[v]))

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            reach = frontier = 1 << s
            while frontier:
                nxt = 0
                for v in bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~reach
                reach |= frontier
            seen |= reach
            comps.append(list(bits(reach)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    # -- derived graphs ------------------------------------------------

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabeling must be a permutation of 0..n-1")
        adj = [0] * self.n
        for v, row in enumerate(self.adj):
            image = 0
            for u in bits(row):
                image |= 1 << perm[u]
            adj[perm[v]] = image
        return Graph._trusted(self.n, tuple(adj))

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; ``vertices[i]`` becomes vertex ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    row |= 1 << i
            adj.append(row)
        return Graph._trusted(len(vertices), tuple(adj))

    def remove_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        return self.induced([v for v in range(self.n) if v not in drop])

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if adj[u] >> v & 1:
                raise ValueError(f"edge {u}-{v} already present")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph._trusted(self.n, tuple(adj))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self.adj)
        for u, v in edges:
            if not adj[u] >> v & 1:
                raise ValueError(f"edge {u}-{v} not present")
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        return Graph._trusted(self.n, tuple(adj))

    def add_vertex(self, neighbors: Iterable[int] = ()) -> "Graph":
        """Append vertex ``n`` adjacent to ``neighbors``."""
        new = self.n
        adj = list(self.adj)
        row = 0
        for u in neighbors:
            adj[u] |= 1 << new
            row |= 1 << u
        adj.append(row)
        return Graph._trusted(new + 1, tuple(adj))

    # -- dunder --------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


# -- primitives --------------------------------------------------------


def empty(n: int) -> Graph:
    """``n`` isolated vertices."""
    if n < 0:
        raise ValueError(f"negative size {n}")
    return Graph._trusted(n, (0,) * n)


def path(n: int) -> Graph:
    """P_n with vertices ``0-1-...-(n-1)`` in order."""
    if n < 0:
        raise ValueError(f"negative size {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """C_n with vertices ``0..n-1`` in cyclic order."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 0:
        raise ValueError(f"negative size {n}")
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t}: side ``0..s-1`` against side ``s..s+t-1``."""
    if s < 1 or t < 1:
        raise ValueError(f"K_{{s,t}} needs s,t >= 1, got {s},{t}")
    return Graph.from_edges(s + t, [(i, s + j) for i in range(s) for j in range(t)])


_PRIMITIVES = {
    "empty": empty,
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "complete_bipartite": complete_bipartite,
}


def primitive(kind: str, *params: int) -> Graph:
    try:
        build = _PRIMITIVES[kind]
    except KeyError:
        raise ValueError(f"unknown primitive {kind!r}") from None
    return build(*params)


# -- graph algebra -----------------------------------------------------


def union(gs: Sequence[Graph]) -> Graph:
    """Disjoint union; the vertices of ``gs[i]`` follow those of ``gs[i-1]``."""
    adj: list[int] = []
    offset = 0
    for g in gs:
        adj.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph._trusted(offset, tuple(adj))


def copies(t: int, h: Graph) -> Graph:
    """tH, the disjoint union of ``t`` copies of ``h``."""
    if t < 1:
        raise ValueError(f"copy count must be positive, got {t}")
    return union([h] * t)


def join(g: Graph, h: Graph) -> Graph:
    """G+H: union of ``g`` then ``h`` plus every edge between them."""
    n = g.n + h.n
    g_mask = (1 << g.n) - 1
    h_mask = ((1 << h.n) - 1) << g.n
    adj = [row | h_mask for row in g.adj]
    adj += [(row << g.n) | g_mask for row in h.adj]
    return Graph._trusted(n, tuple(adj))


def pendant_cycle(k: int) -> Graph:
    """C_k^+: the cycle ``0..k-1`` plus pendant vertex ``k`` attached to ``0``."""
    if k < 3:
        raise ValueError(f"pendant cycle needs k >= 3, got {k}")
    return cycle(k).add_vertex([0])
