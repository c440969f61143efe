"""Extremal constructions, each with an exact edge-count and freeness contract.

Labeling conventions (all 0-based):

* ``q_triangulation``: ring vertex u_{i,j} (i in 1..k, j in 1..4) is
  ``4(i-1) + (j-1)``; then u = 4k, v = 4k+1, and x_j = 4k+1+j.
* ``hex_cylinder`` / ``hex_family``: u_{i,j} (j in 1..6) is ``6(i-1) + (j-1)``;
  wheel vertices follow as center then rim v_1..v_5, then the w vertices.
* ``t_stack``: x = 0, y = 1, path vertices 2..m-1, stacked vertices after.
* ``tc3_lower``: path 0..n-3, apex u = n-2, second apex v = n-1.
* ``two_ck_lower``: apexes 0 and 1, then the paths in order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

from . import graph6
from .bounds import lemma2_value, lemma3_value
from .graph import Graph, complete, cycle, empty, join, path, union
from .pattern import contains_k2t, is_free, prism
from .planar import is_outerplanar, is_planar, is_triangulation


class ContractError(ValueError):
    """A construction failed its own contract (never silently substituted)."""


@dataclass(frozen=True)
class MarkedGraph:
    graph: Graph
    x: int = 0
    y: int = 1

    def __post_init__(self):
        if self.x == self.y or not self.graph.has_edge(self.x, self.y):
            raise ValueError("marked vertices must be distinct and adjacent")


# -- small helpers ------------------------------------------------------


def _require(cond: bool, message: str):
    if not cond:
        raise ValueError(message)


def wheel(k: int) -> Graph:
    """W_k = K_1 + C_k with center 0 and rim 1..k."""
    return join(empty(1), cycle(k))


def double_wheel(n: int) -> Graph:
    """2K_1 + C_{n-2}: a K_4-free triangulation (poles 0, 1; rim 2..n-1)."""
    _require(n >= 6, f"double_wheel needs n >= 6, got {n}")
    return join(empty(2), cycle(n - 2))


def t_base(m: int) -> Graph:
    """𝒯_m = K_2 + P_{m-2} (x = 0, y = 1, path 2..m-1); 𝒯_2 = K_2."""
    _require(m >= 2, f"𝒯_m needs m >= 2, got {m}")
    return join(complete(2), path(m - 2))


def t_faces(m: int) -> list[tuple[int, int, int]]:
    """The 2m-4 triangular faces of 𝒯_m, sorted by vertex triple."""
    if m == 2:
        return []
    p = list(range(2, m))
    faces = [(0, 1, p[0]), (0, 1, p[-1])]
    for a, b in zip(p, p[1:]):
        faces.append((0, a, b))
        faces.append((1, a, b))
    return sorted(tuple(sorted(f)) for f in faces)


# -- Q_k^l (prism-free triangulations) -------------------------------------


def q_triangulation(k: int, l: int = 0) -> Graph:
    """Q_k^l on 4k+2+l vertices: stacked 4-rings capped by u and v."""
    _require(k >= 2, f"q_triangulation needs k >= 2, got {k}")
    _require(l in (0, 1, 2, 3), f"l must be in 0..3, got {l}")

    def u(i, j):
        return 4 * (i - 1) + (j - 1) % 4

    edges = []
    for i in range(1, k + 1):
        edges += [(u(i, j), u(i, j + 1)) for j in range(1, 5)]
    for i in range(1, k):
        for j in range(1, 5):
            edges += [(u(i, j), u(i + 1, j)), (u(i, j), u(i + 1, j + 1))]
    cu, cv = 4 * k, 4 * k + 1
    edges += [(cu, u(1, j)) for j in range(1, 5)]
    edges += [(cv, u(k, j)) for j in range(1, 5)]
    for j in range(1, l + 1):
        x = 4 * k + 1 + j
        edges += [(x, u(k - 1, j)), (x, u(k, j)), (x, u(k, j + 1))]
    return Graph.from_edges(4 * k + 2 + l, edges)


def k2_p3_path(n: int) -> Graph:
    """K_2 + (P_3 ∪ P_{n-5}): prism-free with 3n-7 edges for n = 6..8."""
    _require(n >= 6, f"K2+(P3 ∪ P_(n-5)) needs n >= 6, got {n}")
    return join(complete(2), union([path(3), path(n - 5)]))


# -- disjoint-cycle lower bounds --------------------------------------------


def tc3_lower(n: int) -> Graph:
    """Path P_{n-2}, apex u on the whole path and v, and v on a maximum
    independent set of the path containing both ends."""
    _require(n >= 6, f"tc3_lower needs n >= 6, got {n}")
    m = n - 2
    u, v = n - 2, n - 1
    edges = [(i, i + 1) for i in range(m - 1)]
    edges += [(i, u) for i in range(m)]
    edges.append((u, v))
    if m % 2:
        S = list(range(0, m, 2))
    else:
        S = list(range(0, m - 2, 2)) + [m - 1]
    edges += [(s, v) for s in S]
    return Graph.from_edges(n, edges)


def two_ck_lower(n: int, k: int) -> Graph:
    """Two adjacent apexes over t paths P_{k-2}, one P_{2k-3} and one P_r."""
    _require(k >= 4 and n >= 2 * k, f"two_ck_lower needs n >= 2k >= 8, got n={n}, k={k}")
    r = (n - 3) % (k - 2)
    t = (n - (2 * k - 1) - r) // (k - 2)
    parts = [path(k - 2)] * t + [path(2 * k - 3)]
    if r:
        parts.append(path(r))
    return join(complete(2), union(parts))


def t_stack(m: int, s: int) -> MarkedGraph:
    """𝒯_s^m: 𝒯_m with s-m vertices stacked into its 3-faces in sorted order.

    Each face receives at most one new vertex, so s <= m + (2m-4) = 3m-4.
    """
    _require(m >= 2, f"t_stack needs m >= 2, got {m}")
    if m == 2:
        _require(s == 2, f"with m = 2 only s = 2 is allowed, got s={s}")
        return MarkedGraph(t_base(2))
    faces = t_faces(m)
    _require(m <= s <= m + len(faces), f"t_stack({m}, s) needs {m} <= s <= {3 * m - 4}, got {s}")
    g = t_base(m)
    for face in faces[: s - m]:
        g = g.add_vertex(face)
    return MarkedGraph(g)


def paste_along_k2(parts: list[MarkedGraph]) -> Graph:
    """Identify every part's x (as 0) and every part's y (as 1)."""
    _require(len(parts) >= 1, "paste_along_k2 needs at least one part")
    edges = {(0, 1)}
    n = 2
    for part in parts:
        g = part.graph
        index = {part.x: 0, part.y: 1}
        for v in range(g.n):
            if v not in index:
                index[v] = n
                n += 1
        for a, b in g.edges():
            a, b = index[a], index[b]
            edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(n, sorted(edges))


def improved_parts(n: int, k: int) -> list[MarkedGraph]:
    """The pasted blocks H_1..H_{t+2} of the improved 2C_k construction."""
    _require(k >= 7, f"improved 2C_k construction needs k >= 7, got {k}")
    p = k // 2
    if k % 2:
        _require(n >= 3 * k - 3, f"odd k needs n >= 3k-3 = {3 * k - 3}, got {n}")
        period, block, apex_m = 3 * p - 3, (p + 1, 3 * p - 1), p + 1
    else:
        _require(n >= 3 * k - 6, f"even k needs n >= 3k-6 = {3 * k - 6}, got {n}")
        period, block, apex_m = 3 * p - 6, (p, 3 * p - 4), p
    eps = (n - (2 * k - 1)) % period
    t = (n - (2 * k - 1)) // period
    parts = [t_stack(*block) for _ in range(t)]
    if eps + 2 <= k - 1:
        parts.append(MarkedGraph(t_base(eps + 2)))
    else:
        parts.append(t_stack(apex_m, eps + 2))
    parts.append(MarkedGraph(t_base(2 * k - 1)))
    return parts


def two_ck_lower_improved(n: int, k: int) -> Graph:
    """Pasted 𝒯-blocks along K_2; 2C_k-free for k >= 7."""
    return paste_along_k2(improved_parts(n, k))


def two_ck_small(n: int, k: int) -> Graph:
    """𝒯^{m}_n with m = 2p+1 (k = 2p+1) or 2p-1 (k = 2p): a 2C_k-free
    triangulation for n <= 3k-4 (odd k) or n <= 3k-7 (even k)."""
    _require(k >= 7, f"needs k >= 7, got {k}")
    p = k // 2
    m = 2 * p + 1 if k % 2 else 2 * p - 1
    top = 3 * k - 4 if k % 2 else 3 * k - 7
    _require(m <= n <= top, f"needs {m} <= n <= {top}, got {n}")
    return t_stack(m, n).graph


# -- K_{2,t}-free constructions ----------------------------------------------


def hex_cylinder(l: int) -> Graph:
    """H_l: l stacked hexagons joined by u_{i,j}u_{i+1,j} and u_{i,j}u_{i+1,j+1}."""
    _require(l >= 1, f"hex_cylinder needs l >= 1, got {l}")

    def u(i, j):
        return 6 * (i - 1) + (j - 1) % 6

    edges = []
    for i in range(1, l + 1):
        edges += [(u(i, j), u(i, j + 1)) for j in range(1, 7)]
    for i in range(1, l):
        for j in range(1, 7):
            edges += [(u(i, j), u(i + 1, j)), (u(i, j), u(i + 1, j + 1))]
    return Graph.from_edges(6 * l, edges)


def _wheel_edges(center: int, rim: list[int]) -> list[tuple[int, int]]:
    k = len(rim)
    return [(center, v) for v in rim] + [(rim[i], rim[(i + 1) % k]) for i in range(k)]


def hex_family(k: int, r: int) -> Graph:
    """R_k^r: a K_{2,3}-free triangulation on 6k+r vertices.

    For k = 2, r = 0 the hexagon band is empty and the two wheels are
    joined rim to rim by a pentagonal antiprism band (the icosahedron).
    For k = 3, r = 0 both wheels sit on one hexagon; the second is rotated
    by three positions.  R_2^1 is built literally and is not K_{2,3}-free:
    no triangulation on 13 vertices has minimum degree 5, which any
    K_{2,3}-free triangulation needs.
    """
    _require(r in range(6), f"r must be in 0..5, got {r}")
    _require(k >= 2, f"hex_family needs k >= 2, got {k}")
    if r == 0 and k == 2:
        rim1, rim2 = list(range(1, 6)), list(range(7, 12))
        edges = _wheel_edges(0, rim1) + _wheel_edges(6, rim2)
        for j in range(5):
            edges += [(rim1[j], rim2[j]), (rim1[j], rim2[(j + 1) % 5])]
        return Graph.from_edges(12, edges)
    bands = {0: k - 2, 1: k - 1}.get(r, k)
    h = hex_cylinder(bands)
    edges = h.edges()
    nxt = h.n

    def u(i, j):
        return 6 * (i - 1) + (j - 1 + shift) % 6

    shift = 0

    def add_wheel(i, wrap):
        nonlocal nxt
        center, rim = nxt, list(range(nxt + 1, nxt + 6))
        nxt += 6
        edges.extend(_wheel_edges(center, rim))
        v = lambda j: rim[(j - 1) % 5]  # noqa: E731
        for j in range(1, 6):
            if wrap:
                edges.extend([(u(i, j), v(j)), (u(i, j), v(j + 1))])
            else:
                edges.extend([(v(j), u(i, j)), (v(j), u(i, j + 1))])
        edges.append((u(i, 6), v(1)))

    def add_clique(p):
        nonlocal nxt
        ws = list(range(nxt, nxt + p))
        nxt += p
        edges.extend(itertools.combinations(ws, 2))
        return ws

    def cap_one(i):
        (w,) = add_clique(1)
        edges.extend((u(i, j), w) for j in range(1, 7))

    def cap_two(i):
        w1, w2 = add_clique(2)
        edges.extend((u(i, j), w1) for j in (1, 2, 3, 4))
        edges.extend((u(i, s), w2) for s in (1, 4, 5, 6))

    def cap_three(i):
        w1, w2, w3 = add_clique(3)
        edges.extend((u(i, j), w1) for j in (1, 2, 3))
        edges.extend((u(i, j), w2) for j in (3, 4, 5))
        edges.extend((u(i, j), w3) for j in (1, 5, 6))

    last = bands
    if r == 0:
        add_wheel(1, wrap=True)
        if last == 1:
            # both wheels sit on the single hexagon; rotate the second one so
            # the two rim vertices with three hexagon neighbors are apart
            shift = 3
        add_wheel(last, wrap=True)
    elif r == 1:
        add_wheel(last, wrap=False)
        cap_one(1)
    elif r == 2:
        cap_one(1)
        cap_one(last)
    elif r == 3:
        cap_one(1)
        cap_two(last)
    elif r == 4:
        cap_two(1)
        cap_two(last)
    else:
        cap_two(1)
        cap_three(last)
    return Graph.from_edges(6 * k + r, edges)


def hex_family_n(n: int) -> Graph:
    """R_k^r with n = 6k + r."""
    _require(n >= 12, f"hex family needs n >= 12, got {n}")
    return hex_family(n // 6, n % 6)


def outer_snake(n: int) -> Graph:
    """O_n: the n-cycle plus zigzag chords (2,n),(3,n),(3,n-1),(4,n-1),... (1-based)."""
    _require(n >= 5, f"outer_snake needs n >= 5, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    a, b = 2, n
    chords = [(a, b)]
    step_a = True
    while len(chords) < n - 3:
        if step_a:
            a += 1
        else:
            b -= 1
        step_a = not step_a
        chords.append((a, b))
    edges += [(x - 1, y - 1) for x, y in chords]
    return Graph.from_edges(n, edges)


def apex_outer_snake(n: int) -> Graph:
    """K_1 + O_{n-1} (apex 0): K_{2,5}-free with 3n-6 edges."""
    return join(empty(1), outer_snake(n - 1))


def _complete_by_search(base: Graph, count: int, max_degree: int, low: int, check) -> Graph:
    """Lexicographically least set of ``count`` non-edges among vertices of
    degree <= ``low`` whose addition keeps degrees <= ``max_degree`` and passes ``check``."""
    degs = base.degrees()
    pool = [v for v in range(base.n) if degs[v] <= low]
    cand = [(a, b) for a, b in itertools.combinations(pool, 2) if not base.has_edge(a, b)]
    for extra in itertools.combinations(cand, count):
        g = base.add_edges(extra)
        if g.max_degree() <= max_degree and check(g):
            return g
    raise ContractError("no admissible edge completion exists")


def _k23_free_planar(g: Graph) -> bool:
    return is_planar(g) and not contains_k2t(g, 3)


# -- registry of named small graphs -------------------------------------


@dataclass(frozen=True)
class Contract:
    n: int | None = None
    m: int | None = None
    planar: bool = True
    triangulation: bool | None = None
    outerplanar: bool | None = None
    regular: int | None = None
    max_degree: int | None = None
    degree_sequence: tuple[int, ...] | None = None
    free: tuple[str, ...] = ()
    contains: tuple[str, ...] = ()

    def checks(self, g: Graph) -> list[tuple[str, object, object, bool]]:
        """(property, expected, actual, ok) for every stated property."""
        out = []

        def add(name, expected, actual):
            out.append((name, expected, actual, expected == actual))

        if self.n is not None:
            add("n", self.n, g.n)
        if self.m is not None:
            add("edges", self.m, g.m)
        add("planar", self.planar, is_planar(g))
        if self.triangulation is not None:
            add("triangulation", self.triangulation, is_triangulation(g))
        if self.outerplanar is not None:
            add("outerplanar", self.outerplanar, is_outerplanar(g))
        if self.regular is not None:
            add("regular", self.regular, g.max_degree() if g.min_degree() == g.max_degree() else None)
        if self.max_degree is not None:
            add("max_degree", self.max_degree, g.max_degree())
        if self.degree_sequence is not None:
            add("degree_sequence", self.degree_sequence, g.degree_sequence())
        for p in self.free:
            add(f"{p}-free", True, is_free(g, p))
        for p in self.contains:
            add(f"contains {p}", True, not is_free(g, p))
        return out

    def validate(self, g: Graph, label: str) -> Graph:
        bad = [c for c in self.checks(g) if not c[3]]
        if bad:
            detail = ", ".join(f"{name}: expected {exp}, got {act}" for name, exp, act, _ in bad)
            raise ContractError(f"{label} violates its contract ({detail})")
        return g


def _q2_prime() -> Graph:
    q = q_triangulation(2, 0)
    # u_{2,1} = 4, u_{2,3} = 6; v = 9
    return q.add_edges([(4, 6)]).remove_vertices([9])


def _q2_double_prime() -> Graph:
    return q_triangulation(2, 0).add_vertex([9, 4, 5])


def _lemma1_g2() -> Graph:
    # v1..v8 as 0..7: v1~v2,v3,v4; path v5v6v7v8; v6v2, v7v3, v5v2, v8v3; v4~v5,v8
    e = [(1, 2), (1, 3), (1, 4), (5, 6), (6, 7), (7, 8), (6, 2), (7, 3), (5, 2), (8, 3), (4, 5), (4, 8)]
    return Graph.from_edges(8, [(a - 1, b - 1) for a, b in e])


def _lemma1_g3() -> Graph:
    # two copies of K_4^- (degree-2 vertices 0,3 and 4,7) joined by 0-4 and 3-7
    k4m = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
    e = k4m + [(a + 4, b + 4) for a, b in k4m] + [(0, 4), (3, 7)]
    return Graph.from_edges(8, e)


def _cube() -> Graph:
    return Graph.from_edges(8, [(a, b) for a in range(8) for b in range(a + 1, 8) if (a ^ b).bit_count() == 1])


@dataclass(frozen=True)
class Witness:
    id: str
    description: str
    build: Callable[[], Graph]
    contract: Contract
    note: str = ""


def search_j_family(g: Graph) -> list[tuple[int, int, int, int, int]]:
    """Labelings (x1, ..., x5) of an 11-vertex graph ``g`` under which
    J' = g - x2 + x1x3 and J'' = g - {x1, x3} + x2x4 + x2x5 are both planar and
    K_{2,3}-free (x1x3 and x2x4, x2x5 must be non-edges of ``g``).
    Sorted lexicographically."""
    def good(h: Graph) -> bool:
        return is_planar(h) and not contains_k2t(h, 3)

    out = []
    for x2 in range(g.n):
        others = [v for v in range(g.n) if v != x2]
        for x1, x3 in itertools.permutations(others, 2):
            if g.has_edge(x1, x3) or not good(g.add_edges([(x1, x3)]).remove_vertices([x2])):
                continue
            rest = [v for v in others if v not in (x1, x3) and not g.has_edge(x2, v)]
            for x4, x5 in itertools.permutations(rest, 2):
                if good(g.add_edges([(x2, x4), (x2, x5)]).remove_vertices([x1, x3])):
                    out.append((x1, x2, x3, x4, x5))
    return sorted(out)


# J: the first (by canonical key) of the extremal K_{2,3}-free planar graphs
# on 11 vertices admitting a labeling for search_j_family, relabeled by its
# least labeling so that x_i is vertex i-1.
J_G6 = "JkGUXOTB~b?"


def _j() -> Graph:
    return graph6.decode(J_G6)


def _j_prime() -> Graph:
    return _j().add_edges([(0, 2)]).remove_vertices([1])


def _j_double_prime() -> Graph:
    return _j().add_edges([(1, 3), (1, 4)]).remove_vertices([0, 2])


WITNESSES: dict[str, Witness] = {}


def _register(w: Witness):
    WITNESSES[w.id] = w


_register(Witness("prism", "triangular prism, the cubic planar graph on 6 vertices", prism,
                  Contract(n=6, m=9, regular=3, free=("K4",))))
_register(Witness("g1", "cube: cubic planar K4-free on 8 vertices, a triangle-free vertex with K_{1,3} beyond", _cube,
                  Contract(n=8, m=12, regular=3, free=("K4",))))
_register(Witness("g2", "cubic planar K4-free on 8 vertices, a triangle-free vertex with P_4 beyond", _lemma1_g2,
                  Contract(n=8, m=12, regular=3, free=("K4",))))
_register(Witness("g3", "two K_4^- joined by two edges", _lemma1_g3,
                  Contract(n=8, m=12, regular=3, free=("K4",))))
_register(Witness("wheel5", "K_1 + C_5", lambda: wheel(5), Contract(n=6, m=10, free=("K2,3",))))
_register(Witness("q2_minus_u", "Q_2 minus u", lambda: q_triangulation(2, 0).remove_vertices([8]),
                  Contract(n=9, m=20, free=("prism",))))
_register(Witness("q2_prime", "Q_2 minus v plus u_{2,1}u_{2,3}", _q2_prime,
                  Contract(n=9, m=21, triangulation=True, free=("K2,4",))))
_register(Witness("q2_prime_minus_u", "Q_2' minus u", lambda: _q2_prime().remove_vertices([8]),
                  Contract(n=8, m=17, free=("K2,4",))))
_register(Witness("q2_double_prime", "Q_2 plus w on v, u_{2,1}, u_{2,2}", _q2_double_prime,
                  Contract(n=11, m=27, triangulation=True, free=("K2,4",))))
_register(Witness("o7_prime", "O_7 plus the least two edges among degree-2/3 vertices",
                  lambda: _complete_by_search(outer_snake(7), 2, 4, 3, _k23_free_planar),
                  Contract(n=7, m=13, max_degree=4, free=("K2,3",)),
                  note="edge choice: lexicographically least planar K2,3-free completion"))
_register(Witness("o8_prime", "O_8 completed to 4-regular by edges among degree <= 3 vertices",
                  lambda: _complete_by_search(outer_snake(8), 3, 4, 3, _k23_free_planar),
                  Contract(n=8, m=16, regular=4, free=("K2,3",)),
                  note="edge choice: lexicographically least planar K2,3-free completion"))
_register(Witness("j", "J: planar K2,3-free, 11 vertices, 3n-8 edges", _j,
                  Contract(n=11, m=25, free=("K2,3",)), note="reconstructed by search; contract-certified only"))
_register(Witness("j_prime", "J' = J - x2 + x1x3", _j_prime,
                  Contract(n=10, m=22, free=("K2,3",)), note="reconstructed by search; contract-certified only"))
_register(Witness("j_double_prime", "J'' = J - {x1,x3} + x2x4 + x2x5", _j_double_prime,
                  Contract(n=9, m=19, free=("K2,3",)), note="reconstructed by search; contract-certified only"))
_register(Witness("d6", "the planar graph with degree sequence 5,4,4,3,3,3",
                  lambda: wheel(5).add_edges([(1, 3)]),
                  Contract(n=6, m=11, degree_sequence=(5, 4, 4, 3, 3, 3), free=("K2,4",))))
_register(Witness("d7", "the planar graph with degree sequence 6,4,4,4,4,3,3",
                  lambda: join(empty(1), cycle(6)).add_edges([(1, 3), (4, 6)]),
                  Contract(n=7, m=14, degree_sequence=(6, 4, 4, 4, 4, 3, 3), free=("K2,4",))))


def small_witness(id: str) -> Graph:
    try:
        w = WITNESSES[id]
    except KeyError:
        raise ValueError(f"unknown witness {id!r}; known: {', '.join(sorted(WITNESSES))}") from None
    return w.contract.validate(w.build(), id)


# -- parameterized families with contracts ---------------------------------


def _ceil_half(a: int) -> int:
    return -(-a // 2)


def _integral(val, n: int, k: int) -> int:
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral edge formula at n={n}, k={k}")
    return int(val)


def lemma2_edges(n: int, k: int) -> int:
    """Closed form: (3 - 1/(k-2)) n + (3+r)/(k-2) - 5 + max(1-r, 0)."""
    return _integral(lemma2_value(n, k), n, k)


def lemma3_edges(n: int, k: int) -> int:
    """Closed form of the improved bound, odd or even k."""
    return _integral(lemma3_value(n, k), n, k)


@dataclass(frozen=True)
class Family:
    id: str
    params: tuple[str, ...]
    build: Callable[..., Graph]
    contract: Callable[..., Contract]
    description: str
    notes: tuple[str, ...] = field(default=())


FAMILIES: dict[str, Family] = {}


def _family(*args, **kw):
    f = Family(*args, **kw)
    FAMILIES[f.id] = f


T_STACK_NOTE = (
    "𝒯_s^m is built for m <= s <= 3m-4 (one stacked vertex per 3-face of 𝒯_m); "
    "the stated range s <= 2m-4 is read as s - m <= 2m-4, the only reading "
    "consistent with the blocks 𝒯^{p+1}_{3p-1} and 𝒯^p_{3p-4} used in the pasting construction"
)

_family("double_wheel", ("n",), double_wheel,
        lambda n: Contract(n=n, m=3 * n - 6, triangulation=True, free=("K4",)),
        "2K_1 + C_{n-2}")
_family("q", ("k", "l"), q_triangulation,
        lambda k, l=0: Contract(n=4 * k + 2 + l, m=3 * (4 * k + 2 + l) - 6, triangulation=True, free=("prism",)),
        "Q_k^l, prism-free triangulation")
_family("k2_p3_path", ("n",), k2_p3_path,
        lambda n: Contract(n=n, m=3 * n - 7, free=("prism",)),
        "K_2 + (P_3 ∪ P_{n-5})")
_family("tc3_lower", ("n",), tc3_lower,
        lambda n: Contract(n=n, m=_ceil_half(5 * n) - 5, free=("2C3",)),
        "2C_3-free graph with ceil(5n/2)-5 edges")
_family("two_ck_lower", ("n", "k"), two_ck_lower,
        lambda n, k: Contract(n=n, m=lemma2_edges(n, k), free=(f"2C{k}",)),
        "2C_k-free apex construction over paths")
_family("t_stack", ("m", "s"), lambda m, s: t_stack(m, s).graph,
        lambda m, s: Contract(n=s, m=3 * s - 6 if s >= 3 else 1, triangulation=True if s >= 3 else None),
        "𝒯_s^m", notes=(T_STACK_NOTE,))
_family("two_ck_lower_improved", ("n", "k"), two_ck_lower_improved,
        lambda n, k: Contract(n=n, m=lemma3_edges(n, k), free=(f"2C{k}",)),
        "pasted 𝒯-blocks, 2C_k-free", notes=(T_STACK_NOTE,))
_family("two_ck_small", ("n", "k"), two_ck_small,
        lambda n, k: Contract(n=n, m=3 * n - 6, triangulation=True, free=(f"2C{k}",)),
        "2C_k-free triangulation 𝒯^m_n for small n", notes=(T_STACK_NOTE,))
_family("hex_cylinder", ("l",), hex_cylinder,
        lambda l: Contract(n=6 * l, m=6 * l + 12 * (l - 1)),
        "H_l, stacked hexagons")
_family("hex", ("k", "r"), hex_family,
        lambda k, r: Contract(n=6 * k + r, m=3 * (6 * k + r) - 6, triangulation=True, free=("K2,3",)),
        "R_k^r, K_{2,3}-free triangulation")
_family("outer_snake", ("n",), outer_snake,
        lambda n: Contract(n=n, m=2 * n - 3, outerplanar=True, max_degree=4, free=("K2,3",)),
        "O_n, zigzag maximal outerplanar graph")
_family("apex_outer_snake", ("n",), apex_outer_snake,
        lambda n: Contract(n=n, m=3 * n - 6, triangulation=True, free=("K2,5",)),
        "K_1 + O_{n-1}")
_family("wheel", ("k",), wheel,
        lambda k: Contract(n=k + 1, m=2 * k),
        "K_1 + C_k")


def construct(family_id: str, **params) -> Graph:
    try:
        fam = FAMILIES[family_id]
    except KeyError:
        raise ValueError(f"unknown family {family_id!r}; known: {', '.join(sorted(FAMILIES))}") from None
    missing = [p for p in fam.params if p not in params and not (family_id == "q" and p == "l")]
    if missing:
        raise ValueError(f"family {family_id!r} needs parameter(s): {', '.join(missing)}")
    extra = set(params) - set(fam.params)
    if extra:
        raise ValueError(f"family {family_id!r} does not take: {', '.join(sorted(extra))}")
    return fam.build(**params)


def contract_for(family_id: str, **params) -> Contract:
    return FAMILIES[family_id].contract(**params)
