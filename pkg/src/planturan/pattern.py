"""Forbidden-subgraph patterns and exact (non-induced) containment.

Pattern grammar::

    expr   := clause (" U " clause)*
    clause := [INT] atom
    atom   := "C" INT ["^+"] | "K" INT | "K" INT "," INT | "prism" | "g6:" GRAPH6

``contains`` returns an injective, edge-preserving map from the pattern's
vertices into the host, or ``None`` when no copy exists.  Running out of
budget raises :class:`BudgetExceeded`; it is never reported as "free".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from . import graph6
from .errors import BudgetExceeded
from .graph import Graph, bits, complete, complete_bipartite, copies, cycle, pendant_cycle, union

DEFAULT_BUDGET = 50_000_000


class PatternSyntaxError(ValueError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


@dataclass(frozen=True)
class Clause:
    multiplicity: int
    kind: str  # "C", "C+", "K", "Kst", "prism", "g6"
    params: tuple
    graph: Graph


@dataclass(frozen=True)
class Pattern:
    source_text: str
    target: Graph
    display_name: str
    clauses: tuple[Clause, ...]

    def __str__(self) -> str:
        return self.display_name

    @property
    def disjoint_cycles(self) -> tuple[int, int] | None:
        """``(k, t)`` if the pattern is tC_k, else ``None``."""
        ks = {c.params[0] for c in self.clauses if c.kind == "C"}
        if len(ks) != 1 or any(c.kind != "C" for c in self.clauses):
            return None
        return ks.pop(), sum(c.multiplicity for c in self.clauses)

    @property
    def k2t(self) -> tuple[int, bool] | None:
        """``(t, swapped)`` if the pattern is K_{2,t} (or K_{t,2}), else ``None``."""
        if len(self.clauses) != 1:
            return None
        c = self.clauses[0]
        if c.multiplicity != 1 or c.kind != "Kst":
            return None
        s, t = c.params
        if s == 2:
            return t, False
        if t == 2:
            return s, True
        return None


_ATOM = re.compile(r"(?P<mult>\d+)?(?:C(?P<ck>\d+)(?P<plus>\^\+)?|K(?P<a>\d+)(?:,(?P<b>\d+))?|(?P<prism>prism)|g6:(?P<g6>\S+))")


def prism() -> Graph:
    """Triangular prism: triangles 0-1-2 and 3-4-5 with rungs i -- i+3."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def _parse_clause(text: str, clause: str, offset: int) -> Clause:
    mt = _ATOM.fullmatch(clause)
    if mt is None:
        m2 = _ATOM.match(clause)
        pos = offset + (m2.end() if m2 else 0)
        raise PatternSyntaxError(f"cannot parse clause {clause!r}", text, pos)
    mult = int(mt["mult"]) if mt["mult"] else 1
    if mult < 1:
        raise PatternSyntaxError("multiplicity must be at least 1", text, offset)
    if mt["ck"] is not None:
        k = int(mt["ck"])
        if k < 3:
            raise PatternSyntaxError(f"cycle length must be at least 3, got {k}", text, offset)
        if mt["plus"]:
            return Clause(mult, "C+", (k,), pendant_cycle(k))
        return Clause(mult, "C", (k,), cycle(k))
    if mt["a"] is not None:
        a = int(mt["a"])
        if mt["b"] is not None:
            b = int(mt["b"])
            if a < 1 or b < 1:
                raise PatternSyntaxError(f"K_{{s,t}} needs s,t >= 1, got {a},{b}", text, offset)
            return Clause(mult, "Kst", (a, b), complete_bipartite(a, b))
        if a < 1:
            raise PatternSyntaxError(f"complete graph needs at least 1 vertex, got {a}", text, offset)
        return Clause(mult, "K", (a,), complete(a))
    if mt["prism"]:
        return Clause(mult, "prism", (), prism())
    try:
        g = graph6.decode(mt["g6"])
    except ValueError as exc:
        raise PatternSyntaxError(f"bad graph6 payload ({exc})", text, offset + clause.index("g6:") + 3) from None
    return Clause(mult, "g6", (mt["g6"],), g)


def _clause_name(c: Clause) -> str:
    base = {
        "C": lambda: f"C{c.params[0]}",
        "C+": lambda: f"C{c.params[0]}^+",
        "K": lambda: f"K{c.params[0]}",
        "Kst": lambda: f"K{c.params[0]},{c.params[1]}",
        "prism": lambda: "prism",
        "g6": lambda: f"g6:{c.params[0]}",
    }[c.kind]()
    return base if c.multiplicity == 1 else f"{c.multiplicity}{base}"


@lru_cache(maxsize=256)
def parse(text: str) -> Pattern:
    """Parse a pattern expression; the same text always yields the same target."""
    if not isinstance(text, str) or not text.strip():
        raise PatternSyntaxError("empty pattern", str(text), 0)
    clauses = []
    pos = 0
    for piece in re.split(r"( U )", text):
        if piece == " U ":
            pos += len(piece)
            continue
        if piece != piece.strip() or not piece:
            raise PatternSyntaxError("clauses are separated by ' U '", text, pos)
        clauses.append(_parse_clause(text, piece, pos))
        pos += len(piece)
    parts = []
    for c in clauses:
        parts.extend([c.graph] * c.multiplicity)
    target = union(parts)
    return Pattern(text, target, " U ".join(_clause_name(c) for c in clauses), tuple(clauses))


def as_pattern(p: Pattern | str | Graph) -> Pattern:
    if isinstance(p, Pattern):
        return p
    if isinstance(p, Graph):
        return parse("g6:" + graph6.encode(p))
    return parse(p)


# -- generic backtracking matcher ---------------------------------------


def _nds(adj, v, deg):
    return sorted((deg[u] for u in bits(adj[v])), reverse=True)


def _plan(pat: Graph):
    """Pattern vertex order plus, per position, earlier neighbor positions and
    the symmetry-breaking predecessor (for labeled-identical components)."""
    comps = pat.components()
    sub_keys = []
    for comp in comps:
        h = pat.induced(comp)
        sub_keys.append((h.n, h.adj))
    order_idx = sorted(range(len(comps)), key=lambda i: (-len(comps[i]), sub_keys[i], comps[i][0]))
    order: list[int] = []
    sym: list[int | None] = []
    prev_key = None
    prev_root_pos = None
    rel_order_cache = {}
    for ci in order_idx:
        comp = comps[ci]
        key = sub_keys[ci]
        if key not in rel_order_cache:
            h = pat.induced(comp)
            rel_order_cache[key] = _component_order(h)
        rel = rel_order_cache[key]
        root_pos = len(order)
        for j, r in enumerate(rel):
            order.append(comp[r])
            sym.append(prev_root_pos if (j == 0 and key == prev_key) else None)
        prev_key = key
        prev_root_pos = root_pos
    pos = {v: i for i, v in enumerate(order)}
    back = []
    for i, v in enumerate(order):
        back.append([pos[u] for u in bits(pat.adj[v]) if pos[u] < i])
    return order, back, sym


def _component_order(h: Graph) -> list[int]:
    degs = h.degrees()
    start = min(range(h.n), key=lambda v: (-degs[v], v))
    order = [start]
    placed = 1 << start
    while len(order) < h.n:
        best = None
        best_key = None
        for v in range(h.n):
            if placed >> v & 1:
                continue
            key = (-(h.adj[v] & placed).bit_count(), -degs[v], v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        order.append(best)
        placed |= 1 << best
    return order


class _Budget:
    __slots__ = ("limit", "used")

    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self, k: int = 1):
        self.used += k
        if self.used > self.limit:
            raise BudgetExceeded("pattern search budget exceeded", used=self.used, limit=self.limit)


def find_embedding_generic(host: Graph, pat: Graph, budget: int = DEFAULT_BUDGET) -> dict[int, int] | None:
    """Backtracking subgraph monomorphism; exact and complete."""
    if pat.n == 0:
        return {}
    if pat.n > host.n or pat.m > host.m:
        return None
    order, back, sym = _plan(pat)
    hadj = host.adj
    hdeg = host.degrees()
    pdeg = pat.degrees()
    hnds = [_nds(hadj, v, hdeg) for v in range(host.n)]
    base = []
    for p in order:
        want = _nds(pat.adj, p, pdeg)
        mask = 0
        for v in range(host.n):
            if hdeg[v] < pdeg[p]:
                continue
            have = hnds[v]
            if all(have[i] >= want[i] for i in range(len(want))):
                mask |= 1 << v
        if not mask:
            return None
        base.append(mask)
    L = len(order)
    img = [0] * L
    spent = _Budget(budget)

    def rec(i: int, used: int) -> bool:
        if i == L:
            return True
        cand = base[i] & ~used
        for j in back[i]:
            cand &= hadj[img[j]]
        s = sym[i]
        if s is not None:
            cand &= ~((1 << (img[s] + 1)) - 1)
        while cand:
            low = cand & -cand
            cand ^= low
            spent.spend()
            img[i] = low.bit_length() - 1
            if rec(i + 1, used | low):
                return True
        return False

    if not rec(0, 0):
        return None
    return {order[i]: img[i] for i in range(L)}


# -- fast path: t vertex-disjoint k-cycles ------------------------------


class _CycleFinder:
    """Search for t pairwise vertex-disjoint k-cycles.

    Cycles are enumerated from start vertices in decreasing-degree order,
    each cycle's start being its earliest vertex; remaining cycles then avoid
    all earlier starts.  High-degree vertices trigger a memoized look-ahead
    ("can the rest still host t-1 cycles without this hub?"), and single
    cycle existence is decided per connected component with memoization.
    """

    def __init__(self, g: Graph, k: int, budget: int):
        self.adj = g.adj
        self.n = g.n
        self.k = k
        self.spent = _Budget(budget)
        deg = g.degrees()
        self.order = sorted(range(g.n), key=lambda v: (-deg[v], v))
        avg = 2 * g.m / g.n if g.n else 0
        self.hubs = 0
        for v in range(g.n):
            if deg[v] >= max(6, 1.5 * avg):
                self.hubs |= 1 << v
        self.memo: dict[tuple[int, int], list | None] = {}
        self.conn_memo: dict[int, list | None] = {}
        self.through_memo: dict[tuple[int, int], list | None] = {}

    # connected pieces of G[mask]
    def _components(self, mask: int) -> list[int]:
        adj = self.adj
        out = []
        while mask:
            low = mask & -mask
            reach = frontier = low
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    f ^= b
                    nxt |= adj[b.bit_length() - 1]
                frontier = nxt & mask & ~reach
                reach |= frontier
            out.append(reach)
            mask &= ~reach
        return out

    def _reach(self, seeds: int, mask: int) -> int:
        adj = self.adj
        reach = frontier = seeds & mask
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            frontier = nxt & mask & ~reach
            reach |= frontier
        return reach

    def find(self, alive: int, t: int) -> list[list[int]] | None:
        if t == 0:
            return []
        if t == 1:
            return self.single(alive)
        key = (alive, t)
        if key in self.memo:
            return self.memo[key]
        result = None
        if alive.bit_count() >= self.k * t:
            for s in self.order:
                if not alive >> s & 1:
                    continue
                rest = alive & ~(1 << s)
                if self.find(rest, t - 1) is None:
                    break
                for cyc in self._cycles_from(s, rest, t - 1):
                    cmask = 0
                    for v in cyc:
                        cmask |= 1 << v
                    sub = self.find(rest & ~cmask, t - 1)
                    if sub is not None:
                        result = [cyc] + sub
                        break
                if result is not None:
                    break
                alive = rest
                if alive.bit_count() < self.k * t:
                    break
        self.memo[key] = result
        return result

    def single(self, alive: int) -> list[int] | None:
        if alive.bit_count() < self.k:
            return None
        for comp in self._components(alive):
            cyc = self._single_connected(comp)
            if cyc is not None:
                return [cyc]
        return None

    def _single_connected(self, comp: int) -> list[int] | None:
        if comp in self.conn_memo:
            return self.conn_memo[comp]
        result = None
        if comp.bit_count() >= self.k:
            adj = self.adj
            h = max(bits(comp), key=lambda v: ((adj[v] & comp).bit_count(), -v))
            rest = comp & ~(1 << h)
            for piece in self._components(rest):
                if piece.bit_count() < self.k - 1 or (adj[h] & piece).bit_count() < 2:
                    continue
                result = self._through(h, piece)
                if result is not None:
                    break
            if result is None:
                sub = self.single(rest)
                result = sub[0] if sub else None
        self.conn_memo[comp] = result
        return result

    def _through(self, h: int, piece: int) -> list[int] | None:
        key = (h, piece)
        if key in self.through_memo:
            return self.through_memo[key]
        result = None
        for cyc in self._cycles_from(h, piece, 0):
            result = cyc
            break
        self.through_memo[key] = result
        return result

    def _cycles_from(self, s: int, rest: int, t_after: int):
        """k-cycles through ``s`` using other vertices from ``rest``."""
        k = self.k
        adj = self.adj
        spent = self.spent
        hubs = self.hubs
        closing = adj[s]
        path = [s]

        def rec(end: int, used: int, hub_used: int):
            need = k - len(path)
            if need == 0:
                if closing >> end & 1 and path[1] < path[-1]:
                    yield list(path)
                return
            avail = rest & ~used
            cand = adj[end] & avail
            if need == 1:
                cand &= closing
            elif need >= 2:
                reach = self._reach(cand, avail)
                if reach.bit_count() < need or not reach & closing:
                    return
            while cand:
                low = cand & -cand
                cand ^= low
                v = low.bit_length() - 1
                spent.spend()
                hv = hub_used
                if t_after and low & hubs:
                    hv |= low
                    if self.find(rest & ~hv, t_after) is None:
                        continue
                path.append(v)
                yield from rec(v, used | low, hv)
                path.pop()

        yield from rec(s, 0, 0)


def find_disjoint_cycles(g: Graph, k: int, t: int, budget: int = DEFAULT_BUDGET) -> list[list[int]] | None:
    """``t`` vertex-disjoint k-cycles of ``g`` (each in cyclic order), or ``None``."""
    if t < 1 or k < 3:
        raise ValueError("need t >= 1 and k >= 3")
    finder = _CycleFinder(g, k, budget)
    return finder.find((1 << g.n) - 1, t)


def find_k2t(g: Graph, t: int) -> tuple[int, int, list[int]] | None:
    """A pair with at least ``t`` common neighbors, as ``(a, b, common[:t])``."""
    adj = g.adj
    for a in range(g.n):
        for b in range(a + 1, g.n):
            common = adj[a] & adj[b]
            if common.bit_count() >= t:
                return a, b, list(bits(common))[:t]
    return None


def contains_k2t(g: Graph, t: int) -> bool:
    """True iff some vertex pair has at least ``t`` common neighbors."""
    if t < 1:
        raise ValueError("t must be at least 1")
    return find_k2t(g, t) is not None


# -- public API ---------------------------------------------------------


def contains(g: Graph, p: Pattern | str, budget: int = DEFAULT_BUDGET) -> dict[int, int] | None:
    """A witness embedding of ``p`` in ``g`` (pattern vertex -> host vertex)."""
    p = as_pattern(p)
    target = p.target
    if target.n > g.n or target.m > g.m:
        return None
    dc = p.disjoint_cycles
    if dc is not None:
        k, t = dc
        cycles = find_disjoint_cycles(g, k, t, budget)
        if cycles is None:
            return None
        return {i * k + j: v for i, cyc in enumerate(cycles) for j, v in enumerate(cyc)}
    kt = p.k2t
    if kt is not None:
        t, swapped = kt
        hit = find_k2t(g, t)
        if hit is None:
            return None
        a, b, common = hit
        if swapped:
            return {**{i: c for i, c in enumerate(common)}, t: a, t + 1: b}
        return {0: a, 1: b, **{2 + i: c for i, c in enumerate(common)}}
    return find_embedding_generic(g, target, budget)


def is_free(g: Graph, p: Pattern | str, budget: int = DEFAULT_BUDGET) -> bool:
    return contains(g, p, budget) is None


def is_embedding(g: Graph, pat: Graph, mapping: dict[int, int]) -> bool:
    """Check that ``mapping`` is an injective edge-preserving map of ``pat`` into ``g``."""
    if set(mapping) != set(range(pat.n)) or len(set(mapping.values())) != pat.n:
        return False
    return all(g.has_edge(mapping[a], mapping[b]) for a, b in pat.edges())


def image_edges(pat: Graph, mapping: dict[int, int]) -> list[tuple[int, int]]:
    out = []
    for a, b in pat.edges():
        u, v = mapping[a], mapping[b]
        out.append((u, v) if u < v else (v, u))
    return out
