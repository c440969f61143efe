"""Exact canonical labeling for small graphs.

Equitable refinement followed by individualization/backtracking.  The
search keeps the best leaf under the order (refinement traces, relabeled
adjacency); automorphisms discovered along the way prune the first path
by orbits and trigger back-jumps.  Intended for graphs of at most 16
vertices.
"""

from __future__ import annotations

from collections import deque
from typing import NamedTuple, Sequence

from .errors import BudgetExceeded
from .graph import Graph, bits

MAX_CANON_VERTICES = 16


class CanonicalForm(NamedTuple):
    canon: tuple
    perm: tuple[int, ...]
    orbits: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]

    def graph(self) -> Graph:
        """The canonically labeled graph encoded by ``canon``."""
        n = len(self.perm)
        return Graph._trusted(n, self.canon[-1])


def _refine(adj, lab, starts, cend, queue):
    """Refine the partition in place to the coarsest equitable one.

    ``starts`` is the sorted list of cell start positions and ``cend`` maps a
    start to its end.  Returns an isomorphism-invariant trace of the splits.
    """
    n = len(lab)
    trace = []
    pending = deque(queue)
    inq = set(queue)
    while pending and len(starts) < n:
        w = pending.popleft()
        inq.discard(w)
        wmask = 0
        for i in range(w, cend[w]):
            wmask |= 1 << lab[i]
        added = []
        for s in starts:
            e = cend[s]
            if e - s == 1:
                continue
            members = lab[s:e]
            counts = [(adj[v] & wmask).bit_count() for v in members]
            c0 = counts[0]
            for c in counts:
                if c != c0:
                    break
            else:
                continue
            groups: dict[int, list[int]] = {}
            for c, v in zip(counts, members):
                groups.setdefault(c, []).append(v)
            pos = s
            frags = []
            for c in sorted(groups):
                grp = groups[c]
                lab[pos:pos + len(grp)] = grp
                frags.append((pos, pos + len(grp), c))
                pos += len(grp)
            trace.append((w, s, tuple((c, b - a) for a, b, c in frags)))
            for a, b, _ in frags:
                cend[a] = b
            if s in inq:
                fresh = [a for a, _, _ in frags[1:]]
            else:
                big = max(range(len(frags)), key=lambda i: (frags[i][1] - frags[i][0], -i))
                fresh = [frags[i][0] for i in range(len(frags)) if i != big]
            for a in fresh:
                if a not in inq:
                    inq.add(a)
                    pending.append(a)
            added.extend(a for a, _, _ in frags[1:])
        if added:
            starts.extend(added)
            starts.sort()
    return tuple(trace)


class _Search:
    def __init__(self, adj: Sequence[int], n: int, budget: int):
        self.adj = adj
        self.n = n
        self.budget = budget
        self.nodes = 0
        self.first_path = None
        self.first_traces = None
        self.first_lab = None
        self.first_cert = None
        self.best_path = None
        self.best_traces = None
        self.best_lab = None
        self.best_cert = None
        self.gens: list[tuple[int, ...]] = []

    def cert(self, lab):
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        out = []
        for v in lab:
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << pos[u]
            out.append(row)
        return tuple(out)

    def leaf(self, lab, path, traces):
        cert = self.cert(lab)
        if self.first_path is None:
            self.first_path = list(path)
            self.first_traces = list(traces)
            self.first_lab = lab
            self.first_cert = cert
            self.best_path = list(path)
            self.best_traces = list(traces)
            self.best_lab = lab
            self.best_cert = cert
            return None
        if traces == self.first_traces and cert == self.first_cert:
            self._add_gen(lab, self.first_lab)
            return _common(path, self.first_path)
        key = (traces, cert)
        best = (self.best_traces, self.best_cert)
        if key == best:
            self._add_gen(lab, self.best_lab)
            return _common(path, self.best_path)
        if key > best:
            self.best_path = list(path)
            self.best_traces = list(traces)
            self.best_lab = lab
            self.best_cert = cert
        return None

    def _add_gen(self, lab, target):
        gamma = [0] * self.n
        for a, b in zip(lab, target):
            gamma[a] = b
        gamma = tuple(gamma)
        if any(gamma[i] != i for i in range(self.n)):
            self.gens.append(gamma)

    def _stabilizer_orbits(self, fixed):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if all(g[v] == v for v in fixed):
                for v in range(self.n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return find

    def visit(self, lab, starts, cend, path, traces):
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded("canonical labeling budget exceeded", used=self.nodes, limit=self.budget)
        if len(starts) == self.n:
            return self.leaf(lab, path, traces)
        level = len(path)
        s = next(x for x in starts if cend[x] - x > 1)
        e = cend[s]
        cell = lab[s:e]
        tried: list[int] = []
        for v in cell:
            on_first = self.first_path is None or path == self.first_path[:level]
            if on_first and tried:
                find = self._stabilizer_orbits(path)
                rv = find(v)
                if any(find(w) == rv for w in tried):
                    continue
            lab2 = lab[:]
            i = lab2.index(v, s, e)
            lab2[s], lab2[i] = lab2[i], lab2[s]
            starts2 = starts[:]
            starts2.append(s + 1)
            starts2.sort()
            cend2 = dict(cend)
            cend2[s] = s + 1
            cend2[s + 1] = e
            t = (s, _refine(self.adj, lab2, starts2, cend2, [s]))
            traces2 = traces + [t]
            if self.best_traces is not None:
                ref = self.best_traces[: len(traces2)]
                if traces2 < ref:
                    tried.append(v)
                    continue
            jump = self.visit(lab2, starts2, cend2, path + [v], traces2)
            tried.append(v)
            if jump is not None and jump < level:
                return jump
        return None


def _common(a, b):
    c = 0
    for x, y in zip(a, b):
        if x != y:
            break
        c += 1
    return c


def canonical(
    g: Graph,
    colors: Sequence[int] | None = None,
    *,
    max_n: int = MAX_CANON_VERTICES,
    budget: int = 2_000_000,
) -> CanonicalForm:
    """Canonical form of ``g``, optionally respecting a vertex coloring.

    ``perm[v]`` is the canonical label of vertex ``v``; relabeling ``g`` by
    ``perm`` gives exactly ``canon[-1]`` as an adjacency tuple.
    """
    n = g.n
    if n > max_n:
        raise BudgetExceeded(f"canonical labeling supports at most {max_n} vertices, got {n}", limit=max_n)
    adj = g.adj
    if colors is None:
        colors = [0] * n
    order = sorted(range(n), key=lambda v: (colors[v], v))
    lab = list(order)
    starts = []
    cend = {}
    color_key = []
    i = 0
    while i < n:
        j = i
        while j < n and colors[lab[j]] == colors[lab[i]]:
            j += 1
        starts.append(i)
        cend[i] = j
        color_key.append((colors[lab[i]], j - i))
        i = j
    if n == 0:
        return CanonicalForm((0, (), ()), (), (), ())
    root_trace = _refine(adj, lab, starts, cend, list(starts))
    search = _Search(adj, n, budget)
    search.visit(lab, starts, cend, [], [root_trace])
    perm = [0] * n
    for pos, v in enumerate(search.best_lab):
        perm[v] = pos
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for gen in search.gens:
        for v in range(n):
            a, b = find(v), find(gen[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    orbits = tuple(find(v) for v in range(n))
    return CanonicalForm((n, tuple(color_key), search.best_cert), tuple(perm), orbits, tuple(search.gens))


def canonical_key(g: Graph) -> tuple:
    return canonical(g).canon


def canonical_graph(g: Graph) -> Graph:
    return canonical(g).graph()


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical(g).canon == canonical(h).canon


def automorphism_orbits(g: Graph) -> tuple[int, ...]:
    return canonical(g).orbits
