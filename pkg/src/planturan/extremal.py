"""Exact planar Turán numbers at small order, theorem checks and conjecture scans.

Two independent methods compute ex_P(n, H):

* ``filter``: enumerate every H-free planar graph on n vertices (one per
  isomorphism class) and take the largest.
* ``tri-bb``: every planar graph on n >= 3 vertices is a spanning subgraph
  of some triangulation on the same vertex set, so ex_P(n, H) is the maximum,
  over triangulations T, of the largest H-free spanning subgraph of T.  The
  latter is a minimum hitting set of the copies of H in T, found by
  branch-and-bound on the edges of one copy at a time.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import bounds, graph6
from .canon import canonical
from .enumerate import EnumerationConstraints, enumerate_graphs, enumerate_triangulations
from .errors import BudgetExceeded
from .graph import Graph
from .pattern import Pattern, as_pattern, contains, image_edges, is_free
from .planar import is_planar, is_triangulation

DEFAULT_BB_BUDGET = 20_000_000
MAX_FILTER_N = 9


@dataclass
class ExtremalResult:
    n: int
    pattern: str
    value: int
    witnesses: list[str]
    method: str
    stats: dict = field(default_factory=dict)

    def witness_graphs(self) -> list[Graph]:
        return [graph6.decode(w) for w in self.witnesses]

    def validate(self) -> bool:
        """Every witness is planar, pattern-free and has exactly ``value`` edges."""
        for g in self.witness_graphs():
            if g.n != self.n or g.m != self.value or not is_planar(g) or not is_free(g, self.pattern):
                return False
        return self.n < 3 or self.value <= 3 * self.n - 6

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "pattern": self.pattern,
            "value": self.value,
            "witnesses": list(self.witnesses),
            "method": self.method,
            "stats": dict(self.stats),
        }


# -- branch and bound -----------------------------------------------------


class _HittingSearch:
    """Largest pattern-free spanning subgraphs of one host graph."""

    def __init__(self, host: Graph, pat: Pattern, best: int, collect: bool, budget: int):
        self.host = host
        self.pat = pat
        self.edges = host.edges()
        self.index = {e: i for i, e in enumerate(self.edges)}
        self.best = best
        self.collect = collect
        self.budget = budget
        self.nodes = 0
        self.seen: set[int] = set()
        self.found: dict[tuple, Graph] = {}

    def _graph(self, deleted: int) -> Graph:
        return self.host.remove_edges(self.edges[i] for i in range(len(self.edges)) if deleted >> i & 1)

    def _copy(self, g: Graph) -> list[int] | None:
        hit = contains(g, self.pat)
        if hit is None:
            return None
        return [self.index[e] for e in image_edges(self.pat.target, hit)]

    def _packing(self, g: Graph, first: list[int], need: int) -> int:
        """Edge-disjoint copies found greedily (a lower bound on deletions), capped at ``need``."""
        count = 1
        g = g.remove_edges(self.edges[i] for i in first)
        while count < need:
            c = self._copy(g)
            if c is None:
                break
            count += 1
            g = g.remove_edges(self.edges[i] for i in c)
        return count

    def _pruned(self, kept: int) -> bool:
        return kept < self.best if self.collect else kept <= self.best

    def run(self, deleted: int = 0):
        if deleted in self.seen:
            return
        self.seen.add(deleted)
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded("branch-and-bound budget exceeded", used=self.nodes, limit=self.budget)
        kept = len(self.edges) - deleted.bit_count()
        if self._pruned(kept):
            return
        g = self._graph(deleted)
        copy = self._copy(g)
        if copy is None:
            if kept > self.best:
                self.best = kept
                self.found.clear()
            if self.collect or not self.found:
                cf = canonical(g)
                self.found.setdefault(cf.canon, cf.graph())
            return
        # kept - need < best (or <= best) makes this node useless
        need = kept - self.best + (0 if self.collect else 1)
        if need >= 1 and self._packing(g, copy, need + 1) > need:
            return
        for i in copy:
            self.run(deleted | (1 << i))


def _greedy_free(host: Graph, pat: Pattern) -> int:
    g = host
    while True:
        hit = contains(g, pat)
        if hit is None:
            return g.m
        g = g.remove_edges(image_edges(pat.target, hit)[:1])


def max_free_subgraph_edges(
    t: Graph, p: Pattern | str, *, budget: int = DEFAULT_BB_BUDGET, witnesses: bool = False
):
    """Largest edge count of a ``p``-free spanning subgraph of the triangulation ``t``.

    With ``witnesses=True`` returns ``(value, graphs)`` where ``graphs`` lists
    every such subgraph up to isomorphism.
    """
    if not is_triangulation(t):
        raise ValueError("max_free_subgraph_edges expects a triangulation")
    return _max_free(t, as_pattern(p), budget=budget, witnesses=witnesses)


def _max_free(host: Graph, pat: Pattern, *, budget: int, witnesses: bool):
    lower = _greedy_free(host, pat)
    search = _HittingSearch(host, pat, lower - 1 if witnesses else lower, witnesses, budget)
    search.run()
    if not witnesses:
        return search.best
    return search.best, [search.found[k] for k in sorted(search.found)]


def _bb_chunk(args):
    hosts, pat_text, best, budget = args
    pat = as_pattern(pat_text)
    found: dict[tuple, Graph] = {}
    nodes = 0
    for adj in hosts:
        host = Graph(len(adj), adj)
        s = _HittingSearch(host, pat, best - 1, True, budget - nodes)
        s.run()
        nodes += s.nodes
        if s.best > best:
            best = s.best
            found = {}
        if s.best == best:
            found.update(s.found)
    return best, found, nodes


def ex_tri_bb(n: int, p: Pattern | str, *, jobs: int = 1, budget: int = DEFAULT_BB_BUDGET) -> ExtremalResult:
    """Exact ex_P(n, p) via branch-and-bound over all triangulations on n vertices."""
    pat = as_pattern(p)
    if n < 3:
        raise ValueError("ex_tri_bb needs n >= 3 (use ex_filter for smaller n)")
    start = time.perf_counter()
    tris = enumerate_triangulations(n, jobs=jobs)
    # a common starting bound lets every chunk prune from the outset
    best = max(_greedy_free(t, pat) for t in tris)
    hosts = [t.adj for t in tris]
    if jobs > 1 and len(hosts) > 1:
        size = max(1, -(-len(hosts) // (jobs * 4)))
        chunks = [(hosts[i:i + size], pat.source_text, best, budget) for i in range(0, len(hosts), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_bb_chunk, chunks))
    else:
        parts = [_bb_chunk((hosts, pat.source_text, best, budget))]
    value = max(b for b, _, _ in parts)
    found: dict[tuple, Graph] = {}
    for b, f, _ in parts:
        if b == value:
            found.update(f)
    nodes = sum(k for _, _, k in parts)
    if nodes > budget:
        raise BudgetExceeded("branch-and-bound budget exceeded", used=nodes, limit=budget)
    return ExtremalResult(
        n=n,
        pattern=pat.source_text,
        value=value,
        witnesses=[graph6.encode(found[k]) for k in sorted(found)],
        method="tri-bb",
        stats={"triangulations": len(tris), "nodes": nodes, "seconds": round(time.perf_counter() - start, 3)},
    )


def ex_filter(n: int, p: Pattern | str, *, budget: int = 200_000_000) -> ExtremalResult:
    """Exact ex_P(n, p) by enumerating every p-free planar graph on n vertices."""
    pat = as_pattern(p)
    if n > MAX_FILTER_N:
        raise BudgetExceeded(f"filter method supports n <= {MAX_FILTER_N}, got {n}", limit=MAX_FILTER_N)
    start = time.perf_counter()
    graphs = enumerate_graphs(EnumerationConstraints(n=n, planar=True, forbidden=(pat.source_text,)), budget=budget)
    value = max(g.m for g in graphs)
    wit = [g for g in graphs if g.m == value]
    return ExtremalResult(
        n=n,
        pattern=pat.source_text,
        value=value,
        witnesses=[graph6.encode(g) for g in wit],
        method="filter",
        stats={"graphs": len(graphs), "seconds": round(time.perf_counter() - start, 3)},
    )


def ex_exact(n: int, p: Pattern | str, method: str = "auto", *, jobs: int = 1) -> ExtremalResult:
    """Dispatch to a method; ``auto`` prefers tri-bb and falls back to filter for n < 3."""
    if method == "auto":
        method = "tri-bb" if n >= 3 else "filter"
    if method == "filter":
        return ex_filter(n, p)
    if method == "tri-bb":
        return ex_tri_bb(n, p, jobs=jobs)
    raise ValueError(f"unknown method {method!r}")


# -- theorem verification -------------------------------------------------


@dataclass
class CheckItem:
    id: str
    params: dict
    expected: str
    computed: str
    status: str  # PASS, FAIL or BUDGET
    witnesses: list[str] = field(default_factory=list)
    runtime: float = 0.0
    stats: dict = field(default_factory=dict)
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "params": dict(self.params),
            "expected": self.expected,
            "computed": self.computed,
            "status": self.status,
            "witnesses": list(self.witnesses),
            "runtime": round(self.runtime, 3),
            "stats": dict(self.stats),
            "note": self.note,
        }


@dataclass
class VerificationReport:
    target: str
    items: list[CheckItem] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    partial: bool = False

    @property
    def passed(self) -> bool:
        return bool(self.items) and all(i.status == "PASS" for i in self.items) and not self.partial

    def failures(self) -> list[CheckItem]:
        return [i for i in self.items if i.status != "PASS"]

    def to_dict(self) -> dict:
        return {
            "target": self.target,
            "passed": self.passed,
            "partial": self.partial,
            "notes": list(self.notes),
            "items": [i.to_dict() for i in self.items],
        }


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


_RELATION = {"exact": "=", "upper": "<=", "lower": ">="}


# theorem id -> pattern text builder (params -> pattern)
_PATTERNS = {
    "dowden.c3": lambda **_: "C3",
    "dowden.k4": lambda **_: "K4",
    "dowden.c4": lambda **_: "C4",
    "dowden.c5": lambda **_: "C5",
    "dowden.c5b": lambda **_: "C5",
    "c6": lambda **_: "C6",
    "main.prism": lambda **_: "prism",
    "tc3": lambda t=2, **_: f"{t}C3",
    "prop.c3plus": lambda **_: "C3^+",
    "bipartite": lambda t=3, **_: f"K2,{t}",
    "conj.c4": lambda **_: "2C4",
}

_CONSTRUCTIONS = {"lemma2ck", "lemma3"}


def verify_theorem(
    id: str,
    n_from: int,
    n_to: int,
    *,
    params: dict | None = None,
    method: str = "auto",
    jobs: int = 1,
) -> VerificationReport:
    """Compare exact small-order values (or construction certificates) against a formula.

    Each n yields one item.  A formula evaluated outside its registered
    range is still checked, and the item notes the range.
    """
    formula = bounds.get(id)
    params = dict(params or {})
    report = VerificationReport(target=id)
    report.notes.extend(formula.notes)
    if id in _CONSTRUCTIONS:
        return _verify_construction(formula, n_from, n_to, params, report)
    if id not in _PATTERNS:
        raise ValueError(f"{id!r} has no exact verifier (reference-only formula)")
    pattern = _PATTERNS[id](**params)
    fparams = {k: v for k, v in params.items() if k in formula.params}
    if "t" in formula.params:
        fparams.setdefault("t", 2 if id == "tc3" else 3)
    for n in range(n_from, n_to + 1):
        args = {**fparams, "n": n}
        expected = formula.evaluate(**args)
        in_range = formula.in_range(**args)
        note = "" if in_range else f"outside registered range ({formula.range_text})"
        start = time.perf_counter()
        try:
            res = ex_exact(n, pattern, method, jobs=jobs)
        except BudgetExceeded as exc:
            report.items.append(CheckItem(id, args, _fmt(expected), "unknown", "BUDGET",
                                          runtime=time.perf_counter() - start, note=str(exc)))
            report.partial = True
            break
        ok = formula.holds(res.value, **args)
        extra = []
        if id == "prop.c3plus":
            base = ex_exact(n, "C3", method, jobs=jobs)
            ok = ok and base.value == res.value
            extra.append(f"ex(n, C3) = {base.value}")
        if id == "main.prism" and 6 <= n <= 9:
            every = all(not is_free(t, "prism") for t in enumerate_triangulations(n))
            ok = ok and every
            extra.append("every triangulation contains the prism" if every else "a prism-free triangulation exists")
        report.items.append(CheckItem(
            id, {**args, "pattern": pattern},
            f"{_RELATION[formula.kind]} {_fmt(expected)}",
            str(res.value),
            "PASS" if ok else "FAIL",
            witnesses=res.witnesses,
            runtime=time.perf_counter() - start,
            stats={**res.stats, "method": res.method},
            note="; ".join(x for x in [note, *extra] if x),
        ))
    return report


def _verify_construction(formula, n_from, n_to, params, report) -> VerificationReport:
    from .family import construct

    k = params.get("k")
    if k is None:
        raise ValueError(f"{formula.id} needs parameter k")
    family = "two_ck_lower" if formula.id == "lemma2ck" else "two_ck_lower_improved"
    for n in range(n_from, n_to + 1):
        args = {"n": n, "k": k}
        if not formula.in_range(**args):
            continue
        start = time.perf_counter()
        g = construct(family, n=n, k=k)
        expected = formula.evaluate(**args)
        free = is_free(g, f"2C{k}")
        ok = g.m == expected and free and is_planar(g)
        report.items.append(CheckItem(
            formula.id, args, f"construction with {_fmt(expected)} edges, planar, 2C{k}-free",
            f"{g.m} edges, {'free' if free else 'contains 2C' + str(k)}",
            "PASS" if ok else "FAIL",
            witnesses=[graph6.encode(g)],
            runtime=time.perf_counter() - start,
            note="lower bound certified by construction",
        ))
    return report


def verify_corollary_tck(k: int, n_from: int, n_to: int, *, t: int = 1, method: str = "auto",
                         jobs: int = 1) -> VerificationReport:
    """Check ex_P(n, tC_k U C_k^+) = ex_P(n, (t+1)C_k) by computing both sides."""
    left = f"{t}C{k} U C{k}^+" if t > 1 else f"C{k} U C{k}^+"
    right = f"{t + 1}C{k}"
    report = VerificationReport(target=f"cor.tck(k={k}, t={t})")
    for n in range(n_from, n_to + 1):
        start = time.perf_counter()
        try:
            a = ex_exact(n, left, method, jobs=jobs)
            b = ex_exact(n, right, method, jobs=jobs)
        except BudgetExceeded as exc:
            report.items.append(CheckItem(report.target, {"n": n}, "equal", "unknown", "BUDGET",
                                          runtime=time.perf_counter() - start, note=str(exc)))
            report.partial = True
            break
        report.items.append(CheckItem(
            report.target, {"n": n, "k": k, "t": t},
            f"ex(n, {left}) = ex(n, {right})",
            f"{a.value} vs {b.value}",
            "PASS" if a.value == b.value else "FAIL",
            witnesses=a.witnesses,
            runtime=time.perf_counter() - start,
            stats={"left": a.stats, "right": b.stats},
        ))
    return report


# -- conjecture scans -------------------------------------------------------


@dataclass
class ScanResult:
    conjecture: str
    checked: list[dict] = field(default_factory=list)
    counterexample: dict | None = None
    partial: bool = False
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "conjecture": self.conjecture,
            "counterexample": self.counterexample,
            "partial": self.partial,
            "checked": list(self.checked),
            "notes": list(self.notes),
        }


def scan_conjecture(
    id: str,
    n_from: int,
    n_to: int,
    *,
    k_from: int = 3,
    k_to: int | None = None,
    method: str = "auto",
    jobs: int = 1,
) -> ScanResult:
    """Exact values against a conjectured formula; stops at the first violation.

    ``weak`` compares ex_P(n, C_k) with (3 - 1/(k-2))n - 4 over k_from <= k <= min(n, k_to).
    ``c4`` compares ex_P(n, 2C_4) with 5n/2 - (5+r)/2 and records whether
    the computed value is equal to, below or above the conjectured value.
    """
    if id in ("weak", "conj.weak"):
        out = ScanResult("conj.weak")
        for n in range(n_from, n_to + 1):
            for k in range(k_from, min(n, k_to if k_to is not None else n) + 1):
                bound = bounds.eval_bound("conj.weak", n=n, k=k)
                try:
                    res = ex_exact(n, f"C{k}", method, jobs=jobs)
                except BudgetExceeded as exc:
                    out.partial = True
                    out.notes.append(f"budget exceeded at n={n}, k={k}: {exc}")
                    return out
                entry = {"n": n, "k": k, "value": res.value, "bound": _fmt(bound),
                         "holds": res.value <= bound, "method": res.method}
                out.checked.append(entry)
                if res.value > bound:
                    out.counterexample = {**entry, "witness": res.witnesses[0]}
                    return out
        return out
    if id in ("c4", "conj.c4"):
        out = ScanResult("conj.c4")
        for n in range(n_from, n_to + 1):
            conj = bounds.eval_bound("conj.c4", n=n)
            try:
                res = ex_exact(n, "2C4", method, jobs=jobs)
            except BudgetExceeded as exc:
                out.partial = True
                out.notes.append(f"budget exceeded at n={n}: {exc}")
                return out
            relation = "equal" if res.value == conj else ("below" if res.value < conj else "above")
            entry = {"n": n, "value": res.value, "conjectured": _fmt(conj), "relation": relation,
                     "method": res.method, "witnesses": res.witnesses}
            out.checked.append(entry)
            if res.value != conj and out.counterexample is None:
                out.counterexample = {**entry, "witness": res.witnesses[0]}
        return out
    raise ValueError(f"unknown conjecture {id!r}; known: weak, c4")
