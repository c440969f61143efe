"""Command-line interface.

Exit codes: 0 all PASS / complete, 1 FAIL or counterexample, 2 usage
error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import bounds, graph6
from .canon import canonical
from .enumerate import EnumerationConstraints, enumerate_graphs, enumerate_triangulations
from .errors import BudgetExceeded
from .extremal import ex_filter, ex_tri_bb, scan_conjecture, verify_corollary_tck, verify_theorem
from .family import FAMILIES, WITNESSES, ContractError, construct, contract_for, small_witness
from .graph import Graph
from .graph6 import FormatError
from .pattern import PatternSyntaxError, as_pattern, contains, image_edges
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(report: Report, args) -> int:
    print(report.to_json() if args.json else report.render_text())
    return {"PASS": EXIT_OK, "COMPLETE": EXIT_OK, "BUDGET": EXIT_BUDGET}.get(report.status, EXIT_FAIL)


def _read_hosts(source: str | None) -> list[Graph]:
    if source is None or source == "-":
        return graph6.read_graphs(sys.stdin.read().splitlines())
    path = Path(source)
    if path.exists():
        return graph6.read_graphs(path.read_text().splitlines())
    return [graph6.decode(source)]


# -- subcommands ------------------------------------------------------------


def cmd_construct(args) -> int:
    params = {k: getattr(args, k) for k in ("n", "k", "t", "l", "r", "m", "s") if getattr(args, k) is not None}
    notes = []
    if args.family in WITNESSES:
        if params:
            raise UsageError(f"witness {args.family!r} takes no parameters")
        w = WITNESSES[args.family]
        try:
            g = small_witness(args.family)
            checks, status = w.contract.checks(g), "PASS"
        except ContractError as exc:
            print(f"construct {args.family}: {exc}", file=sys.stderr)
            return EXIT_FAIL
        if w.note:
            notes.append(w.note)
    elif args.family in FAMILIES:
        g = construct(args.family, **params)
        checks = contract_for(args.family, **params).checks(g)
        status = "PASS" if all(c[3] for c in checks) else "FAIL"
        notes.extend(FAMILIES[args.family].notes)
    else:
        known = sorted(FAMILIES) + sorted(WITNESSES)
        raise UsageError(f"unknown family {args.family!r}; known: {', '.join(known)}")
    print(graph6.encode(g))
    for name, expected, actual, ok in checks:
        print(f"  {'ok ' if ok else 'BAD'} {name}: expected {expected}, got {actual}", file=sys.stderr)
    for note in notes:
        print(f"  note: {note}", file=sys.stderr)
    return EXIT_OK if status == "PASS" else EXIT_FAIL


def cmd_check(args) -> int:
    pat = as_pattern(args.pattern)
    report = Report(command=args.argv, kind="check")
    any_copy = False
    for g in _read_hosts(args.host):
        hit = contains(g, pat)
        item = {"id": "check", "params": {"pattern": pat.source_text, "n": g.n, "m": g.m},
                "computed": "free" if hit is None else "contains", "free": hit is None,
                "status": "PASS" if hit is None else "FAIL",
                "witnesses": [graph6.encode(g)], "witness_role": "host"}
        if hit is not None:
            any_copy = True
            item["copy"] = {str(k): v for k, v in sorted(hit.items())}
            item["copy_edges"] = image_edges(pat.target, hit)
        report.items.append(item)
    if not report.items:
        raise UsageError("no host graph given")
    report.status = "FAIL" if any_copy else "PASS"
    return _emit(report, args)


def cmd_ex(args) -> int:
    start = time.perf_counter()
    if args.method == "filter":
        res = ex_filter(args.n, args.pattern)
    else:
        res = ex_tri_bb(args.n, args.pattern, jobs=args.jobs)
    item = {"id": "ex", "params": {"n": args.n, "pattern": res.pattern, "method": res.method},
            "computed": res.value, "value": res.value, "status": "PASS", "witnesses": res.witnesses,
            "runtime": round(time.perf_counter() - start, 3), "stats": res.stats}
    report = Report(command=args.argv, kind="ex", items=[item], status="COMPLETE")
    return _emit(report, args)


def cmd_enumerate(args) -> int:
    forbid = list(args.forbid or [])
    if args.then_filter:
        for f in args.then_filter:
            forbid.append(f[:-5] if f.endswith("-free") else f)
    for f in forbid:
        as_pattern(f)
    if args.cls == "triangulations":
        graphs = enumerate_triangulations(args.n, jobs=args.jobs)
        c = EnumerationConstraints(n=args.n, min_degree=args.min_degree, max_degree=args.max_degree,
                                   regular=args.regular, min_edges=args.min_edges, max_edges=args.max_edges,
                                   connected=args.connected, forbidden=tuple(forbid))
        graphs = [g for g in graphs if c.accepts(g)]
    else:
        regular = 3 if args.cls == "cubic" else args.regular
        if args.cls == "cubic" and args.regular not in (None, 3):
            raise UsageError("--class cubic fixes --regular 3")
        c = EnumerationConstraints(n=args.n, min_degree=args.min_degree, max_degree=args.max_degree,
                                   regular=regular, min_edges=args.min_edges, max_edges=args.max_edges,
                                   planar=args.planar, connected=args.connected, forbidden=tuple(forbid))
        graphs = enumerate_graphs(c)
    for g in graphs:
        print(graph6.encode(g))
    print(f"{len(graphs)} graph(s)", file=sys.stderr)
    return EXIT_OK


def _verify_report(args, rep) -> Report:
    status = "BUDGET" if rep.partial else ("PASS" if rep.passed else "FAIL")
    return Report(command=args.argv, kind=f"verify {rep.target}", items=[i.to_dict() for i in rep.items],
                  notes=rep.notes, status=status)


def cmd_verify(args) -> int:
    params = {k: getattr(args, k) for k in ("k", "t") if getattr(args, k) is not None}
    if args.theorem in ("cor.tck", "cor1"):
        if "k" not in params:
            raise UsageError("--theorem cor.tck needs --k")
        rep = verify_corollary_tck(params["k"], args.from_n, args.to_n, t=params.get("t", 1),
                                   method=args.method, jobs=args.jobs)
    else:
        if args.theorem not in bounds.REGISTRY:
            raise UsageError(f"unknown theorem {args.theorem!r}; known: {', '.join(sorted(bounds.REGISTRY))}, cor.tck")
        rep = verify_theorem(args.theorem, args.from_n, args.to_n, params=params, method=args.method, jobs=args.jobs)
    return _emit(_verify_report(args, rep), args)


def cmd_scan(args) -> int:
    res = scan_conjecture(args.conjecture, args.from_n, args.to_n, k_from=args.k_from, k_to=args.k_to,
                          method=args.method, jobs=args.jobs)
    items = [{"id": res.conjecture,
              "params": {**{k: v for k, v in c.items() if k in ("n", "k")},
                         "pattern": f"C{c['k']}" if "k" in c else "2C4"},
              "computed": c["value"], "expected": c.get("bound", c.get("conjectured")),
              "status": "PASS" if c.get("holds", c.get("relation") == "equal") else "FAIL",
              "note": c.get("relation", ""), "witnesses": c.get("witnesses", [])}
             for c in res.checked]
    if res.partial:
        status = "BUDGET"
    elif res.counterexample is not None:
        status = "COUNTEREXAMPLE"
    else:
        status = "COMPLETE"
    report = Report(command=args.argv, kind=f"scan {res.conjecture}", items=items, notes=res.notes, status=status)
    return _emit(report, args)


def cmd_bound(args) -> int:
    params = {k: getattr(args, k) for k in ("n", "k", "t") if getattr(args, k) is not None}
    f = bounds.get(args.id)
    value = bounds.eval_bound(args.id, **params)
    print(f"{f.id} [{f.kind}] {f.statement}")
    print(f"  value at {params}: {value}")
    return EXIT_OK


def cmd_canon(args) -> int:
    for g in _read_hosts(args.host):
        print(graph6.encode(canonical(g).graph()))
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--json", action="store_true", help="print the structured report instead of text")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (results do not depend on this)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="planturan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a family member (graph6 on stdout, contract on stderr)")
    p.add_argument("--family", required=True)
    for name in ("n", "k", "t", "l", "r", "m", "s"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="test pattern freeness of host graph(s)")
    p.add_argument("--host", help="graph6 string, file of graph6 lines, or - for stdin (default)")
    p.add_argument("--pattern", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ex", help="exact planar Turán number")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--pattern", required=True)
    p.add_argument("--method", choices=("filter", "tri-bb"), default="tri-bb")
    _add_common(p)
    p.set_defaults(func=cmd_ex)

    p = sub.add_parser("enumerate", help="isomorph-free generation (graph6 on stdout)")
    p.add_argument("--class", dest="cls", choices=("graphs", "triangulations", "cubic"), default="graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-degree", type=int, default=0)
    p.add_argument("--max-degree", type=int)
    p.add_argument("--regular", type=int)
    p.add_argument("--min-edges", type=int, default=0)
    p.add_argument("--max-edges", type=int)
    p.add_argument("--planar", action="store_true")
    p.add_argument("--connected", action="store_true")
    p.add_argument("--forbid", action="append", metavar="PATTERN")
    p.add_argument("--then-filter", action="append", metavar="PATTERN-free")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check a registered formula against exact values")
    p.add_argument("--theorem", required=True)
    p.add_argument("--from", dest="from_n", type=int, required=True)
    p.add_argument("--to", dest="to_n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--method", choices=("auto", "filter", "tri-bb"), default="auto")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="search a conjecture for counterexamples")
    p.add_argument("--conjecture", required=True, choices=("weak", "c4"))
    p.add_argument("--from", dest="from_n", type=int, required=True)
    p.add_argument("--to", dest="to_n", type=int, required=True)
    p.add_argument("--k-from", type=int, default=3)
    p.add_argument("--k-to", type=int)
    p.add_argument("--method", choices=("auto", "filter", "tri-bb"), default="auto")
    _add_common(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("bound", help="evaluate a registered formula exactly")
    p.add_argument("--id", required=True)
    for name in ("n", "k", "t"):
        p.add_argument(f"--{name}", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("canon", help="canonically relabel graph6 input")
    p.add_argument("--host")
    p.set_defaults(func=cmd_canon)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    args.argv = ["planturan", *argv]
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, PatternSyntaxError, FormatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
