"""One structured report document per run, with a derived plain-text view."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import __version__, graph6
from .pattern import is_free
from .planar import is_planar


@dataclass
class Report:
    command: list[str]
    kind: str
    items: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    status: str = "PASS"  # PASS, FAIL, COMPLETE, COUNTEREXAMPLE or BUDGET
    version: str = __version__

    def to_dict(self) -> dict:
        return {
            "tool": "planturan",
            "version": self.version,
            "command": list(self.command),
            "kind": self.kind,
            "status": self.status,
            "notes": list(self.notes),
            "items": list(self.items),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def render_text(self) -> str:
        return render_text(self.to_dict())


def render_text(doc: dict) -> str:
    lines = [f"{doc['kind']}: {doc['status']}"]
    for item in doc["items"]:
        params = ", ".join(f"{k}={v}" for k, v in item.get("params", {}).items())
        head = f"  [{item.get('status', '-')}] {item.get('id', '')}({params})"
        if "expected" in item:
            head += f" expected {item['expected']}, computed {item.get('computed')}"
        elif "computed" in item:
            head += f" computed {item['computed']}"
        lines.append(head)
        if item.get("note"):
            lines.append(f"      note: {item['note']}")
        for w in item.get("witnesses", [])[:3]:
            lines.append(f"      witness {w}")
        extra = len(item.get("witnesses", [])) - 3
        if extra > 0:
            lines.append(f"      ... {extra} more witness(es)")
    for note in doc["notes"]:
        lines.append(f"note: {note}")
    return "\n".join(lines)


def revalidate(doc: dict) -> list[str]:
    """Replay every witness in a report; return a list of problems (empty when sound).

    Items whose params carry a ``pattern`` must have planar, pattern-free
    witnesses; items from exact computations (``value`` field) must also
    have witnesses with exactly that many edges.
    """
    problems = []
    for idx, item in enumerate(doc.get("items", [])):
        pattern = item.get("params", {}).get("pattern")
        value = item.get("value")
        if value is None and str(item.get("computed", "")).isdigit():
            value = int(item["computed"])
        for w in item.get("witnesses", []):
            try:
                g = graph6.decode(w)
            except ValueError as exc:
                problems.append(f"item {idx}: undecodable witness {w!r}: {exc}")
                continue
            if not is_planar(g):
                problems.append(f"item {idx}: witness {w} is not planar")
            if pattern and item.get("witness_role", "free") == "free" and not is_free(g, pattern):
                problems.append(f"item {idx}: witness {w} contains {pattern}")
            if value is not None and g.m != value:
                problems.append(f"item {idx}: witness {w} has {g.m} edges, claimed {value}")
    return problems
