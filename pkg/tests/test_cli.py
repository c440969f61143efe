from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from planturan import graph6
from planturan.cli import main
from planturan.report import revalidate


def run(argv, stdin: str = "", monkeypatch=None, capsys=None):
    if monkeypatch is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr() if capsys is not None else None
    return code, out


def test_ex_filter_report(capsys):
    code, out = run(["ex", "--n", "6", "--pattern", "2C3", "--method", "filter", "--json"], capsys=capsys)
    doc = json.loads(out.out)
    assert code == 0 and doc["items"][0]["value"] == 11
    assert doc["command"][:2] == ["planturan", "ex"]
    assert revalidate(doc) == []


def test_verify_pass_and_fail_exit_codes(capsys):
    code, out = run(["verify", "--theorem", "main.prism", "--from", "6", "--to", "7", "--json"], capsys=capsys)
    assert code == 0 and json.loads(out.out)["status"] == "PASS"
    code, out = run(["verify", "--theorem", "dowden.k4", "--from", "4", "--to", "5", "--json"], capsys=capsys)
    doc = json.loads(out.out)
    assert code == 1 and doc["status"] == "FAIL"
    assert [i["computed"] for i in doc["items"]] == ["5", "8"]
    assert any("n = 6" in n for n in doc["notes"])
    assert revalidate(doc) == []


def test_improved_bound_report_carries_block_note(capsys):
    code, out = run(["verify", "--theorem", "lemma3", "--from", "18", "--to", "20", "--k", "7", "--json"],
                    capsys=capsys)
    doc = json.loads(out.out)
    assert code == 0 and any("3m-4" in n for n in doc["notes"])


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["bogus"]) == 2
    assert main(["ex", "--n", "6", "--pattern", "2X3"]) == 2
    assert main(["construct", "--family", "nope"]) == 2
    assert main(["verify", "--theorem", "nope", "--from", "4", "--to", "5"]) == 2
    assert main(["check", "--host", "B~", "--pattern", "C3"]) == 2
    err = capsys.readouterr().err
    assert "error" in err


def test_budget_exit_code(capsys):
    assert main(["ex", "--n", "13", "--pattern", "C3"]) == 3
    assert main(["ex", "--n", "10", "--pattern", "C3", "--method", "filter"]) == 3


def test_construct_then_check(monkeypatch, capsys):
    code, out = run(["construct", "--family", "q", "--k", "3", "--l", "0"], capsys=capsys)
    assert code == 0
    g6 = out.out.strip()
    assert graph6.decode(g6).n == 14
    code, out = run(["check", "--pattern", "prism", "--json"], stdin=g6 + "\n", monkeypatch=monkeypatch,
                    capsys=capsys)
    doc = json.loads(out.out)
    assert code == 0 and doc["items"][0]["free"] is True


def test_check_reports_copy(capsys):
    code, out = run(["check", "--host", "Bw", "--pattern", "C3", "--json"], capsys=capsys)
    doc = json.loads(out.out)
    assert code == 1 and doc["items"][0]["copy_edges"]


def test_construct_witness_and_failing_witness(capsys):
    code, out = run(["construct", "--family", "j"], capsys=capsys)
    assert code == 0 and graph6.decode(out.out.strip()).m == 25
    code, out = run(["construct", "--family", "o7_prime"], capsys=capsys)
    assert code == 1 and "no admissible edge completion" in out.err


def test_construct_contract_failure_is_nonzero(capsys):
    code, out = run(["construct", "--family", "hex", "--k", "2", "--r", "1"], capsys=capsys)
    assert code == 1 and "BAD K2,3-free" in out.err


def test_enumerate_classes(capsys):
    code, out = run(["enumerate", "--class", "graphs", "--n", "8", "--regular", "3", "--planar",
                     "--then-filter", "K4-free"], capsys=capsys)
    assert code == 0 and len(out.out.split()) == 3
    code, out = run(["enumerate", "--class", "triangulations", "--n", "8"], capsys=capsys)
    assert len(out.out.split()) == 14
    code, out = run(["enumerate", "--class", "cubic", "--n", "6"], capsys=capsys)
    assert len(out.out.split()) == 2


def test_scan_report(capsys):
    code, out = run(["scan", "--conjecture", "weak", "--from", "3", "--to", "6", "--json"], capsys=capsys)
    doc = json.loads(out.out)
    assert code == 0 and doc["status"] == "COMPLETE" and len(doc["items"]) == 10
    assert revalidate(doc) == []


def test_bound_and_canon(monkeypatch, capsys):
    code, out = run(["bound", "--id", "tc3", "--n", "10", "--t", "2"], capsys=capsys)
    assert code == 0 and "20" in out.out
    code, out = run(["canon"], stdin="Dhc\n", monkeypatch=monkeypatch, capsys=capsys)
    assert code == 0 and graph6.decode(out.out.strip()).m == 5


def test_text_rendering(capsys):
    code, out = run(["verify", "--theorem", "tc3", "--from", "7", "--to", "7"], capsys=capsys)
    assert code == 0 and out.out.startswith("verify tc3: PASS")


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "planturan", "bound", "--id", "dowden.c3", "--n", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "6" in proc.stdout


def test_revalidate_catches_tampering():
    doc = {"items": [{"params": {"pattern": "C3"}, "value": 3, "witnesses": ["Bw"]}]}
    problems = revalidate(doc)
    assert any("contains C3" in p for p in problems)
