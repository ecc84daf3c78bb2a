import io
import json
import subprocess
import sys

import pytest

from bicyclic import verify
from bicyclic.cli import (
    basic_open_from_json,
    cli_run,
    element_from_json,
    iso_from_json,
    point_class_from_json,
    to_json,
    variant_from_json,
)
from bicyclic.core import Element, Variant
from bicyclic.morphisms import canonical_iso, iso_pad
from bicyclic.topology import basic_nbhds, classify, full_ray


def run(*argv):
    buf = io.StringIO()
    code = cli_run(list(argv), buf)
    return code, buf.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    assert code == 0, text
    return json.loads(text)


def test_mul():
    assert run_json("mul", "--lhs", "2,5", "--rhs", "3,1") == {"a": 2, "b": 3}


def test_negative_values_parse():
    assert run_json("smul", "--variant", "0,0", "--lhs", "-2,-5", "--rhs", "-4,-1") == {"a": 3, "b": 3}
    assert run_json("inv", "--elem=-3,4") == {"a": 4, "b": -3}


def test_witness_variant():
    out = run_json("witness", "--variant", "0,0", "--gens", "(-1,-2);(0,-3)")
    assert out["witness"] == {"a": 0, "b": -4}
    assert out["floors"] == {"xstar": 1, "ystar": -3}


def test_witness_plain():
    out = run_json("witness", "--gens", "(0,1);(2,-1)")
    assert out["witness"] == {"a": -2, "b": -2}


def test_topo_classify():
    assert run_json("topo", "classify", "--point", "-2,-5") == {"kind": "ray", "base": {"a": 0, "b": -3}, "index": 2}
    assert run_json("topo", "classify", "--point", "3,-7")["kind"] == "isolated"


def test_green_and_brute_agree():
    for rel in "RLHDJ":
        fast = run_json("green", "--rel", rel, "--variant", "0,0", "--lhs", "3,-8", "--rhs", "5,-8")
        slow = run_json("green", "--rel", rel, "--variant", "0,0", "--lhs", "3,-8", "--rhs", "5,-8", "--brute", "--window", "-9,9")
        assert fast == slow


def test_aut_and_iso():
    out = run_json("aut", "--k", "3", "--apply", "1,2")
    assert out["image"] == {"a": 4, "b": 5}
    out = run_json("iso", "--variant", "2,-1", "--apply", "1,1")
    assert out["image"] == {"a": 0, "b": 3}
    assert iso_from_json(out) == canonical_iso(2, -1)


def test_idem_and_closure():
    out = run_json("idem", "--variant", "2,-1", "--count", "3")
    assert [e["element"] for e in out["idempotents"]] == [{"a": -1, "b": 2}, {"a": 0, "b": 3}, {"a": 1, "b": 4}]
    out = run_json("closure", "--gens", "(0,1);(2,-1)", "--guard", "-3,6")
    assert {"a": 1, "b": -1} in out["found"] and {"a": 3, "b": 1} in out["found"]


def test_lint_and_certify():
    out = run_json("topo", "lint", "--window", "-9,9", "--non-isolated", "(5,-9)")
    assert [v["point"] for v in out["violations"]] == [{"a": 5, "b": -9}]
    assert run_json("topo", "lint", "--window", "-4,4")["violations"] == []
    out = run_json("topo", "certify", "--x", "-2,-5", "--y", "-4,-1")
    assert out["product"] == {"a": 3, "b": 3}
    assert basic_open_from_json(out["U"]) == full_ray((0, -3))


def test_json_round_trips():
    for x in [Element(-3, 7), Element(0, 0)]:
        assert element_from_json(to_json(x)) == x
    assert variant_from_json(to_json(Variant(2, -1))) == Variant(2, -1)
    for p in [(3, -7), (-2, -5), (0, 0)]:
        assert point_class_from_json(to_json(classify(p))) == classify(p)
    for u in basic_nbhds((-1, -3), 3) + basic_nbhds((4, 1), 1) + [full_ray((-2, 0))]:
        assert basic_open_from_json(json.loads(json.dumps(to_json(u)))) == u
    iso = iso_pad("left", 1, 2)
    assert iso_from_json(to_json(iso)) == iso


def test_domain_error_exit_code():
    code, text = run("green", "--rel", "D", "--lhs", "0,0", "--rhs", "1,1", "--brute", "--window", "-20,20")
    assert code == 1
    assert json.loads(text)["error"] == "WindowTooSmall"
    code, text = run("idem", "--variant", "0,0", "--count", "0")
    assert code == 1 and "error" in json.loads(text)


def test_usage_error_exit_code(capsys):
    code, _ = run("mul", "--lhs", "2", "--rhs", "1,1")
    assert code == 2
    assert "--lhs" in capsys.readouterr().err
    assert run("frobnicate")[0] == 2


def test_eggbox_dot_is_deterministic():
    a = run("eggbox", "--variant", "1,-1", "--window", "-2,2")
    b = run("eggbox", "--variant", "1,-1", "--window", "-2,2")
    assert a == b and a[0] == 0
    assert a[1].startswith("digraph") and "cluster_D0" in a[1]


def test_eggbox_json_cells_cover_window():
    out = run_json("eggbox", "--variant", "0,0", "--window", "-1,1", "--format", "json")
    cells = [c for grid in out["d_classes"] for row in grid for c in row if c is not None]
    assert len(cells) == 9


def test_verify_single_suite():
    code, text = run("verify", "--suite", "difference")
    assert code == 0
    assert text.startswith("[PASS]") and "difference" in text


def test_verify_failure_exit_code(monkeypatch):
    monkeypatch.setitem(verify.SUITES, "difference", lambda hw: verify.SuiteResult("difference", False, {}))
    code, text = run("verify", "--suite", "difference", "--format", "json")
    assert code == 3
    assert json.loads(text)["passed"] is False


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "bicyclic", "mul", "--lhs", "2,5", "--rhs", "3,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"a": 2, "b": 3}
