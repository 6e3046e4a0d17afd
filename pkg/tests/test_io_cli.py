from __future__ import annotations

import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given

from conftest import hard_graphs, subcubic_graphs
from deltamin.cli import analyse, corpus_text, main
from deltamin.constructions import complete, petersen
from deltamin.graph import DegreeExceeded, Graph
from deltamin.graph6 import MalformedGraph6, emit_graph6, parse_graph6
from deltamin.report import Report, to_dot
from deltamin.smin import s_exact


def run(*argv, stdin: str | None = None):
    out = io.StringIO()
    if stdin is not None:
        old = sys.stdin
        sys.stdin = io.StringIO(stdin)
    try:
        code = main(list(argv), out)
    finally:
        if stdin is not None:
            sys.stdin = old
    return code, out.getvalue()


def test_graph6_examples():
    empty = parse_graph6("D??")
    assert empty.n == 5 and empty.m == 0
    assert emit_graph6(Graph.build(5, [])) == "D??"
    assert emit_graph6(parse_graph6("DQc")) == "DQc"
    k5 = "D~{"
    with pytest.raises(DegreeExceeded):
        parse_graph6(k5)


@pytest.mark.parametrize("bad", ["", "D?", "D???", "D\x10?", "D?@"])
def test_graph6_malformed(bad):
    with pytest.raises(MalformedGraph6):
        parse_graph6(bad)


def test_graph6_large_n_prefix():
    g = Graph.build(64, [(i, i + 1) for i in range(63)])
    text = emit_graph6(g)
    assert text.startswith("~") and parse_graph6(text) == g


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<" + emit_graph6(petersen())) == petersen()


def test_corpus_round_trip(corpus):
    lines = corpus_text().split()
    assert len(lines) == 27
    assert [emit_graph6(g) for g in corpus] == lines


@given(subcubic_graphs(max_n=12))
def test_graph6_round_trip(g):
    assert parse_graph6(emit_graph6(g)) == g


@given(hard_graphs())
def test_report_round_trip(g):
    if g.m == 0:
        return
    rep = analyse(g, "X")
    text = rep.to_json()
    again = Report.from_json(text)
    assert again == rep
    assert again.to_json() == text
    assert json.loads(text) == json.loads(json.dumps(json.loads(text), sort_keys=True))


def test_report_is_byte_stable_and_untimed():
    a = analyse(petersen()).to_json()
    b = analyse(petersen()).to_json()
    assert a == b and "timing" not in a
    assert '"gamma": "13/15"' in a
    assert "timing" in analyse(petersen(), timing=True).to_json()


def test_dot_export():
    dot = to_dot(s_exact(petersen()).witness, "PETERSEN")
    bold = [ln for ln in dot.splitlines() if "bold" in ln]
    assert len(bold) == 2 and all('label="delta"' in ln for ln in bold)
    for name in ("alpha", "beta", "gamma"):
        assert f'label="{name}"' in dot
    assert dot.startswith('graph "PETERSEN" {')


def test_cli_gamma_and_smin():
    assert run("gamma", "PETERSEN") == (0, "13/15\n")
    assert run("gamma", emit_graph6(complete(4))) == (0, "1/1\n")
    assert run("smin", "P_PRIME") == (0, "2\n")


def test_cli_verify_g5():
    code, out = run("verify", "G5")
    assert code == 0
    assert "SKIPPED bound:thirteen_fifteenths graph is G5" in out
    assert "FAIL" not in out


def test_cli_verify_petersen():
    code, out = run("verify", "PETERSEN")
    assert code == 0 and "PASS extremal PETERSEN" in out


def test_cli_colour_is_proper():
    code, out = run("colour", "PETERSEN")
    assert code == 0
    rows = [ln.split() for ln in out.splitlines()]
    assert len(rows) == 15 and sum(r[2] == "delta" for r in rows) == 2
    for v in range(10):
        cols = [r[2] for r in rows if str(v) in r[:2]]
        assert len(cols) == len(set(cols))
    code, out = run("colour", "G5", "--format", "dot")
    assert code == 0 and "bold" in out


def test_cli_metrics_and_payan_and_factors():
    code, out = run("metrics", "P_PRIME")
    rep = Report.from_json(out)
    assert code == 0 and rep.metrics.gamma == Fraction(13, 15) and rep.metrics.extremal.value == "P_PRIME"
    code, out = run("payan", "PETERSEN")
    assert code == 0 and out.splitlines()[-1].startswith("cover ") and len(out.splitlines()[-1].split()) == 3
    code, out = run("factors", "PETERSEN")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 7 and lines[-1] == "factors 6 oddness 2 g_plus 5"
    assert all(json.loads(ln)["lengths"] == [5, 5] for ln in lines[:6])


def test_cli_generate_reduce_dotproduct():
    code, out = run("generate", "PETERSEN")
    assert code == 0 and parse_graph6(out.strip()) == petersen()
    code, out = run("reduce", emit_graph6(Graph.build(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])))
    assert code == 0 and parse_graph6(out.strip()) == Graph.build(3, [(0, 1), (1, 2), (0, 2)])
    code, out = run("dotproduct", "PETERSEN", "PETERSEN", "--e1", "0,5", "--f1", "1,6", "--uv", "0,1")
    g = parse_graph6(out.strip())
    assert code == 0 and g.n == 18 and g.is_cubic()
    code, alt = run("--alt-pairing", "dotproduct", "PETERSEN", "PETERSEN", "--e1", "0,5", "--f1", "1,6", "--uv", "0,1")
    assert code == 0 and parse_graph6(alt.strip()).is_cubic()


def test_cli_bad_input_exit_codes():
    assert run("gamma", "not-a-graph")[0] == 2
    assert run("gamma", "D~{")[0] == 2
    assert run("generate", "NOPE")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("dotproduct", "G5", "PETERSEN")[0] == 2


def test_cli_stdin():
    assert run("gamma", "-", stdin=emit_graph6(petersen()) + "\n") == (0, "13/15\n")


def test_scan_bundled_corpus():
    code, out = run("scan")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 27
    gammas = [Fraction(json.loads(ln)["metrics"]["gamma"]) for ln in lines]
    assert min(gammas) == Fraction(13, 15) and gammas.count(Fraction(13, 15)) == 2


def test_scan_error_records_and_order(tmp_path):
    src = tmp_path / "in.g6"
    src.write_text("C~\nbad line\n" + emit_graph6(petersen()) + "\nD~{\n")
    code, out = run("scan", str(src))
    recs = [json.loads(ln) for ln in out.splitlines()]
    assert code == 0 and [r["line"] for r in recs] == [1, 2, 3, 4]
    assert "error" in recs[1] and "error" in recs[3]
    assert recs[2]["metrics"]["gamma"] == "13/15"
    code, par = run("scan", str(src), "--jobs", "2")
    assert par == out


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "deltamin.cli", "gamma", "G5"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "6/7\n"
