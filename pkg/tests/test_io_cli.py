import io
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubiccensus.cli import run_cli
from cubiccensus.counting import count_perfect_matchings
from cubiccensus.errors import DuplicateEdgeError, MalformedInputError, SelfLoopError
from cubiccensus.families import k4, m_graph
from cubiccensus.graph import build_graph
from cubiccensus.io import (
    decode_edge_list,
    decode_graph6,
    encode_edge_list,
    encode_graph6,
    read_graph6,
    to_csv,
)
from cubiccensus.search import generate_connected_cubic


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_graph6_k4():
    assert encode_graph6(k4()) == "C~"
    g = decode_graph6("C~")
    assert g == k4() and count_perfect_matchings(g) == 3


def test_graph6_known_strings():
    # hand-encoded from the byte rule
    assert encode_graph6(build_graph(0, [])) == "?"
    assert encode_graph6(build_graph(5, [(0, 1), (0, 2), (1, 2), (3, 4)])) == "DwC"  # bits 1 11 000 0001 + 00 padding
    assert decode_graph6(">>graph6<<C~") == k4()


def test_graph6_round_trip_on_census():
    for v in range(4, 17, 2):
        graphs = list(generate_connected_cubic(v))
        text = "".join(encode_graph6(g) + "\n" for g in graphs)
        assert read_graph6(text) == graphs


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 62), st.data())
def test_graph6_round_trip_random(n, data):
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = data.draw(st.lists(st.sampled_from(pairs), unique=True, max_size=40)) if pairs else []
    g = build_graph(n, chosen)
    assert decode_graph6(encode_graph6(g)) == g


@pytest.mark.parametrize("bad", ["", "C", "C~~", "B\x7f", "Bx", "~??"])
def test_graph6_malformed(bad):
    with pytest.raises(MalformedInputError):
        decode_graph6(bad)


def test_edge_list():
    g = decode_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3")
    assert g == k4()
    assert decode_edge_list(encode_edge_list(m_graph(7))) == m_graph(7)
    with pytest.raises(SelfLoopError):
        decode_edge_list("2 1\n0 0\n")
    with pytest.raises(DuplicateEdgeError):
        decode_edge_list("2 2\n0 1\n1 0\n")
    with pytest.raises(MalformedInputError):
        decode_edge_list("4 2\n")
    with pytest.raises(MalformedInputError):
        decode_edge_list("4 1\n0 x\n")


def test_csv_integers_exact():
    assert to_csv(("a", "b"), [(1, 10**30)]) == "a,b\n1,1000000000000000000000000000000\n"


def test_cli_family_then_count(tmp_path):
    target = tmp_path / "m6.g6"
    assert run("family", "--name", "Mn", "--n", "6", "--out", str(target)) == (0, "", "")
    code, out, _ = run("count", "--in", str(target), "--what", "pm")
    assert (code, out) == (0, "20\n")
    code, out, _ = run("count", "--in", str(target), "--what", "all")
    assert out == "pm=20 2f=20 cycles=78 formula=20\n"


def test_cli_count_edges_json(tmp_path):
    target = tmp_path / "p.txt"
    run("family", "--name", "PETERSEN", "--out", str(target), "--format", "edges")
    code, out, _ = run("count", "--in", str(target), "--format", "edges", "--what", "2f", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["command"] == "count"
    assert doc["rows"][0]["value"] == 6 and doc["rows"][0]["algorithm"].startswith("two_factors/")
    assert set(doc) == {"version", "command", "params", "rows", "summary"}


def test_cli_json_is_deterministic(tmp_path):
    runs = [run("verify", "--suite", "af", "--max-n", "5", "--json", "--jobs", "2")[1] for _ in range(2)]
    assert runs[0] == runs[1]


def test_cli_verify_exit_codes():
    code, out, _ = run("verify", "--suite", "bb", "--max-n", "6")
    assert code == 0 and out.endswith("failed=0\n")
    code, out, _ = run("verify", "--suite", "aa", "--max-n", "6", "--json")
    doc = json.loads(out)
    assert code == 1 and doc["summary"]["failed"] == 2
    for suite in ("lemma1", "cc"):
        code, out, _ = run("verify", "--suite", suite, "--json")
        assert code == 0 and json.loads(out)["summary"]["failed"] == 0


def test_cli_search_report(tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run("search", "--vertices", "10", "--report", str(report))
    doc = json.loads(report.read_text())
    assert code == 0 and len(doc["rows"]) == 19
    assert doc["summary"] == {"checked": 19, "passed": 19, "failed": 0}
    assert sum(r["extremal"] for r in doc["rows"]) == 1


def test_cli_table():
    code, out, _ = run("table", "--psi", "--max-r", "10")
    rows = {int(line.split()[0]): int(line.split()[1]) for line in out.splitlines()[1:]}
    assert code == 0 and rows[5] == 28
    code, out, _ = run("table", "--psi", "--max-r", "6", "--csv")
    assert out == "r,psi_lower,half_power,ceiling_16ths\n4,14,8,240\n5,28,16,480\n6,56,32,960\n"


@pytest.mark.parametrize(
    "argv",
    [
        (),
        ("bogus",),
        ("count", "--in", "/nonexistent/file"),
        ("family", "--name", "Mn", "--out", "x.g6"),
        ("search", "--vertices", "7", "--report", "r.json"),
        ("verify", "--suite", "aa", "--max-n", "9"),
        ("table", "--max-r", "5"),
    ],
)
def test_cli_usage_errors(argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, err = run(*argv)
    assert code == 2 and err


def test_cli_malformed_input(tmp_path):
    bad = tmp_path / "bad.g6"
    bad.write_text("C~~\n")
    code, _, err = run("count", "--in", str(bad))
    assert code == 2 and "graph6" in err

