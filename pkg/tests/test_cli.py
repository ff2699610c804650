import re

import pytest

from plumbcalc import canonical_form, parse_graph, parse_trace
from plumbcalc.cli import main
from plumbcalc.fixtures import FIXTURE_NAMES, fixture_graph
from plumbcalc.errors import GraphFormatError


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# -- expand ----------------------------------------------------------------------


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "-9", "4")
    assert code == 0 and out == "-3 -2 -2 -2\n"
    code, out, _ = run(capsys, "expand", "-2", "1")
    assert code == 0 and out == "-2\n"
    code, out, _ = run(capsys, "expand", "-5", "3")
    assert code == 0 and out == "-2 -3\n"  # -2 - 1/(-3) = -5/3


def test_expand_domain_error(capsys):
    code, _, err = run(capsys, "expand", "-1", "2")
    assert code == 2 and "error" in err
    code, _, err = run(capsys, "expand", "3", "0")
    assert code == 2


# -- seifert / plumb ---------------------------------------------------------------


def test_seifert_output(capsys):
    code, out, _ = run(capsys, "seifert", "5", "9", "13")
    assert code == 0
    assert out == "b -1\narm 5 2\narm 9 4\narm 13 2\neuler -1/585\n"


def test_seifert_invalid_triple(capsys):
    code, _, err = run(capsys, "seifert", "3", "9", "5")
    assert code == 2 and "coprime" in err


def test_plumb_round_trips(capsys, tmp_path):
    code, out, _ = run(capsys, "plumb", "3", "13", "23")
    assert code == 0
    g = parse_graph(out)
    assert g == fixture_graph("sigma-3-13-23")
    out_file = tmp_path / "s.graph"
    code, _, _ = run(capsys, "plumb", "3", "13", "23", "--out", str(out_file))
    assert code == 0
    assert parse_graph(out_file.read_text()) == g


# -- invariants ---------------------------------------------------------------------


def test_invariants_d2(capsys):
    code, out, _ = run(capsys, "invariants", "d2")
    assert code == 0
    assert out == (
        "vertices 9\nedges 8\ncomponents 1\ndet -1\nsignature -9\n"
        "wu c\nmu-bar -8\nrohlin 1\n"
    )


def test_invariants_e8_and_even_det(capsys, tmp_path):
    code, out, _ = run(capsys, "invariants", "e8")
    assert code == 0
    assert "det 1\n" in out and "wu -\n" in out and "rohlin 1\n" in out
    # even determinant: wu/mu-bar/rohlin lines are omitted
    f = tmp_path / "zero.graph"
    f.write_text("vertex a 0\n")
    code, out, _ = run(capsys, "invariants", str(f))
    assert code == 0
    assert out == "vertices 1\nedges 0\ncomponents 1\ndet 0\nsignature 0\n"


# -- mu ---------------------------------------------------------------------------


def test_mu_both_methods(capsys):
    code, out, _ = run(capsys, "mu", "5", "9", "13", "--method", "both")
    assert code == 0 and out == "1 1\n"
    code, out, _ = run(capsys, "mu", "3", "13", "23", "--method", "both")
    assert code == 0 and out == "1 1\n"


def test_mu_single_methods(capsys):
    code, out, _ = run(capsys, "mu", "2", "3", "5", "--method", "plumbing")
    assert code == 0 and out == "1\n"
    code, out, _ = run(capsys, "mu", "5", "9", "13", "--method", "lattice")
    assert code == 0 and out == "1\n"


def test_mu_lattice_needs_all_odd(capsys):
    code, _, err = run(capsys, "mu", "2", "3", "5", "--method", "lattice")
    assert code == 2 and "odd" in err


def test_mu_invalid_triple(capsys):
    code, _, _ = run(capsys, "mu", "4", "6", "9")
    assert code == 2


# -- reduce / replay ----------------------------------------------------------------


def test_reduce_d4(capsys):
    code, out, _ = run(capsys, "reduce", "d4")
    assert code == 0 and out == "S3\n"


def test_reduce_d3_with_trace(capsys, tmp_path):
    trace_file = tmp_path / "d3.trace"
    code, out, _ = run(capsys, "reduce", "d3", "--trace", str(trace_file))
    assert code == 0 and out == "S3\n"
    start, moves = parse_trace(trace_file.read_text(), source="d3.trace")
    assert start == fixture_graph("d3")
    assert len(moves) == 7
    # replay through the CLI as well
    code, out, _ = run(capsys, "replay-trace", str(trace_file))
    assert code == 0
    assert out.startswith("replay ok: 7 moves, end graph has 0 vertices")


def test_reduce_e8_unknown(capsys):
    code, out, _ = run(capsys, "reduce", "e8")
    assert code == 1 and out == "UNKNOWN\n"


def test_reduce_not_hs(capsys, tmp_path):
    f = tmp_path / "m3.graph"
    f.write_text("vertex a -3\n")
    code, out, _ = run(capsys, "reduce", str(f))
    assert code == 1 and out == "NOT-HS(3)\n"


def test_reduce_budget(capsys):
    code, out, _ = run(capsys, "reduce", "d3", "--budget", "2")
    assert code == 1 and out == "UNKNOWN\n"


def test_reduce_parse_error(capsys, tmp_path):
    f = tmp_path / "bad.graph"
    f.write_text("vertex a -2\nedge a b\n")
    code, _, err = run(capsys, "reduce", str(f))
    assert code == 2 and "bad.graph:2" in err


def test_replay_trace_rejects_invalid_moves(capsys, tmp_path):
    f = tmp_path / "bad.trace"
    f.write_text("vertex a -2\nvertex b 0\nedge a b\nblowdown a\n")
    code, _, err = run(capsys, "replay-trace", str(f))
    assert code == 1 and "blow down" in err


def test_replay_trace_missing_file(capsys):
    code, _, _ = run(capsys, "replay-trace", "/nonexistent/x.trace")
    assert code == 2


def test_replay_trace_nonempty_end(capsys, tmp_path):
    f = tmp_path / "one.trace"
    f.write_text("vertex a -2\nvertex b -1\nedge a b\nblowdown b\n")
    code, out, _ = run(capsys, "replay-trace", str(f))
    assert code == 0
    assert out == "replay ok: 1 moves, end graph has 1 vertices\nvertex a -1\n"


# -- graph file diagnostics -----------------------------------------------------------


@pytest.mark.parametrize(
    "text,lineno,fragment",
    [
        ("vertex a -2\nvertex a -3\n", 2, "duplicate"),
        ("vertex a -2\nedge a a\n", 2, "loop"),
        ("vertex a -2\nvertex b 1\nedge a b\nedge b a\n", 4, "parallel"),
        ("vertex a -2\nedge a z\n", 2, "unknown vertex"),
        ("vertex a x\n", 1, "not an integer"),
        ("vertx a -2\n", 1, "unknown directive"),
        ("vertex a -2\nvertex b -2\nvertex c -2\nedge a b\nedge b c\nedge a c\n", 6, "cycle"),
        ("vertex a\n", 1, "vertex line needs"),
        ("vertex a -2\nblowdown a\n", 2, "move line"),
    ],
)
def test_graph_parse_diagnostics(text, lineno, fragment):
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph(text, source="doc")
    message = str(excinfo.value)
    assert message.startswith(f"doc:{lineno}:")
    assert fragment in message


def test_graph_file_comments_and_blanks_ok():
    g = parse_graph("# header\n\nvertex a -2   # trailing\nvertex b 0\nedge a b\n")
    assert len(g) == 2 and g.has_edge("a", "b")


# -- scan ------------------------------------------------------------------------------


def test_scan_text_summary(capsys):
    code, out, _ = run(
        capsys, "scan", "--p-bound", "30", "--q-bound", "30",
        "--r-range", "1", "5", "--s-range", "1", "1",
    )
    assert code == 0
    assert "all-odd-mu1-triples 1\n" in out
    assert "hit 3 13 23\n" in out


def test_scan_records_format(capsys):
    code, out, _ = run(
        capsys, "scan", "--p-bound", "30", "--q-bound", "30",
        "--r-range", "1", "5", "--s-range", "1", "1", "--format", "records",
    )
    assert code == 0
    assert "p=-13 q=23 r=3 s=1 coefficient=1 triple=3,13,23 all_odd=true mu=1\n" in out
    assert out.startswith("# coefficient = r*s*(p+q)^2 + p*q\n")
    assert "extraction hypothesis" in out  # flagged in every report


def test_scan_out_file_and_determinism(capsys, tmp_path):
    f1, f2 = tmp_path / "a.records", tmp_path / "b.records"
    args = ["scan", "--p-bound", "20", "--q-bound", "20", "--r-range", "-4", "4",
            "--s-range", "-4", "4"]
    code, out1, _ = run(capsys, *args, "--out", str(f1))
    assert code == 0
    code, out2, _ = run(capsys, *args, "--out", str(f2))
    assert out1 == out2
    assert f1.read_text() == f2.read_text()


def test_scan_tiny_bounds_zero_hits(capsys):
    code, out, _ = run(capsys, "scan", "--p-bound", "5", "--q-bound", "5")
    assert code == 0
    assert "all-odd-mu1-triples 0\n" in out
    assert "hit" not in out


def test_scan_empty_range_usage_error(capsys):
    code, _, err = run(capsys, "scan", "--s-range", "0", "0")
    assert code == 2 and "empty" in err
    code, _, _ = run(capsys, "scan", "--r-range", "5", "3")
    assert code == 2


# -- export-dot ---------------------------------------------------------------------


DOT_NODE = re.compile(r'^  "([A-Za-z0-9_.\-]+)" \[label="([^"]*)"\];$')
DOT_EDGE = re.compile(r'^  "([A-Za-z0-9_.\-]+)" -- "([A-Za-z0-9_.\-]+)";$')


def parse_dot_subset(text):
    """Strict reader for the DOT subset the exporter emits; returns the
    node label map and edge list."""
    lines = text.splitlines()
    assert lines[0].startswith("graph ") and lines[0].endswith("{")
    assert lines[-1] == "}"
    nodes, edges = {}, []
    for line in lines[1:-1]:
        m = DOT_NODE.match(line)
        if m:
            nodes[m.group(1)] = m.group(2)
            continue
        m = DOT_EDGE.match(line)
        assert m, f"unparsable DOT line: {line!r}"
        edges.append((m.group(1), m.group(2)))
    return nodes, edges


def test_export_dot_round_trip(capsys):
    code, out, _ = run(capsys, "export-dot", "d2")
    assert code == 0
    nodes, edges = parse_dot_subset(out)
    g = fixture_graph("d2")
    assert set(nodes) == set(g.ids)
    for v, w in g.vertices:
        assert nodes[v] == f"{v}: {w}"
    assert sorted(tuple(sorted(e)) for e in edges) == list(g.edges)


def test_export_dot_empty(capsys, tmp_path):
    f = tmp_path / "empty.graph"
    f.write_text("# nothing\n")
    code, out, _ = run(capsys, "export-dot", str(f))
    assert code == 0
    assert out == "graph plumbing {\n}\n"


# -- check -------------------------------------------------------------------------


def test_check_3_13_23(capsys):
    code, out, _ = run(capsys, "check", "3", "13", "23")
    assert code == 0
    assert out.splitlines() == [
        "triple 3 13 23",
        "criterion surgery-coefficient-pm1: PASS (scan witness p=13 q=-23 r=1 s=3, coefficient 1)",
        "criterion rohlin-invariant-1: PASS (lattice 1, plumbing 1)",
        "criterion free-involution: PASS (all indices odd)",
        "result PASS",
    ]


def test_check_5_9_13(capsys):
    code, out, _ = run(capsys, "check", "5", "9", "13")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "triple 5 9 13"
    assert lines[1].startswith("criterion surgery-coefficient-pm1: PASS (fixture d3")
    assert "7 moves" in lines[1]
    assert lines[2] == "criterion rohlin-invariant-1: PASS (lattice 1, plumbing 1)"
    assert lines[3] == "criterion free-involution: PASS (all indices odd)"
    assert lines[4] == "result PASS"


def test_check_fails_on_even_triple(capsys):
    code, out, _ = run(capsys, "check", "2", "3", "5")
    assert code == 1
    assert "criterion free-involution: FAIL (even index 2)" in out
    assert "result FAIL" in out


# -- fixtures ----------------------------------------------------------------------


def test_fixtures_list_and_copy(capsys, tmp_path):
    code, out, _ = run(capsys, "fixtures")
    assert code == 0
    assert out.split() == list(FIXTURE_NAMES)
    code, out, _ = run(capsys, "fixtures", "--copy-to", str(tmp_path))
    assert code == 0
    for name in FIXTURE_NAMES:
        copied = tmp_path / f"{name}.graph"
        assert copied.exists()
        assert parse_graph(copied.read_text()) == fixture_graph(name)


def test_graph_argument_accepts_path_and_fixture_name(capsys, tmp_path):
    f = tmp_path / "g.graph"
    f.write_text("vertex a -2\nvertex b 0\nedge a b\n")
    code, out1, _ = run(capsys, "export-dot", str(f))
    assert code == 0
    code, _, err = run(capsys, "export-dot", "no-such-thing")
    assert code == 2 and "no such file or fixture" in err
    # fixture name with suffix also resolves
    code, out_a, _ = run(capsys, "export-dot", "d4")
    code, out_b, _ = run(capsys, "export-dot", "d4.graph")
    assert out_a == out_b


def test_usage_errors_exit_2(capsys):
    assert main(["expand", "-9"]) == 2  # missing positional
    assert main(["unknown-subcommand"]) == 2
    capsys.readouterr()


def test_canonical_reduction_outputs_are_stable(capsys):
    # byte-identical stdout across runs for a representative command set
    for argv in (["invariants", "d2"], ["reduce", "d3"], ["check", "5", "9", "13"]):
        code1, out1, _ = run(capsys, *argv)
        code2, out2, _ = run(capsys, *argv)
        assert (code1, out1) == (code2, out2)


def test_trace_files_end_with_canonical_d4_state(capsys, tmp_path):
    trace_file = tmp_path / "t.trace"
    run(capsys, "reduce", "d3", "--trace", str(trace_file))
    start, moves = parse_trace(trace_file.read_text())
    from plumbcalc import apply_move

    g = start
    forms = [canonical_form(g)]
    for m in moves:
        g = apply_move(g, m)
        forms.append(canonical_form(g))
    assert canonical_form(fixture_graph("d4")) in forms
    assert g.is_empty


def test_mu_disagreement_exits_3(capsys, monkeypatch):
    # the two routes genuinely agree everywhere, so force a fake mismatch to
    # pin the exit-code contract
    import plumbcalc.cli as cli

    monkeypatch.setattr(cli, "rohlin_from_signature", lambda t: 0)
    code, out, err = run(capsys, "mu", "5", "9", "13", "--method", "both")
    assert code == 3
    assert out == "0 1\n"
    assert "disagree" in err


def test_check_triple_without_witness_or_fixture(capsys):
    # (3,5,7): no +-1 coefficient assignment exists and no fixture evidence
    # is shipped, and its mu is 0; two criteria fail
    code, out, _ = run(capsys, "check", "3", "5", "7")
    assert code == 1
    assert "criterion surgery-coefficient-pm1: FAIL (no witness found)" in out
    assert "criterion rohlin-invariant-1: FAIL (lattice 0, plumbing 0)" in out
    assert "criterion free-involution: PASS" in out
    assert "result FAIL (2 of 3 criteria unmet)" in out


def test_trace_parser_rejects_graph_lines_after_moves():
    with pytest.raises(GraphFormatError) as excinfo:
        parse_trace("vertex a -1\nblowdown a\nvertex b -2\n")
    assert "doc" not in str(excinfo.value)
    assert ":3:" in str(excinfo.value)
