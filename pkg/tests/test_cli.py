from __future__ import annotations

import json
import re

import pytest

import figure_data
from qsymk.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_verify_passes_and_reports(capsys):
    code, out = run_cli(capsys, "verify", "thm2a", "--deg", "1..6")
    assert code == 0
    report = json.loads(out)
    assert report["schema_version"] == 1
    assert report["check"] == "thm2a"
    assert report["pass"] is True
    assert [row["degree"] for row in report["rows"]] == list(range(1, 7))
    assert all(row["pass"] for row in report["rows"])
    assert all(row["stat"] == "Pk" for row in report["rows"])


def test_verify_vacuous_degree_zero(capsys):
    code, out = run_cli(capsys, "verify", "thm2a", "--deg", "0..0")
    assert code == 0
    assert json.loads(out)["rows"][0]["degree"] == 0


def test_verify_deep_raises_default_range(capsys):
    code, out = run_cli(capsys, "verify", "thm33", "--deep")
    assert code == 0
    assert [row["degree"] for row in json.loads(out)["rows"]] == list(range(1, 11))


def test_verify_all_registry_checks_small(capsys):
    for check in ("thm0", "thm2b", "thm33", "thm35", "thm3a", "thm3b",
                  "thm53a", "thm53b", "props4", "lemma22", "bridges"):
        code, out = run_cli(capsys, "verify", check, "--deg", "0..5")
        assert code == 0, (check, out)
        assert json.loads(out)["pass"] is True


def test_verify_thm1_consistency_suite(capsys):
    for check in ("thm1a", "thm1b"):
        code, out = run_cli(capsys, "verify", check, "--deg", "0..5")
        assert code == 0
        report = json.loads(out)
        assert report["pass"] is True
        assert {row["rels"] for row in report["rows"]} >= {"arrow12", "pkbasis", "val123"}


def test_verify_ideal_single_stat(capsys):
    code, out = run_cli(capsys, "verify", "ideal", "--stat", "Pk", "--deg", "1..5")
    assert code == 0
    report = json.loads(out)
    assert report["rows"] == [
        {"check": "ideal", "degree": 5, "pass": True, "stat": "Pk"}
    ]


def test_verify_ideal_all_statistics(capsys):
    code, out = run_cli(capsys, "verify", "ideal", "--deg", "1..4")
    assert code == 0
    report = json.loads(out)
    assert len(report["rows"]) == 13
    assert all(row["pass"] for row in report["rows"])


def test_verify_unknown_check_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "nonsense", "--deg", "1..3"])
    assert info.value.code == 2


def test_bad_degree_range_is_usage_error(capsys):
    for bad in ("5..3", "-2..4", "x..y"):
        with pytest.raises(SystemExit) as info:
            main(["verify", "thm2a", "--deg", bad])
        assert info.value.code == 2


def test_degree_above_limit_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--max-degree", "4", "verify", "thm2a", "--deg", "1..6"])
    assert info.value.code == 2


def test_dims_table(capsys):
    code, out = run_cli(capsys, "dims", "--stat", "Pk", "--stat", "pk", "--deg", "4..5")
    assert code == 0
    assert out.splitlines() == [
        "stat,degree,kernel_dim,quotient_dim",
        "Pk,4,5,3",
        "Pk,5,11,5",
        "pk,4,6,2",
        "pk,5,13,3",
    ]
    code, out = run_cli(capsys, "dims", "--stat", "Des", "--deg", "1..4")
    assert all(line.split(",")[2] == "0" for line in out.splitlines()[1:])


def test_dims_json_and_tsv(capsys):
    code, out = run_cli(capsys, "dims", "--stat", "pk", "--deg", "5..5", "--format", "json")
    assert json.loads(out) == [
        {"stat": "pk", "degree": 5, "kernel_dim": 13, "quotient_dim": 3}
    ]
    code, out = run_cli(capsys, "dims", "--stat", "pk", "--deg", "5..5", "--format", "tsv")
    assert out.splitlines()[1] == "pk\t5\t13\t3"


_DOT_EDGE = re.compile(r'^\s*"(?P<src>[^"]+)" -> "(?P<dst>[^"]+)" \[label="(?P<label>[^"]+)"\];$')
_DOT_MARK = re.compile(r'^\s*"(?P<name>[^"]+)" \[peripheries=2\];$')


def _parse_dot(text):
    edges = []
    marks = []
    for line in text.splitlines():
        m = _DOT_EDGE.match(line)
        if m:
            edges.append((m.group("src"), m.group("dst"), m.group("label")))
        m = _DOT_MARK.match(line)
        if m:
            marks.append(m.group("name"))
    return edges, marks


def test_graph_dot_matches_figure1(capsys):
    code, out = run_cli(capsys, "graph", "--rels", "arrow123", "--deg", "0..5")
    assert code == 0
    edges, _ = _parse_dot(out)
    expected = [e for n in range(0, 6) for e in figure_data.FIGURE1_EDGES[n]]
    assert sorted(edges) == sorted(expected)


def test_graph_dot_matches_figure2(capsys):
    code, out = run_cli(capsys, "graph", "--rels", "tri12ctilde", "--deg", "0..5")
    assert code == 0
    edges, marks = _parse_dot(out)
    expected = [e for n in range(0, 6) for e in figure_data.FIGURE2_EDGES[n]]
    expected_marks = [m for n in range(0, 6) for m in figure_data.FIGURE2_CTILDE[n]]
    assert sorted(edges) == sorted(expected)
    assert sorted(marks) == sorted(expected_marks)


def test_graph_json_and_csv(capsys):
    code, out = run_cli(capsys, "graph", "--rels", "arrow123", "--deg", "4", "--format", "json")
    payload = json.loads(out)
    assert payload["degrees"] == [4]
    assert {(e["from"], e["to"], e["label"]) for e in payload["edges"]} == set(
        figure_data.FIGURE1_EDGES[4]
    )
    code, out = run_cli(capsys, "graph", "--rels", "arrow123", "--deg", "2", "--format", "csv")
    assert out == 'from,to,label\n"(2)","(1,1)",2\n'


def test_graph_dot_golden_file(capsys):
    import pathlib

    code, out = run_cli(capsys, "graph", "--rels", "arrow123", "--deg", "3")
    golden = pathlib.Path(__file__).parent / "golden" / "arrow123_deg3.dot"
    assert out == golden.read_text()


def test_graph_single_vertex_degree_one(capsys):
    code, out = run_cli(capsys, "graph", "--rels", "arrow123", "--deg", "1")
    assert code == 0
    assert '"(1)";' in out
    assert "->" not in out


def test_output_deterministic_and_file_writing(tmp_path, capsys):
    _, first = run_cli(capsys, "verify", "props4", "--deg", "1..5")
    _, second = run_cli(capsys, "verify", "props4", "--deg", "1..5")
    assert first == second

    target = tmp_path / "report.json"
    code, out = run_cli(capsys, "verify", "thm33", "--deg", "1..4", "--out", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["pass"] is True


def test_shufflecheck(capsys):
    code, out = run_cli(capsys, "shufflecheck", "Des", "4")
    assert code == 0
    report = json.loads(out)
    assert report["compatible"] is True
    assert report["statistic"] == "Des"
    with pytest.raises(SystemExit) as info:
        main(["shufflecheck", "NotAStat", "4"])
    assert info.value.code == 2


def test_console_script_subprocess():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "qsymk.cli", "verify", "thm33", "--deg", "1..4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pass"] is True
