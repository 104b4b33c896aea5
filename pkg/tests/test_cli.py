"""End-to-end command-line behavior: formats, exit codes, round trips."""

import io
import json

import pytest

from compedge.cli import run


def capture(capsys):
    out = capsys.readouterr()
    return out.out, out.err


class TestAnalyze:
    def test_json_roundtrip(self, capsys):
        assert run(["analyze", "C`", "--json"]) == 0
        out, _ = capture(capsys)
        doc = json.loads(out)
        assert json.loads(json.dumps(doc)) == doc
        assert doc["input"]["graph6"] == "C`"
        assert doc["betti"]["entries"] == {"0,2": 2, "1,4": 1}
        assert doc["properties"]["gorenstein"] is True

    def test_edge_list_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("4\n1 2\n2 3\n3 4"))
        assert run(["analyze", "-", "--format", "edge-list"]) == 0
        out, _ = capture(capsys)
        assert "linear_resolution=True" in out
        assert "pd=1" in out

    def test_cross_check(self, capsys):
        assert run(["analyze", "C`", "--json", "--cross-check"]) == 0
        out, _ = capture(capsys)
        doc = json.loads(out)
        assert doc["oracle_matches"] is True

    def test_invalid_graph_exit_two(self, capsys):
        assert run(["analyze", "C"]) == 2

    def test_too_small_graph_exit_two(self, capsys):
        # triangle: standing assumptions fail
        assert run(["analyze", "Bw"]) == 2


class TestBetti:
    def test_text(self, capsys):
        assert run(["betti", "C`"]) == 0
        out, _ = capture(capsys)
        assert "total" in out

    def test_cross_check_json(self, capsys):
        assert run(["betti", "C~", "--json", "--cross-check", "--field", "q"]) == 0
        out, _ = capture(capsys)
        doc = json.loads(out)
        assert doc["betti"]["entries"] == {"0,2": 6, "1,3": 8, "2,4": 3}
        assert doc["oracle_matches"] is True


class TestDual:
    def test_split(self, capsys):
        assert run(["dual", "C~", "--json"]) == 0
        out, _ = capture(capsys)
        doc = json.loads(out)
        assert doc["from_nonedges"] == []
        assert len(doc["from_triangles"]) == 4


class TestOrder:
    def test_connected(self, capsys):
        assert run(["order", "C^"]) == 0  # connected: K4 minus one edge
        out, _ = capture(capsys)
        assert "order:" in out

    def test_disconnected_witness(self, capsys):
        assert run(["order", "C`"]) == 0
        out, _ = capture(capsys)
        assert "NoOrderExists" in out
        assert "{1,2}" in out and "{3,4}" in out

    def test_json_disconnected(self, capsys):
        assert run(["order", "C`", "--json"]) == 0
        out, _ = capture(capsys)
        doc = json.loads(out)
        assert doc["order"] is None
        assert doc["components"] == [[1, 2], [3, 4]]


class TestSweepCommand:
    def test_corrected_exit_zero(self, capsys, tmp_path):
        out_file = tmp_path / "report.json"
        assert run(["sweep", "--n", "4..4", "--out", str(out_file)]) == 0
        doc = json.loads(out_file.read_text())
        assert doc["graph_count"] == 41
        assert doc["mismatches"] == []
        assert "wall" not in json.dumps(doc)

    def test_paper_literal_exit_three(self, capsys, tmp_path):
        out_file = tmp_path / "report.json"
        code = run(
            [
                "sweep",
                "--n",
                "4..4",
                "--mode",
                "paper-literal",
                "--out",
                str(out_file),
            ]
        )
        assert code == 3
        doc = json.loads(out_file.read_text())
        assert [m["graph6"] for m in doc["mismatches"]] == ["C~"]

    def test_bad_range_exit_two(self, capsys):
        assert run(["sweep", "--n", "3..4"]) == 2


class TestCensusCommand:
    def test_n4(self, capsys):
        assert run(["census", "--n", "4", "--json"]) == 0
        out, _ = capture(capsys)
        assert len(json.loads(out)) == 3


class TestUsage:
    def test_unknown_command(self, capsys):
        assert run(["frobnicate"]) == 1

    def test_unknown_flag(self, capsys):
        assert run(["analyze", "C`", "--wat"]) == 1

    def test_missing_subcommand(self, capsys):
        assert run([]) == 1
