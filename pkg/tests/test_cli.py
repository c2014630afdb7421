"""End-to-end command line tests through main(argv)."""

from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from closurecount.cli import main

DIAMOND_TEXT = "4\n0 1\n0 2\n1 3\n2 3\n"


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


class TestCount:
    def test_generated(self, capsys):
        rc, out, err = run(capsys, "count", "--gen", "powerset:3")
        assert (rc, out, err) == (0, "61\n", "")

    def test_file(self, capsys, tmp_path):
        f = tmp_path / "d.txt"
        f.write_text(DIAMOND_TEXT)
        rc, out, _ = run(capsys, "count", str(f))
        assert (rc, out) == (0, "7\n")

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO(DIAMOND_TEXT))
        rc, out, _ = run(capsys, "count", "-")
        assert (rc, out) == (0, "7\n")

    @pytest.mark.parametrize("required,want", [("1", "3"), ("0,3", "4")])
    def test_required(self, capsys, required, want):
        rc, out, _ = run(capsys, "count", "--gen", "diamond:2",
                         "--required", required)
        assert (rc, out) == (0, want + "\n")

    def test_pretty(self, capsys):
        rc, out, _ = run(capsys, "count", "--gen", "chain:12", "--pretty")
        assert (rc, out) == (0, "2,048\n")

    def test_trace_goes_to_stderr(self, capsys):
        rc, out, err = run(capsys, "count", "--gen", "stacked:2", "--trace")
        assert (rc, out) == (0, "98\n")
        assert "summit suborder [3,7]" in err

    def test_cap_refusal_is_exit_3(self, capsys):
        rc, out, err = run(capsys, "count", "--gen", "powerset:3", "--cap", "7")
        assert (rc, out) == (3, "")
        assert err.startswith("error:")

    def test_force_overrides_cap(self, capsys):
        rc, out, _ = run(capsys, "count", "--gen", "powerset:4",
                         "--cap", "5", "--force")
        assert (rc, out) == (0, "2480\n")

    @pytest.mark.parametrize("argv", [
        ("count",),                                   # no input at all
        ("count", "x.txt", "--gen", "chain:3"),       # both inputs
        ("count", "--gen", "chain:3", "--required", "zz"),
        ("count", "--gen", "chain:3", "--required", "9"),
        ("count", "--gen", "nosuchfamily:3"),
        ("count", "--gen", "chain:0"),
    ])
    def test_usage_errors_are_exit_2(self, capsys, argv):
        rc, _, err = run(capsys, *argv)
        assert rc == 2 and err.startswith("error:")

    def test_missing_file_is_exit_2(self, capsys, tmp_path):
        rc, _, err = run(capsys, "count", str(tmp_path / "absent.txt"))
        assert rc == 2 and err.startswith("error:")


class TestDecompose:
    def test_text_report(self, capsys):
        rc, out, _ = run(capsys, "decompose", "--gen", "stacked:2")
        assert rc == 0
        assert out.splitlines() == ["(3, 7, 5, summit)", "(0, 3, 4, bottleneck)"]

    def test_none(self, capsys):
        rc, out, _ = run(capsys, "decompose", "--gen", "powerset:3")
        assert (rc, out) == (0, "none\n")

    def test_json(self, capsys):
        rc, out, _ = run(capsys, "decompose", "--gen", "stacked:2", "--json")
        assert rc == 0
        payload = json.loads(out)
        assert payload["summit"] == [
            {"bottom": 3, "top": 7, "size": 5, "members": [3, 4, 5, 6, 7]}]
        assert payload["bottleneck"] == [
            {"bottom": 0, "top": 3, "size": 4, "members": [0, 1, 2, 3]}]

    def test_json_reports_empty_lists(self, capsys):
        rc, out, _ = run(capsys, "decompose", "--gen", "powerset:2", "--json")
        assert rc == 0
        assert json.loads(out) == {"summit": [], "bottleneck": []}


class TestValidate:
    def test_clean_file(self, capsys, tmp_path):
        f = tmp_path / "d.txt"
        f.write_text(DIAMOND_TEXT)
        rc, out, _ = run(capsys, "validate", str(f))
        assert rc == 0
        assert out == "OK: diamond width 2, 1 component\n"

    def test_reduced_and_dropped_are_reported(self, capsys, tmp_path):
        f = tmp_path / "messy.txt"
        f.write_text("4\n0 1\n0 1\n0 2\n1 3\n2 3\n0 3\n2 2\n")
        rc, out, _ = run(capsys, "validate", str(f))
        assert rc == 0
        assert out.splitlines() == [
            "OK: diamond width 2, 1 component",
            "reduced 1 transitive edge",
            "dropped 2 duplicate or reflexive edges",
        ]

    def test_stdin(self, capsys, monkeypatch):
        monkeypatch.setattr("sys.stdin", io.StringIO("3\n0 1\n"))
        rc, out, _ = run(capsys, "validate", "-")
        assert rc == 0
        assert out == "OK: other n=3, 2 components\n"

    def test_cycle_is_exit_2(self, capsys, tmp_path):
        f = tmp_path / "cycle.txt"
        f.write_text("3\n0 1\n1 2\n2 0\n")
        rc, _, err = run(capsys, "validate", str(f))
        assert rc == 2 and "cycle" in err

    def test_parse_error_carries_line_number(self, capsys, tmp_path):
        f = tmp_path / "bad.txt"
        f.write_text("3\n0 1\n0 zz\n")
        rc, _, err = run(capsys, "validate", str(f))
        assert rc == 2 and "line 3" in err


class TestSelfcheck:
    def test_small_run_passes(self, capsys):
        rc, out, _ = run(capsys, "selfcheck", "--instances", "25",
                         "--max-size", "7", "--seed", "5")
        assert rc == 0
        assert out.startswith("25/25 OK in ")
        assert "(seed 5, sizes up to 7)" in out


class TestBench:
    def test_stdout_csv(self, capsys):
        rc, out, _ = run(capsys, "bench", "--family", "chain:6",
                         "--family", "powerset:2")
        assert rc == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [r["name"] for r in rows] == ["chain:6", "powerset:2"]
        assert [r["count"] for r in rows] == ["32", "7"]
        assert all(r["agree"] == "True" for r in rows)
        # the chain is pure formula work: no brute-force leaves at all
        assert rows[0]["decomp_checks"] == "0"
        assert int(rows[0]["brute_checks"]) == 2 ** 5

    def test_csv_file_and_poset_file(self, capsys, tmp_path):
        poset_file = tmp_path / "d.txt"
        poset_file.write_text(DIAMOND_TEXT)
        report = tmp_path / "report.csv"
        rc, out, _ = run(capsys, "bench", str(poset_file), "--csv", str(report))
        assert (rc, out) == (0, "")
        rows = list(csv.DictReader(report.open()))
        assert len(rows) == 1 and rows[0]["count"] == "7"
        assert list(rows[0].keys()) == [
            "name", "size", "brute_seconds", "decomp_seconds",
            "count", "agree", "brute_checks", "decomp_checks"]

    def test_no_inputs_is_exit_2(self, capsys):
        rc, _, err = run(capsys, "bench")
        assert rc == 2 and "nothing to benchmark" in err


class TestEntryPoints:
    def test_module_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "closurecount", "count", "--gen", "chain:5"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert proc.stdout == "16\n"

    def test_unknown_subcommand_exits_nonzero(self):
        proc = subprocess.run(
            [sys.executable, "-m", "closurecount", "frobnicate"],
            capture_output=True, text=True)
        assert proc.returncode != 0
