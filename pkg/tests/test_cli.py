import csv
import io
import json
import subprocess
import sys

import pytest

from catalan_lab.cli import main
from catalan_lab.oeis import (
    BUILTIN_BINDINGS,
    first_divergence,
    format_bfile,
    parse_bfile,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEnumerate:
    def test_words_plain(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--kind", "words", "--n", "4")
        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 14
        assert lines[0] == "1111"
        assert lines[-1] == "1234"

    def test_n0_single_empty_record(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--kind", "words", "--n", "0")
        assert code == 0
        assert out == "\n"

    def test_paths_plain(self, capsys):
        code, out, _ = run_cli(capsys, "enumerate", "--kind", "paths", "--n", "2")
        assert (code, out.splitlines()) == (0, ["UUDD", "UDUD"])

    def test_json_format(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "enumerate", "--kind", "words", "--n", "3",
            "--format", "json", "--stats", "area,runs-desc",
        )
        assert code == 0
        records = [json.loads(line) for line in out.splitlines()]
        assert len(records) == 5
        assert records[0] == {
            "index": 0,
            "value": "111",
            "stats": {"area": 3, "runs-desc": 3},
        }

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", "--kind", "paths", "--n", "2", "--format", "csv"
        )
        rows = list(csv.reader(io.StringIO(out)))
        assert rows == [["index", "value"], ["0", "UUDD"], ["1", "UDUD"]]

    def test_ceiling_exit_code(self, capsys):
        code, _, err = run_cli(capsys, "enumerate", "--kind", "words", "--n", "17")
        assert code == 2
        assert "16" in err

    def test_max_n_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("CATALAN_LAB_MAX_N", "2")
        code, _, err = run_cli(capsys, "enumerate", "--kind", "words", "--n", "3")
        assert code == 2 and "2" in err
        code, out, _ = run_cli(
            capsys, "--max-n", "5", "enumerate", "--kind", "words", "--n", "3"
        )
        assert code == 0 and len(out.splitlines()) == 5

    def test_stats_on_paths_rejected(self, capsys):
        code, _, err = run_cli(
            capsys,
            "enumerate", "--kind", "paths", "--n", "2", "--stats", "area",
        )
        assert code == 2 and "words" in err


class TestTotals:
    def test_sym_valley_final_row(self, capsys):
        code, out, _ = run_cli(
            capsys, "totals", "--n-max", "4", "--stats", "sym-valley",
            "--format", "csv",
        )
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0
        assert rows[0] == ["n", "stat", "brute", "closed", "match"]
        assert rows[-1] == ["4", "sym-valley", "1", "1", "true"]

    def test_area_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "totals", "--n-max", "3", "--stats", "area", "--format", "csv"
        )
        rows = list(csv.reader(io.StringIO(out)))[1:]
        assert [r[2] for r in rows] == ["1", "5", "22"]

    def test_runs_weak_asc_small(self, capsys):
        code, out, _ = run_cli(
            capsys, "totals", "--n-max", "2", "--stats", "runs-weak-asc",
            "--format", "csv",
        )
        rows = list(csv.reader(io.StringIO(out)))[1:]
        assert [r[2] for r in rows] == ["1", "2"]
        assert code == 0

    def test_csv_round_trip_reproduces_exit_code(self, capsys):
        code, out, _ = run_cli(
            capsys, "totals", "--n-max", "5", "--stats", "all", "--format", "csv"
        )
        rows = list(csv.DictReader(io.StringIO(out)))
        rechecked = all(row["brute"] == row["closed"] for row in rows)
        assert rechecked == (code == 0)
        assert all(
            (row["match"] == "true") == (row["brute"] == row["closed"])
            for row in rows
        )

    def test_parallel_matches_serial(self, capsys):
        code_a, out_a, _ = run_cli(
            capsys, "totals", "--n-max", "6", "--stats", "all", "--format", "csv"
        )
        code_b, out_b, _ = run_cli(
            capsys,
            "totals", "--n-max", "6", "--stats", "all", "--format", "csv",
            "--parallel", "2",
        )
        assert (code_a, out_a) == (code_b, out_b)

    def test_deterministic_output(self, capsys):
        _, out_a, _ = run_cli(capsys, "totals", "--n-max", "4", "--stats", "all")
        _, out_b, _ = run_cli(capsys, "totals", "--n-max", "4", "--stats", "all")
        assert out_a == out_b

    def test_unknown_stat(self, capsys):
        code, _, err = run_cli(
            capsys, "totals", "--n-max", "3", "--stats", "bogus"
        )
        assert code == 2 and "bogus" in err

    def test_empty_range(self, capsys):
        code, out, _ = run_cli(capsys, "totals", "--n-max", "0", "--stats", "area")
        assert code == 0 and out == ""

    def test_mismatch_exits_one(self, capsys, monkeypatch):
        import catalan_lab.cli as cli_mod

        real = cli_mod.closed_total
        monkeypatch.setattr(
            cli_mod, "closed_total", lambda n, s: real(n, s) + 1
        )
        code, out, _ = run_cli(
            capsys, "totals", "--n-max", "3", "--stats", "area"
        )
        assert code == 1
        assert "MISMATCH" in out


class TestVerify:
    def test_identities(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "identities", "--n-max", "60"
        )
        assert code == 0
        assert "PASSED" in out

    def test_bijections_small(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--suite", "bijections", "--n-max", "5"
        )
        assert code == 0
        assert "0 failures" in out

    def test_unknown_suite_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--suite", "bogus"])
        assert exc.value.code == 2

    def test_cap_exceeded(self, capsys):
        code, _, err = run_cli(
            capsys, "verify", "--suite", "bijections", "--n-max", "9"
        )
        assert code == 2 and "caps" in err


class TestOeis:
    def test_a000346_prefix(self, capsys):
        code, out, _ = run_cli(capsys, "oeis", "A000346", "--terms", "4")
        assert code == 0
        assert out == "1 1\n2 5\n3 22\n4 93\n"

    def test_a000984_values(self, capsys):
        code, out, _ = run_cli(capsys, "oeis", "A000984", "--terms", "3")
        assert [line.split()[1] for line in out.splitlines()] == ["1", "2", "6"]

    def test_a057552_starts_at_n3(self, capsys):
        code, out, _ = run_cli(capsys, "oeis", "A057552", "--terms", "3")
        assert [line.split()[1] for line in out.splitlines()] == ["1", "5", "20"]

    def test_custom_stat_binding(self, capsys):
        code, out, _ = run_cli(
            capsys, "oeis", "--stat", "runs-asc", "--terms", "3"
        )
        assert code == 0
        assert [line.split()[1] for line in out.splitlines()] == ["1", "3", "10"]

    def test_check_match(self, capsys, tmp_path):
        bfile = tmp_path / "b000346.txt"
        bfile.write_text("# comment\n1 1\n2 5\n3 22\n4 93\n5 386\n")
        code, out, _ = run_cli(
            capsys, "oeis", "A000346", "--terms", "5", "--check", str(bfile)
        )
        assert code == 0 and "match" in out

    def test_check_divergence(self, capsys, tmp_path):
        bfile = tmp_path / "bad.txt"
        bfile.write_text("1 1\n2 5\n3 999\n")
        code, out, _ = run_cli(
            capsys, "oeis", "A000346", "--terms", "5", "--check", str(bfile)
        )
        assert code == 1
        assert "index 3" in out and "999" in out

    def test_check_aligns_by_index_not_value(self, capsys, tmp_path):
        # a shifted file must diverge rather than silently align
        bfile = tmp_path / "shifted.txt"
        bfile.write_text("2 1\n3 5\n4 22\n")
        code, out, _ = run_cli(
            capsys, "oeis", "A000346", "--terms", "5", "--check", str(bfile)
        )
        assert code == 1

    def test_unknown_id(self, capsys):
        code, _, err = run_cli(capsys, "oeis", "A999999", "--terms", "3")
        assert code == 2

    def test_missing_binding(self, capsys):
        code, _, err = run_cli(capsys, "oeis", "--terms", "3")
        assert code == 2


class TestBfileHelpers:
    def test_format_and_parse(self):
        text = format_bfile([(1, 10), (2, 20)])
        assert text == "1 10\n2 20\n"
        assert parse_bfile("# c\n\n1 10\n2 20\n") == {1: 10, 2: 20}

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_bfile("1 2 3\n")
        with pytest.raises(ValueError):
            parse_bfile("1 x\n")
        with pytest.raises(ValueError):
            parse_bfile("1 2\n1 3\n")

    def test_first_divergence_requires_overlap(self):
        with pytest.raises(ValueError):
            first_divergence([(1, 1)], {5: 9})

    def test_builtin_bindings_have_positive_first_terms(self):
        for binding in BUILTIN_BINDINGS.values():
            index, value = binding.terms(1)[0]
            assert index == binding.offset
            assert value > 0


class TestDistribution:
    def test_runs_asc_narayana(self, capsys):
        code, out, _ = run_cli(
            capsys, "distribution", "--stat", "runs-asc", "--n", "4",
            "--format", "csv",
        )
        rows = list(csv.DictReader(io.StringIO(out)))
        assert code == 0
        assert [(r["value"], r["count"]) for r in rows] == [
            ("1", "1"), ("2", "6"), ("3", "6"), ("4", "1"),
        ]
        assert all(r["match"] == "true" for r in rows)

    def test_area_n2(self, capsys):
        code, out, _ = run_cli(
            capsys, "distribution", "--stat", "area", "--n", "2", "--format", "json"
        )
        rows = [json.loads(line) for line in out.splitlines()]
        assert rows == [{"value": 2, "count": 1}, {"value": 3, "count": 1}]

    def test_single_bucket_n1(self, capsys):
        code, out, _ = run_cli(capsys, "distribution", "--stat", "semi", "--n", "1")
        assert code == 0
        assert len(out.splitlines()) == 1


class TestModuleEntryPoint:
    def test_python_dash_m_invocation(self):
        proc = subprocess.run(
            [sys.executable, "-m", "catalan_lab.cli", "enumerate",
             "--kind", "paths", "--n", "2"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "UUDD\nUDUD\n"

    def test_exit_code_propagates(self):
        proc = subprocess.run(
            [sys.executable, "-m", "catalan_lab.cli", "enumerate",
             "--kind", "words", "--n", "99"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 2
        assert "ceiling" in proc.stderr


class TestSample:
    def test_requires_seed(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["sample", "--n", "3"])
        assert exc.value.code == 2

    def test_deterministic_with_seed(self, capsys):
        _, out_a, _ = run_cli(
            capsys, "sample", "--n", "5", "--count", "10", "--seed", "9"
        )
        _, out_b, _ = run_cli(
            capsys, "sample", "--n", "5", "--count", "10", "--seed", "9"
        )
        assert out_a == out_b
        assert len(out_a.splitlines()) == 10

    def test_draws_are_valid(self, capsys):
        from catalan_lab import Path, is_dyck

        _, out, _ = run_cli(
            capsys, "sample", "--n", "4", "--count", "50", "--seed", "3"
        )
        for line in out.splitlines():
            assert is_dyck(Path.from_string(line))
