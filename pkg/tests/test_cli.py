import subprocess
import sys
from pathlib import Path

import pytest

from srptlab.cli import main

GOLDEN = Path(__file__).parent / "golden" / "gantt_s1_n2_m2_sticky.txt"


def run(*argv, capsys=None):
    code = main(list(argv))
    out, err = capsys.readouterr() if capsys else ("", "")
    return code, out, err


class TestSimulate:
    def test_class_instance(self, capsys):
        code, out, _ = run("simulate", "--class", "S1", "--n", "2", "--m", "2", capsys=capsys)
        assert code == 0
        assert "makespan 3" in out

    def test_instance_file(self, tmp_path, capsys):
        path = tmp_path / "inst.yaml"
        path.write_text("{jobs: [{arrival: 0, processing: 5}], machines: 1}")
        code, out, _ = run("simulate", "--in", str(path), capsys=capsys)
        assert code == 0
        assert "makespan 5" in out

    def test_gantt_to_stdout_matches_golden(self, capsys):
        code, out, _ = run(
            "simulate", "--class", "S1", "--n", "2", "--m", "2",
            "--policy", "sticky", "--gantt", "ascii",
            capsys=capsys,
        )
        assert code == 0
        assert GOLDEN.read_text() in out

    def test_dump_and_svg(self, tmp_path, capsys):
        dump = tmp_path / "sched.csv"
        svg = tmp_path / "sched.svg"
        code, _, _ = run(
            "simulate", "--class", "S4", "--n", "2",
            "--dump", str(dump), "--gantt", "svg", "--out", str(svg),
            capsys=capsys,
        )
        assert code == 0
        assert dump.read_text().startswith("job,machine,start,end")
        assert svg.read_bytes().startswith(b"<svg ")

    def test_svg_to_stdout_is_usage_error(self, capsys):
        code, _, err = run(
            "simulate", "--class", "S1", "--n", "2", "--m", "2", "--gantt", "svg",
            capsys=capsys,
        )
        assert code == 1
        assert "usage error" in err

    def test_constraint_breach_is_input_error(self, capsys):
        code, _, err = run(
            "simulate", "--class", "parametric", "--n", "2", "--m", "3",
            "--processing-override", "1",
            capsys=capsys,
        )
        assert code == 1
        assert "n >= m" in err

    def test_constraint_enforcement_can_be_disabled(self, capsys):
        code, out, _ = run(
            "simulate", "--class", "parametric", "--n", "2", "--m", "3",
            "--processing-override", "1", "--no-enforce-constraints",
            capsys=capsys,
        )
        assert code == 0
        assert "makespan 2" in out

    def test_in_and_class_together_rejected(self, tmp_path, capsys):
        path = tmp_path / "inst.yaml"
        path.write_text("{jobs: [{arrival: 0, processing: 5}], machines: 1}")
        code, _, err = run(
            "simulate", "--in", str(path), "--class", "S1", "--n", "2", "--m", "2",
            capsys=capsys,
        )
        assert code == 1
        assert "exactly one" in err


class TestOpt:
    def test_indexed_rounds_method(self, capsys):
        code, out, _ = run(
            "opt", "--method", "paper", "--class", "S1", "--n", "4", "--m", "2",
            capsys=capsys,
        )
        assert code == 0
        assert "paper-opt makespan 8" in out

    def test_mcnaughton_method(self, capsys):
        code, out, _ = run(
            "opt", "--method", "mcnaughton", "--class", "S1", "--n", "4", "--m", "2",
            capsys=capsys,
        )
        assert code == 0
        assert "mcnaughton makespan 8" in out

    def test_brute_with_releases(self, capsys):
        code, out, _ = run(
            "opt", "--method", "brute", "--respect-releases",
            "--class", "S1", "--n", "3", "--m", "2",
            capsys=capsys,
        )
        assert code == 0
        assert "brute-force-with-releases makespan 5" in out

    def test_brute_over_ceiling_is_input_error(self, capsys):
        code, _, err = run(
            "opt", "--method", "brute", "--class", "S1", "--n", "8", "--m", "2",
            capsys=capsys,
        )
        assert code == 1
        assert "ceiling" in err

    def test_ceiling_flags_widen_the_search(self, capsys):
        code, out, _ = run(
            "opt", "--method", "brute", "--class", "S1", "--n", "7", "--m", "4",
            "--ceiling-jobs", "7", "--ceiling-work", "49",
            capsys=capsys,
        )
        assert code == 0
        assert "brute-force-zero-release makespan 13" in out

    def test_dump_requires_a_witness(self, tmp_path, capsys):
        code, _, err = run(
            "opt", "--method", "mcnaughton", "--class", "S1", "--n", "2", "--m", "2",
            "--dump", str(tmp_path / "w.csv"),
            capsys=capsys,
        )
        assert code == 1
        assert "witness" in err


class TestVerify:
    def test_small_range_all_pass_exits_zero(self, capsys):
        code, out, _ = run("verify-theorems", "--n-max", "2", capsys=capsys)
        assert code == 0
        assert "MISMATCH" not in out.split("Field-level")[0]

    def test_mismatches_exit_two(self, capsys):
        code, out, _ = run("verify-theorems", "--n-max", "4", "--format", "csv", capsys=capsys)
        assert code == 2
        assert "T3.1,4,reassign-all,9,10," in out

    def test_out_files(self, tmp_path, capsys):
        table = tmp_path / "report.csv"
        code, _, _ = run(
            "verify-theorems", "--n-max", "3", "--format", "csv", "--out", str(table),
            capsys=capsys,
        )
        assert code == 2
        assert table.read_text().startswith("theorem,n,policy,")
        disc = tmp_path / "report-discrepancies.txt"
        assert "T3.4" in disc.read_text()


class TestSweep:
    def test_s5_measured_rows(self, capsys):
        code, out, _ = run(
            "sweep", "--class", "S5", "--n-min", "2", "--n-max", "4",
            "--format", "csv",
            capsys=capsys,
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "class,n,m,policy,w_srpt,w_opt_zero_release,cr_num,cr_den"
        assert "S5,2,2,reassign-all,9,8,9,8" in lines

    def test_fixed_machine_count(self, capsys):
        code, out, _ = run(
            "sweep", "--class", "S1", "--n-min", "4", "--n-max", "4", "--m", "2",
            "--format", "csv",
            capsys=capsys,
        )
        assert code == 0
        assert "S1,4,2,reassign-all,9,8,9,8" in out.splitlines()


class TestRender:
    def test_round_trip_via_files(self, tmp_path, capsys):
        dump = tmp_path / "sched.csv"
        code, _, _ = run(
            "simulate", "--class", "S1", "--n", "2", "--m", "2",
            "--policy", "sticky", "--dump", str(dump),
            capsys=capsys,
        )
        assert code == 0
        code, out, _ = run("render", "--in", str(dump), capsys=capsys)
        assert code == 0
        assert GOLDEN.read_text() in out

    def test_render_with_instance_file(self, tmp_path, capsys):
        inst = tmp_path / "inst.yaml"
        inst.write_text('{class: "S1", n: 2, m: 2}')
        dump = tmp_path / "sched.csv"
        run(
            "simulate", "--in", str(inst), "--policy", "sticky", "--dump", str(dump),
            capsys=capsys,
        )
        code, out, _ = run(
            "render", "--in", str(dump), "--instance", str(inst), capsys=capsys
        )
        assert code == 0
        assert "P1: |J1 J1 .|" in out


class TestUsageAndErrors:
    def test_missing_input_is_usage_error(self, capsys):
        code, _, err = run("simulate", capsys=capsys)
        assert code == 1
        assert "usage error" in err

    def test_unknown_flag_is_usage_error(self, capsys):
        code, _, err = run("simulate", "--frobnicate", capsys=capsys)
        assert code == 1

    def test_missing_file_is_input_error(self, capsys):
        code, _, err = run("simulate", "--in", "/nonexistent/x.yaml", capsys=capsys)
        assert code == 1
        assert "error" in err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "srptlab", "--help"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "verify-theorems" in proc.stdout
