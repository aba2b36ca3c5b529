"""CLI behaviour: formats, exit codes, precondition errors."""

import json

import pytest

from mexparts.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def json_lines(out):
    return [json.loads(line) for line in out.strip().splitlines()]


class TestCompute:
    def test_p_rows(self, capsys):
        code, out, _ = run_cli(capsys, "compute", "p", "--n-max", "5")
        rows = json_lines(out)
        assert code == 0
        assert rows[0] == {"function": "p", "params": {}, "n": 0, "value": "1"}
        assert rows[-1] == {"function": "p", "params": {}, "n": 5, "value": "7"}

    def test_mex_oracle_worked_example(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "p_Aa_oracle", "--A", "2", "--a", "2", "--n-max", "5"
        )
        assert code == 0
        assert json_lines(out)[-1] == {
            "function": "p_Aa_oracle",
            "params": {"A": 2, "a": 2},
            "n": 5,
            "value": "4",
        }

    def test_singular_worked_example(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "singular", "--k", "3", "--i", "1", "--n-max", "4"
        )
        assert code == 0
        assert json_lines(out)[-1]["value"] == "10"

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "compute", "p_tt", "--t", "2", "--n-max", "5", "--format", "csv"
        )
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == "function,params,n,value"
        assert lines[-1] == "p_tt,t=2,5,4"

    def test_trunc_cap_fails_fast(self, capsys):
        code, _, err = run_cli(capsys, "compute", "singular", "--n-max", "2500")
        assert code == 2
        assert "trunc" in err

    def test_oracle_bound_is_a_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "compute", "p_Aa_oracle", "--n-max", "61")
        assert code == 2
        assert "60" in err

    def test_invalid_singular_params(self, capsys):
        code, _, err = run_cli(
            capsys, "compute", "C_ki_oracle", "--k", "4", "--i", "3", "--n-max", "5"
        )
        assert code == 2
        assert "i must satisfy" in err

    def test_usage_error_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["compute", "unknown-function", "--n-max", "3"])
        assert exc.value.code == 2


class TestVerify:
    def test_suite_passes(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "thm12", "--n-max", "40")
        assert code == 0
        rows = json_lines(out)
        assert rows and all(r["passed"] for r in rows)

    def test_parity_suite(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "parity", "--n-max", "300")
        assert code == 0
        assert all(r["passed"] for r in json_lines(out))

    def test_section1(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "section1", "--n-max", "12")
        assert code == 0

    def test_progression_negative_control_exits_1(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify",
            "progression",
            "--function",
            "p",
            "--step",
            "5",
            "--offset",
            "5",
            "--modulus",
            "5",
            "--n-max",
            "50",
        )
        assert code == 1
        (row,) = json_lines(out)
        assert not row["passed"]
        assert row["failure_count"] >= 1
        assert row["failures"][0]["argument"] == 5 * row["failures"][0]["n"] + 5

    def test_progression_positive(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "verify",
            "progression",
            "--function",
            "p_tt",
            "--t",
            "5",
            "--step",
            "5",
            "--offset",
            "4",
            "--modulus",
            "5",
            "--n-max",
            "100",
        )
        assert code == 0

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "thm6", "--n-max", "30", "--format", "csv"
        )
        lines = out.strip().splitlines()
        assert code == 0
        assert lines[0] == "suite,label,checked,skipped,failure_count,passed"
        assert all(line.endswith("True") for line in lines[1:])

    def test_parity_trunc_guard(self, capsys):
        code, _, err = run_cli(capsys, "verify", "parity", "--n-max", "2500")
        assert code == 2
        assert "trunc" in err

    def test_deterministic_output(self, capsys):
        _, first, _ = run_cli(capsys, "verify", "thm14", "--n-max", "30")
        _, second, _ = run_cli(capsys, "verify", "thm14", "--n-max", "30")
        assert first == second


class TestOracleCheck:
    def test_p_tt_agrees(self, capsys):
        code, out, _ = run_cli(
            capsys, "oracle-check", "--function", "p_tt", "--t", "2", "--n-max", "15"
        )
        assert code == 0
        rows = json_lines(out)
        assert len(rows) == 16
        assert all(r["equal"] for r in rows)

    def test_singular_agrees(self, capsys):
        code, out, _ = run_cli(
            capsys,
            "oracle-check",
            "--function",
            "singular",
            "--k",
            "4",
            "--i",
            "2",
            "--n-max",
            "15",
        )
        assert code == 0

    def test_p_agrees(self, capsys):
        code, out, _ = run_cli(capsys, "oracle-check", "--function", "p", "--n-max", "25")
        assert code == 0

    def test_oracle_bound_propagates(self, capsys):
        code, _, err = run_cli(
            capsys, "oracle-check", "--function", "p_tt", "--n-max", "70"
        )
        assert code == 2
