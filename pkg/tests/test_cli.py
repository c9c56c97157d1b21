import json
import subprocess
import sys

import pytest

from polarwd.cli import run

from conftest import HAMMING16_UNFROZEN


@pytest.fixture
def hamming16_file(tmp_path):
    path = tmp_path / "ex1.json"
    path.write_text(json.dumps({"m": 4, "unfrozen": list(HAMMING16_UNFROZEN)}))
    return str(path)


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestWef:
    def test_json_shape_and_values(self, capsys, hamming16_file):
        code, out, _ = invoke(capsys, "wef", "--spec", hamming16_file, "--strategy", "lta")
        assert code == 0
        payload = json.loads(out)
        assert payload["n"] == 16 and payload["k"] == 11
        assert payload["route"] == "lta"
        assert payload["cosets_evaluated"] == "5"
        assert payload["wef"][0] == [0, "1"]
        assert [4, "140"] in payload["wef"]
        assert all(isinstance(c, str) for _, c in payload["wef"])

    def test_out_file(self, capsys, hamming16_file, tmp_path):
        target = tmp_path / "result.json"
        code, out, _ = invoke(
            capsys, "wef", "--spec", hamming16_file, "--out", str(target)
        )
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["k"] == 11

    def test_progress_lines_on_stderr(self, capsys, hamming16_file):
        code, out, err = invoke(
            capsys, "wef", "--spec", hamming16_file, "--strategy", "direct", "--progress"
        )
        assert code == 0
        lines = [l for l in err.splitlines() if l.startswith("PROGRESS ")]
        assert lines and lines[-1] == "PROGRESS 16/16"

    def test_budget_refusal_exit_2(self, capsys, hamming16_file):
        code, _, err = invoke(
            capsys, "wef", "--spec", hamming16_file, "--budget", "2"
        )
        assert code == 2
        assert "ERROR[budget_exceeded]" in err

    def test_inadmissible_strategy_exit_1(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"m": 4, "unfrozen": [3, 15]}))
        code, _, err = invoke(capsys, "wef", "--spec", str(path), "--strategy", "lta")
        assert code == 1
        assert "ERROR[strategy_inadmissible]" in err


class TestErrors:
    def test_missing_file(self, capsys):
        code, _, err = invoke(capsys, "wef", "--spec", "/nonexistent.json")
        assert code == 1 and "ERROR[spec_unreadable]" in err

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = invoke(capsys, "cost", "--spec", str(path))
        assert code == 1 and "ERROR[spec_malformed_json]" in err

    def test_invalid_spec(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"m": 2, "unfrozen": [9]}))
        code, _, err = invoke(capsys, "cost", "--spec", str(path))
        assert code == 1 and "ERROR[spec_invalid]" in err

    def test_unknown_flag(self, capsys, hamming16_file):
        code, _, _ = invoke(capsys, "wef", "--spec", hamming16_file, "--bogus")
        assert code == 1

    def test_brute_force_guard_exit_2(self, capsys, tmp_path):
        path = tmp_path / "big.json"
        path.write_text(json.dumps({"m": 5, "frozen": [0]}))
        code, _, err = invoke(capsys, "brute-force", "--spec", str(path))
        assert code == 2 and "ERROR[guard_exceeded]" in err


class TestOtherCommands:
    def test_cost(self, capsys, hamming16_file):
        code, out, _ = invoke(capsys, "cost", "--spec", hamming16_file)
        payload = json.loads(out)
        assert code == 0
        assert payload["direct_cosets"] == "16"
        assert payload["lta_cosets"] == "5"
        assert payload["dual_lta_cosets"] == "3"

    def test_mixing_factor(self, capsys, hamming16_file):
        assert invoke(capsys, "mixing-factor", "--spec", hamming16_file) == (0, "4\n", "")

    def test_max_mixing_factor(self, capsys):
        assert invoke(capsys, "max-mixing-factor", "--m", "10")[:2] == (0, "721\n")

    def test_max_mixing_factor_rate_half(self, capsys):
        assert invoke(capsys, "max-mixing-factor", "--m", "10", "--rate-half")[:2] == (
            0,
            "450\n",
        )

    def test_compare(self, capsys):
        assert invoke(capsys, "compare", "--f", "x0x3", "--g", "x2x3", "--m", "4")[:2] == (
            0,
            "f_precedes_g\n",
        )

    def test_compare_bad_monomial(self, capsys):
        code, _, err = invoke(capsys, "compare", "--f", "x9", "--g", "x1", "--m", "4")
        assert code == 1 and "ERROR[bad_monomial]" in err

    def test_is_decreasing(self, capsys, hamming16_file, tmp_path):
        code, out, _ = invoke(capsys, "is-decreasing", "--spec", hamming16_file)
        assert code == 0 and json.loads(out) == {"decreasing": True}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"m": 4, "unfrozen": [3, 15]}))
        code, out, _ = invoke(capsys, "is-decreasing", "--spec", str(path))
        payload = json.loads(out)
        assert code == 0 and payload["decreasing"] is False
        assert "counterexample" in payload

    def test_brute_force_matches_wef(self, capsys, hamming16_file):
        _, direct, _ = invoke(capsys, "wef", "--spec", hamming16_file)
        _, brute, _ = invoke(capsys, "brute-force", "--spec", hamming16_file)
        assert json.loads(direct)["wef"] == json.loads(brute)["wef"]

    def test_dual_round_trip(self, capsys, hamming16_file):
        code, out, _ = invoke(capsys, "dual", "--spec", hamming16_file)
        assert code == 0
        payload = json.loads(out)
        assert payload["m"] == 4 and len(payload["frozen"]) == 11


class TestEntryPoint:
    def test_console_script_runs(self):
        proc = subprocess.run(
            [sys.executable, "-m", "polarwd.cli", "max-mixing-factor", "--m", "5"],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0 and proc.stdout == "11\n"
