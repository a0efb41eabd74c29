import csv
import io
import json
import subprocess
import sys

import pytest

from conftest import FIXTURES
from fimpl.cli import main

EX1I = FIXTURES / "example1i.fimpl"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


class TestEval:
    def test_value(self, capsys):
        assert run(capsys, "eval", EX1I, "out", 0.6, 0.2) == (0, "0.64\n", "")

    def test_corner(self, capsys):
        assert run(capsys, "eval", EX1I, "out", 1, 0)[1] == "0.0\n"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "--json", "eval", EX1I, "out", 0.6, 0.2)
        assert code == 0 and json.loads(out) == {"name": "out", "x": 0.6, "y": 0.2, "value": 0.64}

    @pytest.mark.parametrize("args", [("out", 1.5, 0), ("out", "abc", 0), ("nope", 0.5, 0.5), ("F", 0.5, 0.5)])
    def test_bad_input(self, capsys, args):
        code, out, err = run(capsys, "eval", EX1I, *args)
        assert code == 2 and out == "" and err

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "eval", tmp_path / "absent.fimpl", "out", 0, 0)
        assert code == 2 and "absent.fimpl" in err


class TestExport:
    def test_rows_and_corners(self, capsys, tmp_path):
        dest = tmp_path / "grid.csv"
        assert run(capsys, "export", EX1I, "out", "-o", dest)[0] == 0
        rows = list(csv.reader(dest.open()))
        assert rows[0] == ["x", "y", "value"] and len(rows) == 1 + 101 * 101
        table = {(float(a), float(b)): float(v) for a, b, v in rows[1:]}
        assert table[(0.0, 0.0)] == 1.0 and table[(1.0, 0.0)] == 0.0 and table[(1.0, 1.0)] == 1.0
        # row-major in x
        assert rows[1][:2] == ["0", "0"] and rows[2][:2] == ["0", "0.01"]

    def test_deterministic_bytes(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        run(capsys, "export", EX1I, "out", "-o", a)
        run(capsys, "export", EX1I, "out", "-o", b)
        assert a.read_bytes() == b.read_bytes()

    def test_seventeen_digits(self, capsys):
        code, out, _ = run(capsys, "--resolution", 4, "export", EX1I, "out", "-o", "-")
        rows = list(csv.reader(io.StringIO(out)))
        assert code == 0 and len(rows) == 17
        # x = 1/3 prints with full precision and reads back exactly
        assert float(rows[5][0]) == 1 / 3 and rows[5][0] == "%.17g" % (1 / 3)

    def test_unwritable(self, capsys, tmp_path):
        code, _, err = run(capsys, "export", EX1I, "out", "-o", tmp_path / "missing" / "x.csv")
        assert code == 2 and err

    def test_bad_resolution(self, capsys):
        assert run(capsys, "--resolution", 1, "export", EX1I, "out", "-o", "-")[0] == 2


class TestCatalog:
    def test_stable_and_sorted(self, capsys):
        _, first, _ = run(capsys, "--json", "catalog")
        _, second, _ = run(capsys, "--json", "catalog")
        assert first == second
        data = json.loads(first)
        assert list(data["implications"]) == sorted(data["implications"])
        assert {"NP", "CB", "IP", "OP"} <= set(data["implications"]["LK"])
        assert "self-Nc-dual" in data["aggregators"]["maxmin_mean"]

    def test_text(self, capsys):
        code, out, _ = run(capsys, "catalog")
        assert code == 0 and "LK" in out and "maxmin_mean" in out


class TestVerify:
    def test_holds(self, capsys):
        code, out, _ = run(capsys, "verify", FIXTURES / "cbnp.fimpl", "out", "NP", "CB")
        assert code == 0 and "NP" in out

    def test_violated_json(self, capsys):
        code, out, _ = run(capsys, "--json", "verify", FIXTURES / "zero.fimpl", "KD", "IP")
        data = json.loads(out)
        assert code == 1 and data["all_hold"] is False and data["subject"] == "KD"
        rep = data["reports"][0]
        assert rep["verdict"] == "violated" and rep["witnesses"][0]["x"] == 0.5

    def test_context_errors(self, capsys):
        assert run(capsys, "verify", EX1I, "out", "CP")[0] == 2
        assert run(capsys, "verify", EX1I, "out", "PIT")[0] == 2
        assert run(capsys, "verify", EX1I, "out", "XX")[0] == 2
        assert run(capsys, "verify", EX1I, "out", "CP", "--negation", "Nz")[0] == 2

    def test_negation_by_name(self, capsys):
        assert run(capsys, "verify", EX1I, "out", "CP", "--negation", "classical")[0] in (0, 1)

    def test_sufficiency(self, capsys):
        code, out, _ = run(capsys, "--json", "verify", "--sufficiency", FIXTURES / "cbnp.fimpl", "out", "NP")
        rep = json.loads(out)["reports"][0]
        assert code == 0 and rep["all_established"] is True and rep["conclusion"]["verdict"] == "holds_on_grid"

    def test_resolution_is_honoured(self, capsys):
        _, out, _ = run(capsys, "--json", "--resolution", 11, "verify", FIXTURES / "cbnp.fimpl", "out", "CB")
        assert json.loads(out)["reports"][0]["grid_resolution"] == 11


class TestCompareAndCheck:
    def test_compare(self, capsys):
        code, out, _ = run(capsys, "--json", "compare", FIXTURES / "methods.fimpl", "hthr")
        data = json.loads(out)
        assert code == 0 and data["method_kind"] == "threshold_horizontal" and data["max_deviation"] <= 1e-12

    def test_compare_needs_method(self, capsys):
        assert run(capsys, "compare", FIXTURES / "methods.fimpl", "LK")[0] == 2

    def test_check(self, capsys):
        assert run(capsys, "check", FIXTURES / "methods.fimpl")[0] == 0

    def test_check_reports_positions(self, capsys, tmp_path):
        bad = tmp_path / "bad.fimpl"
        bad.write_text("F = agg(max, 2);\nw = wmean(0.5, 0.6);\n")
        code, _, err = run(capsys, "check", bad)
        assert code == 2 and "2:5" in err and "1.1" in err


class TestUsage:
    def test_no_command(self, capsys):
        assert run(capsys, )[0] == 2

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_help(self, capsys):
        assert run(capsys, "--help")[0] == 0

    def test_console_script(self):
        proc = subprocess.run([sys.executable, "-m", "fimpl.cli", "eval", str(EX1I), "out", "0.6", "0.2"],
                              capture_output=True, text=True)
        assert proc.returncode == 0 and proc.stdout == "0.64\n"
