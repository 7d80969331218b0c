import csv
import io
import json

import pytest

from bohr import __version__
from bohr.derivation import run_derivation_check
from bohr.errors import VerificationError
from cli import commands, main
from cli.main import build_parser
from cli.render import Report, format_number, render_table, round_number
from cli.config import GlobalOptions

# golden file stem -> (arguments, columns that depend on roundoff or step control)
GOLDEN_RUNS = {
    "orbit_z1_n1_p3": (["orbit", "-Z", "1", "-n", "1"], []),
    "spectrum_balmer_p3": (["spectrum", "--series", "balmer"], []),
    "verify_n3_p3": (["verify", "-n", "3"], ["residual_numeric", "residual_quantization"]),
    "collapse_default_p3": (["collapse"], ["residual", "steps"]),
}
FORMAT_FILES = {"table": "txt", "csv": "csv", "json": "json"}


class TestGolden:
    def test_constants_table(self, cli, golden):
        cp = cli("constants", "--constants", "paper", "--precision", "3")
        assert cp.returncode == 0, cp.stderr
        assert cp.stdout == golden("constants_paper_p3.txt")

    def test_constants_csv(self, cli, golden):
        cp = cli("constants", "--constants", "paper", "--precision", "3", "--format", "csv")
        assert cp.returncode == 0, cp.stderr
        assert cp.stdout == golden("constants_paper_p3.csv")

    def test_constants_json(self, cli, golden):
        cp = cli("constants", "--constants", "paper", "--precision", "3", "--format", "json")
        assert cp.returncode == 0, cp.stderr
        assert json.loads(cp.stdout) == json.loads(golden("constants_paper_p3.json"))

    @pytest.mark.parametrize("fmt", FORMAT_FILES)
    @pytest.mark.parametrize("name", GOLDEN_RUNS)
    def test_subcommand(self, cli, golden, mask, name, fmt):
        args, run_dependent = GOLDEN_RUNS[name]
        cp = cli(*args, "--precision", "3", "--format", fmt)
        assert cp.returncode == 0, cp.stderr
        expected = golden(f"{name}.{FORMAT_FILES[fmt]}")
        if fmt == "json":
            expected = json.loads(expected)
        assert mask(cp.stdout, fmt, run_dependent) == expected


class TestExitCodes:
    @pytest.mark.parametrize("args", [
        ["orbit", "-n", "0"],
        ["orbit", "-Z", "-3"],
        ["verify", "-n", "0"],
        ["verify", "--step", "0.5"],
        ["spectrum", "--unit", "furlong"],
        ["spectrum", "--lower", "2", "--series", "lyman"],
        ["constants", "--precision", "18"],
        ["constants", "--constants", "codata1913"],
        ["nonsense"],
    ])
    def test_usage_errors(self, cli, args):
        cp = cli(*args)
        assert cp.returncode == 2
        assert cp.stdout == ""

    def test_collapse_start_inside_bound(self, cli):
        cp = cli("collapse", "--r0", "1e-20")
        assert cp.returncode == 2
        assert "[CLI ERROR]" in cp.stderr

    def test_collapse_step_budget(self, cli):
        cp = cli("collapse", "--max-steps", "1")
        assert cp.returncode == 1
        assert cp.stdout == ""
        assert "[CLI ERROR]" in cp.stderr

    def test_verify_passes(self, cli):
        cp = cli("verify", "-n", "20")
        assert cp.returncode == 0, cp.stderr
        assert "PASS" in cp.stdout

    @pytest.mark.parametrize("args", [
        ["collapse", "--r0", "1e120"],
        ["orbit", "-n", "1" + "0" * 160],
        ["spectrum", "--lower", "1" + "0" * 160],
    ])
    def test_out_of_range_magnitudes(self, cli, args):
        cp = cli(*args)
        assert cp.returncode == 2
        assert cp.stdout == ""
        assert "[CLI ERROR]" in cp.stderr
        assert "Traceback" not in cp.stderr

    def test_verify_residual_breach(self, monkeypatch, capsys):
        monkeypatch.setattr(commands, "QUANTIZATION_TOL", -1.0)
        assert main(["verify", "-n", "3"]) == 1
        captured = capsys.readouterr()
        assert "FAIL: 2 pi L = n h for n = 1..3" in captured.out
        assert "[CLI ERROR] residual breach at n=1" in captured.err

    def test_verify_short_batch(self, monkeypatch, capsys):
        def stop_after_first(n_max, step, k):
            raise VerificationError("stopped early", [run_derivation_check(1, step, k)])

        monkeypatch.setattr(commands, "run_derivation_checks", stop_after_first)
        assert main(["verify", "-n", "3", "--format", "json"]) == 1
        doc = json.loads(capsys.readouterr().out)
        assert [row["n"] for row in doc["data"]] == [1]

    def test_spectrum_default_lower_level(self, capsys):
        assert main(["spectrum", "--count", "1", "--format", "csv"]) == 0
        assert capsys.readouterr().out.splitlines()[1].startswith("1,3,2,")


class TestInProcess:
    def test_orbit_table(self, capsys):
        assert main(["orbit", "-n", "2"]) == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert lines[0].split() == ["Z", "n", "r_m", "v_mps", "f_hz", "Ek_J", "Ep_J", "E_J", "E_eV", "L_Js", "L_hbar"]
        assert set(lines[1]) <= {"-", " "}
        assert lines[2].split()[:2] == ["1", "2"]
        assert lines[2].split()[-1] == "2.0e+00"

    def test_orbit_csv_header(self, capsys):
        assert main(["orbit", "--format", "csv"]) == 0
        header = capsys.readouterr().out.splitlines()[0]
        assert header == "Z,n,r_m,v_mps,f_hz,Ek_J,Ep_J,E_J,E_eV,L_Js"

    def test_orbit_json(self, capsys):
        assert main(["orbit", "--format", "json", "--precision", "4"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["meta"] == {"command": "orbit", "constants": "full", "precision": 4, "version": __version__}
        (row,) = doc["data"]
        assert row["r_m"] == 5.292e-11
        assert row["E_eV"] == -13.61
        assert row["L_hbar"] == 1.0

    def test_verify_json(self, capsys):
        assert main(["verify", "-n", "5", "--format", "json", "--constants", "paper"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert [row["n"] for row in doc["data"]] == [1, 2, 3, 4, 5]
        assert all(row["minimum"] is True for row in doc["data"])
        assert all(row["residual_quantization"] <= 1e-12 for row in doc["data"])
        assert doc["meta"]["step"] == 1e-5

    def test_spectrum_units(self, capsys):
        assert main(["spectrum", "--series", "lyman", "--count", "1", "--unit", "eV", "--format", "csv"]) == 0
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert float(rows[0]["line_eV"]) == pytest.approx(10.2043, rel=1e-5)

    def test_spectrum_json_series_limit(self, capsys):
        assert main(["spectrum", "--format", "json", "--precision", "4"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["meta"]["unit"] == "nm"
        assert doc["meta"]["series_limit"]["line_nm"] == 364.5
        assert len(doc["data"]) == 4

    def test_spectrum_table_note(self, capsys):
        assert main(["spectrum", "--precision", "4"]) == 0
        out = capsys.readouterr().out
        assert out.endswith("series limit (line_nm): 3.645e+02\n")

    def test_collapse_row(self, capsys):
        assert main(["collapse", "--format", "json"]) == 0
        (row,) = json.loads(capsys.readouterr().out)["data"]
        assert 1e-10 <= row["collapse_time_s"] <= 1.1e-10
        assert row["residual"] <= 1e-8
        assert row["steps"] >= 64

    def test_collapse_trajectory(self, tmp_path, capsys):
        path = tmp_path / "t.csv"
        assert main(["collapse", "--r0", "5.29e-11", "--trajectory", str(path)]) == 0
        capsys.readouterr()
        lines = path.read_text().splitlines()
        assert lines[0] == "t_seconds,r_meters"
        assert lines[1] == "0.0,5.29e-11"

    def test_verbose_logs_to_stderr(self, capsys):
        assert main(["verify", "-n", "2", "-v"]) == 0
        captured = capsys.readouterr()
        assert "[DERIVATION] n=1" in captured.err
        assert "[DERIVATION]" not in captured.out

    def test_usage_error_exits(self):
        with pytest.raises(SystemExit) as info:
            main(["orbit", "-n", "zero"])
        assert info.value.code == 2


class TestOutput:
    def test_deterministic(self, cli):
        first = cli("spectrum", "--count", "6", "--format", "json")
        second = cli("spectrum", "--count", "6", "--format", "json")
        assert first.returncode == second.returncode == 0
        assert first.stdout == second.stdout

    def test_json_round_trip(self, cli):
        cp = cli("orbit", "-Z", "2", "-n", "3", "--format", "json", "--precision", "17")
        doc = json.loads(cp.stdout)
        assert json.loads(json.dumps(doc)) == doc

    def test_help(self, cli):
        cp = cli("--help")
        assert cp.returncode == 0
        for command in ("constants", "orbit", "verify", "spectrum", "collapse"):
            assert command in cp.stdout

    def test_version(self, cli):
        cp = cli("--version")
        assert cp.returncode == 0
        assert cp.stdout.strip() == f"bohr {__version__}"


class TestRender:
    @pytest.mark.parametrize("value, precision, text", [
        (1.602e-19, 4, "1.602e-19"),
        (1.602e-19, 6, "1.602e-19"),
        (3e8, 6, "3.0e+08"),
        (-13.605693, 3, "-1.36e+01"),
        (0.0, 3, "0.0e+00"),
        (7, 3, "7"),
        (True, 3, "yes"),
        (False, 3, "no"),
        ("J*s", 3, "J*s"),
        (2.5, 1, "2e+00"),
    ])
    def test_format_number(self, value, precision, text):
        assert format_number(value, precision) == text

    def test_round_number(self):
        assert round_number(6.62607015e-34, 3) == 6.63e-34
        assert round_number({"a": 1.23456, "b": 2}, 2) == {"a": 1.2, "b": 2}

    def test_options_bounds(self):
        with pytest.raises(ValueError):
            GlobalOptions(precision=0)
        with pytest.raises(ValueError):
            GlobalOptions(format="xml")

    def test_parser_defaults(self):
        args = build_parser().parse_args(["collapse"])
        assert args.r0 == 1e-10
        assert args.r_stop is None
        assert args.constants == "full"
        assert args.precision == 6

    def test_empty_report_table(self):
        report = Report(command="x", constants="full", columns=["n"], rows=[])
        assert render_table(report, 3) == "n\n-\n"


class TestSubcommands:
    def test_constants_two_digits(self, capsys):
        assert main(["constants", "--constants", "paper", "--precision", "2", "--format", "csv"]) == 0
        rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
        assert rows[1] == ["e", "1.6e-19", "C", "paper"]
        assert rows[4] == ["h", "6.6e-34", "J*s", "paper"]

    def test_constants_json_entries(self, capsys):
        assert main(["constants", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert [row["symbol"] for row in doc["data"]] == ["e", "m_e", "eps0", "h", "c", "hbar", "rydberg_energy"]

    def test_helium_ion_csv(self, capsys):
        assert main(["orbit", "-Z", "2", "-n", "1", "--format", "csv"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 2
        assert lines[1].startswith("2,1,")

    def test_verify_ten_rows(self, capsys):
        assert main(["verify", "-n", "10", "--format", "csv"]) == 0
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert len(rows) == 10
        assert all(row["minimum"] == "yes" for row in rows)

    def test_verify_single_row_residual(self, capsys):
        assert main(["verify", "-n", "1", "--step", "1e-5", "--format", "json"]) == 0
        (row,) = json.loads(capsys.readouterr().out)["data"]
        assert row["residual_numeric"] <= 1e-9

    def test_spectrum_first_row(self, capsys):
        assert main(["spectrum", "-Z", "1", "--lower", "2", "--count", "4", "--unit", "nm", "--format", "csv"]) == 0
        rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert float(rows[0]["line_nm"]) == pytest.approx(656.1, abs=0.05)

    def test_spectrum_single_line(self, capsys):
        assert main(["spectrum", "--lower", "2", "--count", "1", "--format", "csv"]) == 0
        single = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert main(["spectrum", "--lower", "2", "--count", "4", "--format", "csv"]) == 0
        full = list(csv.DictReader(io.StringIO(capsys.readouterr().out)))
        assert single == full[:1]

    def test_collapse_table(self, capsys):
        assert main(["collapse", "--r0", "1e-10"]) == 0
        out = capsys.readouterr().out
        assert out.rstrip().endswith("collapse in under one second")
