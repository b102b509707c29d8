"""Integration tests for the ``timebin-amp`` command line."""

import json

import pytest

from timebin_amp import __version__
from timebin_amp.cli import EXIT_IO, EXIT_OK, EXIT_USAGE, main


class TestRun:
    """Test the run subcommand."""

    def test_json(self, capsys):
        assert main(["run", "--eta", "0.2", "--t", "0.25"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["command"] == "run"
        assert payload["meta"]["version"] == __version__
        assert payload["result"]["eta_out"] == pytest.approx(3 / 7)
        assert payload["result"]["g"] == pytest.approx(15 / 7)
        assert len(payload["result"]["per_pattern"]) == 16

    def test_reference_success_probability(self, capsys):
        assert main(["run", "--eta", "0.2", "--t", "0.25", "--no-meta"]) == EXIT_OK
        result = json.loads(capsys.readouterr().out)["result"]
        assert result["p_total"] == pytest.approx(0.00546875, abs=1e-12)
        assert result["p_total"] == pytest.approx(0.2 * result["p1"] + 0.8 * result["p2"], abs=1e-15)

    def test_csv(self, capsys):
        assert main(["run", "--eta", "0.4", "--t", "0.5", "--format", "csv"]) == EXIT_OK
        header, row = capsys.readouterr().out.splitlines()
        assert header.startswith("alpha,beta,eta,t,detector")
        values = dict(zip(header.split(","), row.split(",")))
        assert float(values["p_total"]) == pytest.approx(1 / 16)
        assert float(values["g"]) == pytest.approx(1.0)

    def test_out_of_range(self, capsys):
        assert main(["run", "--eta", "0.4", "--t", "1.5"]) == EXIT_USAGE
        assert "--t" in capsys.readouterr().err

    def test_unnormalized_coefficients(self, capsys):
        code = main(["run", "--eta", "0.4", "--t", "0.3", "--alpha", "0.5", "--beta", "0.5"])
        assert code == EXIT_USAGE
        assert "alpha**2 + beta**2" in capsys.readouterr().err

    def test_missing_flag(self):
        with pytest.raises(SystemExit) as exc:
            main(["run", "--t", "0.3"])
        assert exc.value.code == 2

    def test_no_command(self, capsys):
        assert main([]) == EXIT_USAGE
        assert "usage" in capsys.readouterr().out


class TestSweep:
    """Test the sweep subcommand."""

    def test_csv_to_file(self, tmp_path):
        out = tmp_path / "curves.csv"
        assert main(["sweep", "--output", str(out)]) == EXIT_OK
        lines = out.read_text().splitlines()
        assert lines[0] == "eta,t,p1,p2,p_total,eta_prime,g,source"
        assert len(lines) == 1 + 3 * 99

    def test_byte_identical(self, tmp_path):
        first, second = tmp_path / "a.csv", tmp_path / "b.csv"
        args = ["sweep", "--eta-list", "0.2,0.8", "--t-step", "0.1", "--t-min", "0.1", "--t-max", "0.9"]
        assert main([*args, "-o", str(first)]) == EXIT_OK
        assert main([*args, "-o", str(second)]) == EXIT_OK
        assert first.read_bytes() == second.read_bytes()

    def test_gnuplot(self, capsys):
        args = ["sweep", "--eta-list", "0.4", "--t-min", "0.5", "--t-max", "0.5"]
        assert main([*args, "--format", "gnuplot", "--quantity", "g"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines()[-1] == "0.5 1.0"

    def test_json_brute(self, capsys):
        args = ["sweep", "--eta-list", "0.4", "--t-min", "0.3", "--t-max", "0.3", "--source", "brute"]
        assert main([*args, "--format", "json", "--no-meta"]) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert "meta" not in payload
        assert payload["result"][0]["p_total"] == pytest.approx(0.01242)

    def test_bad_grid(self, capsys):
        assert main(["sweep", "--t-min", "0.8", "--t-max", "0.2"]) == EXIT_USAGE
        assert "--t-min" in capsys.readouterr().err

    def test_bad_eta(self):
        assert main(["sweep", "--eta-list", "0.2,1.4"]) == EXIT_USAGE

    def test_unwritable(self, tmp_path, capsys):
        target = tmp_path / "missing" / "curves.csv"
        assert main(["sweep", "--output", str(target)]) == EXIT_IO
        assert "cannot write" in capsys.readouterr().err


class TestPatterns:
    """Test the patterns subcommand."""

    def test_table_at_half(self, capsys):
        assert main(["patterns", "--eta", "0.5", "--t", "0.5"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 17
        for line in lines[1:]:
            assert [float(v) for v in line.split()[1:3]] == pytest.approx([0.00390625, 0.00390625])

    def test_json_branch(self, capsys):
        args = ["patterns", "--eta", "0.5", "--t", "0.25", "--branch", "vacuum", "--format", "json"]
        assert main(args) == EXIT_OK
        payload = json.loads(capsys.readouterr().out)
        assert payload["config"]["branch"] == "vacuum"
        assert len(payload["result"]) == 16

    def test_threshold_csv(self, capsys):
        args = ["patterns", "--eta", "0.5", "--t", "0.25", "--detector", "threshold", "--format", "csv"]
        assert main(args) == EXIT_OK
        assert len(capsys.readouterr().out.splitlines()) == 17


class TestVerify:
    """Test the verify subcommand."""

    def test_single_check(self, capsys):
        assert main(["verify", "--check", "hom-bunching"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "hom-bunching" in out
        assert "all 1 checks passed" in out

    def test_unknown_check(self):
        with pytest.raises(SystemExit) as exc:
            main(["verify", "--check", "nonsense"])
        assert exc.value.code == 2
