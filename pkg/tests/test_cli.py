"""
Tests for the accel-ent command-line interface.

Data is read back from ``--output`` files so that progress lines on the
diagnostic stream never mix with the parsed tables.
"""

import json
import math
from pathlib import Path

import pytest
from typer.testing import CliRunner

from accel_ent.cli.main import app, run
from accel_ent.curves import CurveTable


def run_table(
    runner: CliRunner, tmp_path: Path, *args: str, fmt: str = "csv"
) -> CurveTable:
    """Invoke the CLI with ``--output`` and parse the written table."""
    target = tmp_path / f"result.{fmt}"
    result = runner.invoke(app, ["--quiet", "-f", fmt, "-o", str(target), *args])
    assert result.exit_code == 0, result.output
    text = target.read_text()
    return CurveTable.from_json(text) if fmt == "json" else CurveTable.from_csv(text)


class TestBogoliubovCommand:
    """Tests for the bogoliubov command."""

    @pytest.mark.parametrize(
        ("stats", "expected"), [("scalar", 0.2064108), ("fermion", 0.2094067)]
    )
    def test_squeezing(
        self, runner: CliRunner, tmp_path: Path, stats: str, expected: float
    ) -> None:
        """Test r at m/a = 1 for both statistics."""
        table = run_table(
            runner, tmp_path, "bogoliubov", "--mass", "1", "--accel", "1", "-s", stats
        )
        assert table.column("r")[0] == pytest.approx(expected, abs=1e-6)
        assert abs(table.column("unitarity_residual")[0]) < 1e-12
        assert table.metadata["statistics"] == stats

    def test_negative_mass(self, runner: CliRunner) -> None:
        """Test that a non-positive mass is a usage error."""
        result = runner.invoke(app, ["bogoliubov", "--mass", "-1", "--accel", "1"])
        assert result.exit_code == 2

    def test_unknown_statistics(self, runner: CliRunner) -> None:
        """Test that an unknown statistics choice is a usage error."""
        result = runner.invoke(
            app, ["bogoliubov", "--mass", "1", "--accel", "1", "-s", "anyon"]
        )
        assert result.exit_code == 2


class TestNegativityCommands:
    """Tests for fermion-ln, scalar-ln and pairs-scan."""

    def test_fermion_inertial(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test LN_total = LN_sp = 1 and LN_sa = 0 at r_f = 0."""
        table = run_table(
            runner, tmp_path, "fermion-ln", "--rf", "0", "--scenario", "one"
        )
        assert table.columns[:4] == ("r_f", "LN_total", "LN_sp", "LN_sa")
        assert table.column("LN_total")[0] == pytest.approx(1.0, abs=1e-12)
        assert table.column("LN_sp")[0] == pytest.approx(1.0, abs=1e-12)
        assert table.column("LN_sa")[0] == pytest.approx(0.0, abs=1e-12)
        assert table.metadata["scenario"] == "one"

    def test_fermion_both(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test the both-accelerated columns at r_f = pi/4."""
        table = run_table(
            runner,
            tmp_path,
            "fermion-ln",
            "--rf",
            str(math.pi / 4),
            "--scenario",
            "both",
        )
        assert "LN_sp" not in table.columns
        assert table.column("LN_pp")[0] == pytest.approx(0.321928, abs=1e-6)

    def test_fermion_grid(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test a small grid over [0, pi/2]."""
        table = run_table(runner, tmp_path, "fermion-ln", "--grid", "5")
        assert len(table) == 5
        assert table.column("r_f")[-1] == pytest.approx(math.pi / 2)
        assert table.max_abs("residual_sp") < 1e-10

    def test_fermion_out_of_range(self, runner: CliRunner) -> None:
        """Test that r_f above pi/2 is refused before computing."""
        result = runner.invoke(app, ["fermion-ln", "--rf", "2"])
        assert result.exit_code == 2

    def test_scalar_one_pair(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test LN_sa = log2(4/3) at r = asinh(1) with one pair."""
        table = run_table(
            runner, tmp_path, "scalar-ln", "--r", "0.88137", "--pairs", "1"
        )
        assert table.column("LN_sa")[0] == pytest.approx(0.415037, abs=1e-4)
        assert table.max_abs("residual_sa") < 1e-10

    def test_scalar_from_acceleration(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that --mass/--accel select r = asinh(exp(-pi m / 2a))."""
        table = run_table(
            runner, tmp_path, "scalar-ln", "--mass", "1", "--accel", "1", "-M", "2"
        )
        assert table.column("r")[0] == pytest.approx(0.2064108, abs=1e-6)

    def test_scalar_direct_value_wins(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test the warning when both --r and --mass/--accel are given."""
        target = tmp_path / "scalar.csv"
        result = runner.invoke(
            app,
            [
                "-o",
                str(target),
                "scalar-ln",
                "--r",
                "0.5",
                "--mass",
                "1",
                "--accel",
                "1",
                "--pairs",
                "1",
            ],
        )
        assert result.exit_code == 0
        assert "Warning" in result.output
        assert CurveTable.from_csv(target.read_text()).column("r") == [0.5]

    def test_mass_without_accel(self, runner: CliRunner) -> None:
        """Test that --mass alone is a usage error."""
        result = runner.invoke(app, ["scalar-ln", "--mass", "1"])
        assert result.exit_code == 2

    def test_scalar_out_of_range(self, runner: CliRunner) -> None:
        """Test that r above asinh(1) is refused."""
        result = runner.invoke(app, ["scalar-ln", "--r", "1.2"])
        assert result.exit_code == 2

    def test_pairs_scan(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test the default scan down to M = 10."""
        table = run_table(runner, tmp_path, "pairs-scan")
        assert table.column("M") == [float(m) for m in range(1, 11)]
        assert table.column("LN_sa")[-1] < 0.01

    def test_json_matches_csv(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that both formats carry the same values."""
        args = ("pairs-scan", "--max-m", "3")
        as_csv = run_table(runner, tmp_path, *args)
        as_json = run_table(runner, tmp_path, *args, fmt="json")
        assert as_json.columns == as_csv.columns
        assert as_json.rows == as_csv.rows
        assert as_json.metadata == as_csv.metadata

    def test_output_directory(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that a directory output receives <table>.csv."""
        result = runner.invoke(
            app, ["-q", "-o", str(tmp_path), "pairs-scan", "--max-m", "2"]
        )
        assert result.exit_code == 0
        assert len(CurveTable.from_csv((tmp_path / "pairs_scan.csv").read_text())) == 2

    def test_invalid_workers(self, runner: CliRunner) -> None:
        """Test that a worker count of zero is a usage error."""
        result = runner.invoke(app, ["--workers", "0", "pairs-scan"])
        assert result.exit_code == 2

    def test_threaded(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that threaded runs give the same table."""
        serial = run_table(runner, tmp_path, "pairs-scan", "-K", "4")
        threaded = run_table(runner, tmp_path, "-j", "3", "pairs-scan", "-K", "4")
        assert serial == threaded


class TestPacketCommands:
    """Tests for spectrum, schmidt and packet."""

    def test_spectrum(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test a single acceleration."""
        table = run_table(runner, tmp_path, "spectrum", "--accel", "1")
        assert len(table) == 1
        assert abs(table.column("identity_residual")[0]) <= 1e-14

    def test_schmidt(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test K+ at v_tilde = 1."""
        table = run_table(runner, tmp_path, "schmidt", "--vtilde", "1")
        assert table.column("K_plus_closed")[0] == pytest.approx(1.11954, abs=1e-5)
        assert abs(table.column("residual_minus")[0]) < 1e-6

    def test_schmidt_at_rest(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that v_tilde = 0 is accepted and gives K+ = 1."""
        table = run_table(runner, tmp_path, "schmidt", "--vtilde", "0")
        assert table.column("K_plus_closed")[0] == pytest.approx(1.0)
        assert math.isnan(table.column("K_minus_numeric")[0])

    def test_schmidt_negative_velocity(self, runner: CliRunner) -> None:
        """Test that a negative v_tilde is a usage error."""
        result = runner.invoke(app, ["schmidt", "--vtilde", "-1"])
        assert result.exit_code == 2

    def test_schmidt_exclusive_flags(self, runner: CliRunner) -> None:
        """Test that --vtilde and --grid cannot be combined."""
        result = runner.invoke(app, ["schmidt", "--vtilde", "1", "--grid", "5"])
        assert result.exit_code == 2

    def test_packet(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test the packet grid size."""
        table = run_table(runner, tmp_path, "packet", "--grid", "3", "--time", "0")
        assert len(table) == 9
        assert table.metadata["sign"] == "+"


class TestStateAndFiles:
    """Tests for dump-state, sweep and figures."""

    def test_dump_state_json(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test the JSON amplitude dump."""
        target = tmp_path / "state.json"
        result = runner.invoke(
            app,
            [
                "-q",
                "-f",
                "json",
                "-o",
                str(target),
                "dump-state",
                "--spec",
                "fermion:0.5",
            ],
        )
        assert result.exit_code == 0
        payload = json.loads(target.read_text())
        assert payload["statistics"] == "fermion"
        assert len(payload["amplitudes"]) == 3

    def test_dump_state_csv(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test the CSV amplitude table of a restricted state."""
        table = run_table(
            runner, tmp_path, "dump-state", "--spec", "restricted:0.88137:1"
        )
        assert table.columns[-1] == "amplitude"
        assert sum(a * a for a in table.column("amplitude")) == pytest.approx(1.0)

    def test_dump_state_bad_spec(self, runner: CliRunner) -> None:
        """Test that a malformed spec is a usage error."""
        result = runner.invoke(app, ["dump-state", "--spec", "boson:1"])
        assert result.exit_code == 2

    def test_dump_state_mixed(self, runner: CliRunner) -> None:
        """Test that mixing fermion and scalar modes exits with 3."""
        result = runner.invoke(
            app, ["dump-state", "--spec", "scalar:0.5", "--spec-s", "fermion:0.5"]
        )
        assert result.exit_code == 3

    def test_sweep(self, runner: CliRunner, tmp_path: Path, sweep_file: Path) -> None:
        """Test running a YAML sweep."""
        table = run_table(runner, tmp_path, "sweep", str(sweep_file))
        assert len(table) == 3
        assert table.metadata["kind"] == "pairs"

    def test_sweep_missing_file(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that a missing file is a usage error."""
        result = runner.invoke(app, ["sweep", str(tmp_path / "missing.yaml")])
        assert result.exit_code == 2

    def test_sweep_bad_file(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that an out-of-range grid is a usage error."""
        path = tmp_path / "bad.yaml"
        path.write_text("kind: scalar\ngrid: [3.0]\n")
        result = runner.invoke(app, ["sweep", str(path)])
        assert result.exit_code == 2

    def test_figures_list(self, runner: CliRunner) -> None:
        """Test that every figure id is listed."""
        result = runner.invoke(app, ["figures", "list"])
        assert result.exit_code == 0
        for figure_id in ("bfacc", "nop_tp", "accwp_2"):
            assert figure_id in result.output

    def test_figures_all_subset(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test writing one figure table."""
        result = runner.invoke(
            app, ["figures", "all", "--only", "nop_tp", "--out", str(tmp_path)]
        )
        assert result.exit_code == 0
        assert (tmp_path / "nop_tp.csv").exists()
        assert not (tmp_path / "bfacc.csv").exists()

    def test_figures_unknown(self, runner: CliRunner, tmp_path: Path) -> None:
        """Test that an unknown figure id is a usage error."""
        result = runner.invoke(
            app, ["figures", "all", "--only", "fig_9", "--out", str(tmp_path)]
        )
        assert result.exit_code == 2


class TestRun:
    """Tests for the exit-code entry point."""

    def test_success(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test that a successful command returns 0."""
        assert run(["figures", "list"]) == 0
        assert "schno" in capsys.readouterr().out

    def test_domain_error(self) -> None:
        """Test that an out-of-domain parameter returns 2."""
        assert run(["bogoliubov", "--mass", "-1", "--accel", "1"]) == 2

    def test_mixed_statistics(self) -> None:
        """Test that mixed statistics return 3."""
        argv = ["dump-state", "--spec", "scalar:0.5", "--spec-s", "fermion:0.5"]
        assert run(argv) == 3
