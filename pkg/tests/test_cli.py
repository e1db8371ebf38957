import json
import math

from typer.testing import CliRunner

from kgfs.cli import app
from kgfs.core.output import COLUMNS, read_csv_rows

runner = CliRunner()


def _csv_part(output: str) -> str:
    lines = output.splitlines()
    start = next(i for i, line in enumerate(lines) if line.startswith("model,Z,n"))
    return "\n".join(line for line in lines[start:] if line.count(",") == len(COLUMNS) - 1) + "\n"


def test_report_success():
    result = runner.invoke(app, ["report", "--Z", "1", "--n", "1", "--l", "0", "--model", "sch"])
    assert result.exit_code == 0, result.output
    assert "C_FS" in result.output
    assert f"{2 * math.e * math.pi ** (-1 / 3):.6f}" in result.output


def test_report_pair_shows_zeta():
    result = runner.invoke(app, ["report", "--Z", "55", "--n", "2", "--l", "1"])
    assert result.exit_code == 0, result.output
    assert "zeta_FS" in result.output


def test_report_supercritical_exits_numerical():
    result = runner.invoke(app, ["report", "--Z", "69", "--model", "kg"])
    assert result.exit_code == 3
    line = next(text for text in result.output.splitlines() if text.startswith("{"))
    record = json.loads(line)
    assert record["error"] == "SupercriticalChargeError"
    assert record["Z"] == 69.0 and record["l"] == 0


def test_report_cutoff_zero_exits_numerical():
    result = runner.invoke(app, ["report", "--Z", "30", "--model", "kg", "--cutoff", "0"])
    assert result.exit_code == 3
    assert "DivergenceError" in result.output


def test_report_invalid_state():
    result = runner.invoke(app, ["report", "--Z", "10", "--n", "2", "--l", "2"])
    assert result.exit_code == 2


def test_report_writes_file(tmp_path):
    out = tmp_path / "report.csv"
    result = runner.invoke(
        app, ["report", "--Z", "19", "--n", "2", "--l", "1", "--format", "csv", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    records = read_csv_rows(out)
    assert [r["model"] for r in records] == ["KG", "SCH"]
    assert records[0]["zeta_FS"] is not None


def test_scan_to_stdout():
    result = runner.invoke(app, ["scan", "--Z", "19,55", "--n", "1..2", "--l", "0"])
    assert result.exit_code == 0, result.output
    records = read_csv_rows(_csv_part(result.output))
    assert [(r["model"], r["Z"], r["n"]) for r in records] == [
        ("KG", 19.0, 1), ("SCH", 19.0, 1), ("KG", 19.0, 2), ("SCH", 19.0, 2),
        ("KG", 55.0, 1), ("SCH", 55.0, 1), ("KG", 55.0, 2), ("SCH", 55.0, 2),
    ]


def test_scan_json_file_and_svg(tmp_path):
    out, svg = tmp_path / "scan.json", tmp_path / "scan.svg"
    result = runner.invoke(
        app,
        ["scan", "--Z-range", "10:30:10", "--n", "2", "--model", "both", "--format", "json",
         "--out", str(out), "--svg", str(svg)],
    )
    assert result.exit_code == 0, result.output
    records = json.loads(out.read_text(encoding="utf-8"))
    assert len(records) == 3 * 2 * 2
    assert svg.read_text(encoding="utf-8").lstrip().startswith("<?xml")


def test_scan_partial_failure(tmp_path):
    out = tmp_path / "scan.csv"
    result = runner.invoke(app, ["scan", "--Z", "60,69", "--n", "1", "--out", str(out)])
    assert result.exit_code == 3
    records = read_csv_rows(out)
    assert len(records) == 4
    assert records[2]["error"] and records[2]["C_FS"] is None
    assert records[3]["error"] is None


def test_scan_needs_exactly_one_charge_option():
    assert runner.invoke(app, ["scan", "--n", "1"]).exit_code == 2
    assert runner.invoke(app, ["scan", "--Z", "1", "--Z-range", "1:3"]).exit_code == 2


def test_scan_rejects_single_model_zeta():
    result = runner.invoke(app, ["scan", "--Z", "10", "--model", "kg", "--measures", "C_FS,zeta"])
    assert result.exit_code == 2


def test_unknown_preset():
    assert runner.invoke(app, ["preset", "fig7"]).exit_code == 2


def test_bad_config_file(tmp_path):
    config = tmp_path / "bad.env"
    config.write_text("MASS=heavy\n", encoding="utf-8")
    result = runner.invoke(app, ["report", "--Z", "1", "--config", str(config)])
    assert result.exit_code == 2


def test_init_config(tmp_path):
    path = tmp_path / "kgfs.env"
    result = runner.invoke(app, ["init-config", str(path)])
    assert result.exit_code == 0, result.output
    assert "MASS=273.13" in path.read_text(encoding="utf-8")
    assert runner.invoke(app, ["init-config", str(path)]).exit_code == 2
    assert runner.invoke(app, ["init-config", str(path), "--force"]).exit_code == 0

    result = runner.invoke(app, ["report", "--Z", "1", "--model", "sch", "--config", str(path)])
    assert result.exit_code == 0, result.output
