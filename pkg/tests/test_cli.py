import json
import subprocess
import sys
from decimal import Decimal as D

import pytest

from llm_tco.cli import main
from llm_tco.catalog import serialize_catalog
from llm_tco.dataset import builtin_catalog

from conftest import GOLDEN_DIR

EMPTY_DOC = '{"schema_version": 1, "gpus": [], "deployments": [], "offerings": []}'


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCatalogCommand:
    def test_builtin_summary(self, capsys):
        code, out, _ = run_cli(capsys, "catalog", "--builtin")
        assert code == 0
        assert "9 deployments" in out
        assert "5 offerings" in out

    def test_missing_file_exits_1(self, capsys):
        code, _, err = run_cli(capsys, "catalog", "missing.json")
        assert code == 1
        assert "error:" in err

    def test_validate_reports_zero_violations(self, capsys):
        code, out, _ = run_cli(capsys, "catalog", "--builtin", "--validate")
        assert code == 0
        assert "0 violations" in out

    def test_json_format_matches_serializer(self, capsys):
        code, out, _ = run_cli(capsys, "catalog", "--builtin", "--format", "json")
        assert code == 0
        assert out == serialize_catalog(builtin_catalog())

    def test_invalid_catalog_file_exits_1(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        doc = json.loads(EMPTY_DOC)
        doc["gpus"] = [{"id": "g", "name": "G", "vram": 0, "rated_power": 1,
                        "accounting_power": 1, "unit_price": "1"}]
        bad.write_text(json.dumps(doc))
        code, _, err = run_cli(capsys, "catalog", str(bad))
        assert code == 1
        assert "vram" in err


class TestBreakevenCommand:
    def test_qwen30_gpt5(self, capsys):
        code, out, _ = run_cli(capsys, "breakeven", "--model", "qwen3-30b",
                               "--api", "gpt-5", "--builtin")
        assert code == 0
        assert "t*                   2.5 months" in out
        assert "tier                 Rapid" in out

    def test_kimi_gemini(self, capsys):
        code, out, _ = run_cli(capsys, "breakeven", "--model", "kimi-k2",
                               "--api", "gemini-2.5-pro", "--builtin")
        assert code == 0
        assert "t*                   63.1 months" in out

    def test_zero_hours_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as err:
            main(["breakeven", "--model", "qwen3-30b", "--api", "gpt-5",
                  "--builtin", "--hours-per-day", "0"])
        assert err.value.code == 2

    def test_unknown_model_exits_1(self, capsys):
        code, _, err = run_cli(capsys, "breakeven", "--model", "nope",
                               "--api", "gpt-5", "--builtin")
        assert code == 1
        assert "unknown model" in err

    def test_effective_workload_header(self, capsys):
        _, out, _ = run_cli(capsys, "breakeven", "--model", "qwen3-30b",
                            "--api", "gpt-5", "--builtin")
        assert out.startswith("workload: 8 h/day x 22 days/month (176 h), "
                              "electricity $0.15/kWh, output share 2/3")


class TestMatrixCommand:
    def test_paper_output_is_golden(self, capsys):
        code, out, _ = run_cli(capsys, "matrix", "--builtin", "--format", "paper")
        assert code == 0
        assert out == (GOLDEN_DIR / "matrix_paper.txt").read_text()

    def test_empty_catalog_header_only(self, capsys, tmp_path):
        path = tmp_path / "empty.json"
        path.write_text(EMPTY_DOC)
        code, out, _ = run_cli(capsys, "matrix", "--catalog", str(path),
                               "--format", "csv")
        assert code == 0
        assert out.splitlines()[0].startswith("deployment_id,offering_id,")
        assert len(out.splitlines()) == 1

    def test_csv_full_has_45_cells(self, capsys):
        code, out, _ = run_cli(capsys, "matrix", "--builtin", "--format", "csv",
                               "--precision", "full")
        assert code == 0
        assert len(out.splitlines()) == 46


class TestCapacityCommand:
    def test_paper_output_is_golden(self, capsys):
        code, out, _ = run_cli(capsys, "capacity", "--builtin", "--format", "paper")
        assert code == 0
        assert out == (GOLDEN_DIR / "capacity_paper.txt").read_text()


class TestCurvesCommand:
    def test_marker_for_exaone_opus(self, capsys):
        code, out, _ = run_cli(capsys, "curves", "--model", "exaone-32b",
                               "--api", "claude-4-opus", "--horizon", "6",
                               "--step", "0.1", "--builtin", "--format", "csv")
        assert code == 0
        assert out.splitlines()[-1] == "break_even,0.288"
        assert len(out.splitlines()) == 1 + 61 + 1  # header, samples, marker

    def test_paper_format_mentions_break_even(self, capsys):
        code, out, _ = run_cli(capsys, "curves", "--model", "qwen3-30b",
                               "--api", "gpt-5", "--horizon", "12",
                               "--step", "1", "--builtin")
        assert code == 0
        assert "break-even at 2.5 months" in out

    def test_bad_step_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "curves", "--model", "qwen3-30b",
                               "--api", "gpt-5", "--horizon", "12",
                               "--step", "0", "--builtin")
        assert code == 1
        assert "step" in err


class TestSweepCommand:
    def test_singleton_grid_matches_baseline(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--param", "electricity_rate",
                               "--from", "0.15", "--to", "0.15", "--steps", "1",
                               "--model", "qwen3-30b", "--api", "gpt-5",
                               "--builtin", "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 2
        assert lines[1].startswith("0.15,breaks_even,2.5,rapid,")

    def test_gpu_price_sweep_monotone(self, capsys):
        code, out, _ = run_cli(capsys, "sweep", "--param", "gpu_unit_price",
                               "--from", "1000", "--to", "4000", "--steps", "3",
                               "--model", "qwen3-30b", "--api", "gpt-5",
                               "--builtin", "--format", "csv", "--precision", "full")
        assert code == 0
        ts = [D(line.split(",")[2]) for line in out.splitlines()[1:]]
        assert len(ts) == 3
        assert ts[0] < ts[1] < ts[2]
        assert [D(line.split(",")[0]) for line in out.splitlines()[1:]] == \
            [D(1000), D(2500), D(4000)]


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "llm_tco.cli", "breakeven", "--model", "qwen3-30b",
         "--api", "gpt-5", "--builtin"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "2.5 months" in proc.stdout


def test_usage_error_exit_code_via_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "llm_tco.cli", "breakeven", "--model", "qwen3-30b",
         "--builtin"],
        capture_output=True, text=True)
    assert proc.returncode == 2


def test_env_var_supplies_default_catalog(capsys, tmp_path, monkeypatch):
    path = tmp_path / "cat.json"
    path.write_text(serialize_catalog(builtin_catalog()))
    monkeypatch.setenv("LLM_TCO_CATALOG", str(path))
    code = main(["catalog", "--validate"])
    out = capsys.readouterr().out
    assert code == 0
    assert "0 violations" in out


def test_explicit_flags_beat_env_var(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("LLM_TCO_CATALOG", str(tmp_path / "missing.json"))
    code = main(["catalog", "--builtin"])
    assert code == 0


def test_demand_flag_scales_scenario(capsys):
    code, out, _ = run_cli(capsys, "breakeven", "--model", "qwen3-30b",
                           "--api", "gpt-5", "--builtin",
                           "--demand", "240000000")
    assert code == 0
    assert "(3 replicas)" in out
    assert "$6000.00" in out


def test_sweep_output_share_grid(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--param", "output_share",
                           "--from", "0.1", "--to", "0.9", "--steps", "3",
                           "--model", "qwen3-30b", "--api", "gpt-5",
                           "--builtin", "--format", "csv")
    assert code == 0
    values = [line.split(",")[0] for line in out.splitlines()[1:]]
    assert values == ["0.1", "0.5", "0.9"]


def test_breakeven_csv_format(capsys):
    code, out, _ = run_cli(capsys, "breakeven", "--model", "qwen3-30b",
                           "--api", "gpt-5", "--builtin",
                           "--format", "csv", "--precision", "full")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("deployment_id,offering_id,status,t_star,")
    fields = lines[1].split(",")
    assert fields[0] == "qwen3-30b"
    assert fields[3].startswith("2.51686298")
