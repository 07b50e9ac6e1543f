"""
End-to-end tests for the command-line front end
"""

import json
from pathlib import Path

import pandas as pd
import pytest

# Add parent directory to path for imports
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

import cli

CONFIG_DIR = Path(__file__).resolve().parents[2] / "config"


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ("XRL_OUTPUT_DIR", "XRL_WORKERS", "LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


def _write_config(tmp_path, data):
    path = tmp_path / "scenario.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


def _tree(root: Path) -> dict:
    return {p.relative_to(root).as_posix(): p.read_bytes() for p in sorted(root.rglob("*")) if p.is_file()}


class TestCommands:
    """Tests for each verb"""

    def test_squat(self, tmp_path):
        assert cli.main(["squat", "--out", str(tmp_path)]) == cli.EXIT_OK
        for name in ("sagittal", "frontal-l2", "frontal-minimax", "frontal-fixed-ankle"):
            frame = pd.read_csv(tmp_path / f"squat_{name}.csv")
            assert len(frame) == 200
            assert frame["height_m"].is_monotonic_increasing
        assert len(pd.read_csv(tmp_path / "comparison.csv")) == 200

    def test_samples_flag(self, tmp_path):
        assert cli.main(["squat", "--out", str(tmp_path), "--samples", "25"]) == cli.EXIT_OK
        assert len(pd.read_csv(tmp_path / "squat_sagittal.csv")) == 25

    def test_redistribute(self, tmp_path):
        assert cli.main(["redistribute", "--out", str(tmp_path), "--height", "1.0"]) == cli.EXIT_OK
        frame = pd.read_csv(tmp_path / "redistribution_1.000.csv")
        assert frame["is_optimum"].sum() == 1
        optimum = frame[frame["is_optimum"] == 1].iloc[0]
        assert optimum["max_abs_tau_nm"] == frame["max_abs_tau_nm"].min()

    def test_stairs(self, tmp_path):
        assert cli.main(["stairs", "--out", str(tmp_path)]) == cli.EXIT_OK
        peaks = pd.read_csv(tmp_path / "stairs_peaks.csv").set_index("joint")
        assert peaks.loc["ankle", "peak_torque_nm"] == pytest.approx(115.65, abs=0.01)
        assert peaks.loc["hip", "peak_torque_nm"] == pytest.approx(102.82, abs=0.01)
        assert len(pd.read_csv(tmp_path / "stairs.csv")) == 500

    def test_actuation_with_published_peaks(self, tmp_path):
        args = ["actuation", "--config", str(CONFIG_DIR / "xrl_published.json"), "--out", str(tmp_path)]
        assert cli.main(args) == cli.EXIT_OK
        report = pd.read_csv(tmp_path / "actuation_report.csv").set_index("name")
        assert report.loc["knee_single_motor", "required_ratio"] == pytest.approx(7.47, abs=5e-3)
        assert bool(report.loc["knee_single_motor", "transmission_stages_risk"])
        assert report["feasible"].all()

    def test_actuation_with_computed_peaks(self, tmp_path):
        assert cli.main(["actuation", "--out", str(tmp_path), "--samples", "40"]) == cli.EXIT_OK
        report = pd.read_csv(tmp_path / "actuation_report.csv")
        assert report["name"].tolist() == ["hip", "knee", "ankle"]

    def test_reconcile(self, tmp_path):
        assert cli.main(["reconcile", "--out", str(tmp_path)]) == cli.EXIT_OK
        text = (tmp_path / "reconciliation.md").read_text(encoding="utf-8")
        assert "| mismatch |" not in text

    def test_output_dir_from_environment(self, tmp_path, monkeypatch):
        monkeypatch.setenv("XRL_OUTPUT_DIR", str(tmp_path / "env"))
        assert cli.main(["stairs"]) == cli.EXIT_OK
        assert (tmp_path / "env" / "stairs.csv").exists()


class TestExitCodes:
    """Tests for failure exit codes"""

    def test_missing_config_file(self, tmp_path):
        assert cli.main(["squat", "--config", str(tmp_path / "absent.json")]) == cli.EXIT_CONFIG

    def test_invalid_config(self, tmp_path):
        config = _write_config(tmp_path, {"anthropometrics": {"crawling_attach_height": 2.0}})
        assert cli.main(["squat", "--config", config, "--out", str(tmp_path)]) == cli.EXIT_CONFIG

    def test_invalid_samples(self, tmp_path):
        assert cli.main(["squat", "--out", str(tmp_path), "--samples", "0"]) == cli.EXIT_CONFIG

    def test_invalid_workers_environment(self, tmp_path, monkeypatch):
        monkeypatch.setenv("XRL_WORKERS", "0")
        assert cli.main(["squat", "--out", str(tmp_path)]) == cli.EXIT_CONFIG

    def test_unreachable_step(self, tmp_path):
        config = _write_config(tmp_path, {"stairs": {"stair_height_m": 0.9}})
        assert cli.main(["stairs", "--config", config, "--out", str(tmp_path)]) == cli.EXIT_INFEASIBLE

    @pytest.mark.parametrize("verb", ["squat", "actuation"])
    def test_stance_with_no_common_squat_height(self, tmp_path, verb):
        """Valid config whose frontal squat band lies entirely below the sagittal one"""
        anthro = {"hip_width": 0.35, "stance_width": 0.35 + 2 * 1.36}
        config = _write_config(tmp_path, {"anthropometrics": anthro})
        assert cli.main([verb, "--config", config, "--out", str(tmp_path / "out")]) == cli.EXIT_INFEASIBLE

    def test_unreachable_redistribution_height(self, tmp_path):
        assert cli.main(["redistribute", "--out", str(tmp_path), "--height", "3.0"]) == cli.EXIT_INFEASIBLE

    def test_unknown_verb(self):
        with pytest.raises(SystemExit):
            cli.main(["walk"])


class TestDeterminism:
    """Identical inputs give identical bytes"""

    def test_all_twice(self, tmp_path):
        for run in ("a", "b"):
            assert cli.main(["all", "--out", str(tmp_path / run), "--samples", "50"]) == cli.EXIT_OK
        first, second = _tree(tmp_path / "a"), _tree(tmp_path / "b")
        assert first == second
        assert {"comparison.csv", "redistribution_1.000.csv", "stairs.csv", "actuation_report.csv",
                "reconciliation.md"} <= set(first)

    def test_worker_count_does_not_change_output(self, tmp_path):
        serial = ["all", "--out", str(tmp_path / "serial"), "--samples", "50", "--workers", "1"]
        threaded = ["all", "--out", str(tmp_path / "threaded"), "--samples", "50", "--workers", "4"]
        assert cli.main(serial) == cli.EXIT_OK
        assert cli.main(threaded) == cli.EXIT_OK
        assert _tree(tmp_path / "serial") == _tree(tmp_path / "threaded")
