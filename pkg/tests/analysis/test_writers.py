"""
Unit tests for CSV output
"""

import pandas as pd
import pytest

# Add parent directory to path for imports
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.actuation import JointDrive, MotorSpec, check_actuation_feasibility
from src.analysis.reconcile import published_squat_load
from src.analysis.writers import (
    ACTUATION_COLUMNS,
    REDISTRIBUTION_COLUMNS,
    SQUAT_COLUMNS,
    STAIR_PEAK_COLUMNS,
    actuation_frame,
    redistribution_filename,
    redistribution_frame,
    squat_profile_frame,
    stair_peaks_frame,
    write_csv,
)
from src.model import LegGeometry
from src.stairs import StairScenario, stair_peaks
from src.statics import Strategy, redistribution_sweep, squat_profile


@pytest.fixture
def geom():
    return LegGeometry(l1=0.425, l2=1.025)


class TestFrames:
    """Tests for column layout"""

    def test_squat_columns(self, geom):
        profile = squat_profile(geom, published_squat_load(), [0.8, 1.0], Strategy.FRONTAL_MINIMAX)
        frame = squat_profile_frame(profile)
        assert list(frame.columns) == SQUAT_COLUMNS
        assert frame["fy_n"].tolist() == [0.0, 0.0]

    def test_sagittal_has_no_internal_wrench(self, geom):
        frame = squat_profile_frame(squat_profile(geom, published_squat_load(), [1.0], Strategy.SAGITTAL))
        assert frame["fy_n"].isna().all()
        assert frame["m_nm"].isna().all()

    def test_redistribution_columns(self, geom):
        frame = redistribution_frame(redistribution_sweep(geom, published_squat_load(), 1.0))
        assert list(frame.columns) == REDISTRIBUTION_COLUMNS
        assert frame["is_optimum"].sum() == 1

    def test_stair_peak_rows(self, geom):
        frame = stair_peaks_frame(stair_peaks(StairScenario(), geom))
        assert list(frame.columns) == STAIR_PEAK_COLUMNS
        assert frame["joint"].tolist() == ["knee", "ankle", "hip"]

    def test_actuation_columns(self):
        report = check_actuation_feasibility({"knee": 168.0}, {"knee": JointDrive(gear_ratio=3.74)}, MotorSpec())
        assert list(actuation_frame(report).columns) == ACTUATION_COLUMNS

    def test_redistribution_filename(self):
        assert redistribution_filename(1.0) == "redistribution_1.000.csv"


class TestWriteCsv:
    """Tests for the on-disk format"""

    def test_unreachable_row_is_empty_cells(self, geom, tmp_path):
        profile = squat_profile(geom, published_squat_load(), [0.3, 1.0], Strategy.SAGITTAL)
        path = write_csv(squat_profile_frame(profile), tmp_path / "squat.csv")
        lines = path.read_bytes().decode("utf-8").split("\n")
        assert lines[0] == ",".join(SQUAT_COLUMNS)
        assert lines[1] == "0.3" + "," * (len(SQUAT_COLUMNS) - 1)
        assert b"\r" not in path.read_bytes()

    def test_six_significant_digits(self, tmp_path):
        path = write_csv(pd.DataFrame({"x": [1.0 / 3.0]}), tmp_path / "out" / "x.csv")
        assert path.read_text() == "x\n0.333333\n"
