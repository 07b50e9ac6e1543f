"""
Tabular output

All data leaves the toolkit as CSV through pandas with six significant
digits and Unix line endings, so identical inputs give identical bytes.
Absent values (unreachable samples, sagittal internal wrench) are empty
cells.
"""

from pathlib import Path
from typing import Iterable, List, Sequence

import pandas as pd

from src.actuation.feasibility import FeasibilityReport
from src.stairs.climbing import StairKneeResult, StairPeaks
from src.statics.minimax import RedistributionSample
from src.statics.profiles import ComparisonRow, SquatProfile, Strategy

FLOAT_FORMAT = "%.6g"

SQUAT_COLUMNS = [
    "height_m", "tau_hip_nm", "tau_knee_nm", "tau_ankle_nm",
    "fy_n", "m_nm", "max_abs_tau_nm", "l2_norm_nm",
]
COMPARISON_COLUMNS = [
    "height_m", "sagittal_max_abs_tau_nm", "frontal_l2_max_abs_tau_nm",
    "frontal_minimax_max_abs_tau_nm", "l2_norm_ratio", "minimax_to_sagittal_ratio",
]
REDISTRIBUTION_COLUMNS = [
    "free_param_nm", "tau_hip_nm", "tau_knee_nm", "tau_ankle_nm", "max_abs_tau_nm",
    "is_optimum", "residual_knee_hip_nm", "residual_ankle_knee_nm",
]
STAIR_SWEEP_COLUMNS = ["height_m", "tau_knee_nm", "is_worst"]
STAIR_PEAK_COLUMNS = ["joint", "peak_torque_nm", "height_m"]
ACTUATION_COLUMNS = [
    "name", "joint", "peak_torque_nm", "motors", "differential", "gear_ratio",
    "required_ratio", "required_current_a", "continuous_ok", "peak_ok", "ratio_ok",
    "current_margin", "transmission_stages_risk", "motor_mass_kg", "efficiency", "feasible",
]


def write_csv(frame: pd.DataFrame, path: Path) -> Path:
    """Write a frame with the toolkit's fixed number format"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator="\n", na_rep="", encoding="utf-8")
    return path


def _frame(records: Iterable[dict], columns: Sequence[str]) -> pd.DataFrame:
    return pd.DataFrame.from_records(list(records), columns=list(columns))


def squat_profile_frame(profile: SquatProfile) -> pd.DataFrame:
    records = []
    for sample in profile.samples:
        record = {"height_m": sample.height}
        if sample.reachable:
            t = sample.torques
            record.update(
                tau_hip_nm=t.tau_hip,
                tau_knee_nm=t.tau_knee,
                tau_ankle_nm=t.tau_ankle,
                max_abs_tau_nm=sample.max_abs,
                l2_norm_nm=sample.l2_norm,
            )
            if profile.strategy is not Strategy.SAGITTAL and sample.internal_wrench is not None:
                record.update(fy_n=sample.internal_wrench.f_y, m_nm=sample.internal_wrench.m)
        records.append(record)
    return _frame(records, SQUAT_COLUMNS)


def comparison_frame(rows: List[ComparisonRow]) -> pd.DataFrame:
    return _frame(
        (
            {
                "height_m": r.height,
                "sagittal_max_abs_tau_nm": r.sagittal_max_abs,
                "frontal_l2_max_abs_tau_nm": r.frontal_l2_max_abs,
                "frontal_minimax_max_abs_tau_nm": r.frontal_minimax_max_abs,
                "l2_norm_ratio": r.l2_norm_ratio,
                "minimax_to_sagittal_ratio": r.minimax_to_sagittal_ratio,
            }
            for r in rows
        ),
        COMPARISON_COLUMNS,
    )


def redistribution_frame(samples: List[RedistributionSample]) -> pd.DataFrame:
    return _frame(
        (
            {
                "free_param_nm": s.free_param,
                "tau_hip_nm": s.torques.tau_hip,
                "tau_knee_nm": s.torques.tau_knee,
                "tau_ankle_nm": s.torques.tau_ankle,
                "max_abs_tau_nm": s.max_abs,
                "is_optimum": int(s.is_optimum),
                "residual_knee_hip_nm": s.residual_knee_hip,
                "residual_ankle_knee_nm": s.residual_ankle_knee,
            }
            for s in samples
        ),
        REDISTRIBUTION_COLUMNS,
    )


def stair_sweep_frame(result: StairKneeResult) -> pd.DataFrame:
    worst = max(range(len(result.sweep)), key=lambda i: result.sweep[i].tau_knee)
    return _frame(
        (
            {"height_m": p.height, "tau_knee_nm": p.tau_knee, "is_worst": int(i == worst)}
            for i, p in enumerate(result.sweep)
        ),
        STAIR_SWEEP_COLUMNS,
    )


def stair_peaks_frame(peaks: StairPeaks) -> pd.DataFrame:
    return _frame(
        [
            {"joint": "knee", "peak_torque_nm": peaks.knee, "height_m": peaks.knee_height},
            {"joint": "ankle", "peak_torque_nm": peaks.ankle},
            {"joint": "hip", "peak_torque_nm": peaks.hip},
        ],
        STAIR_PEAK_COLUMNS,
    )


def actuation_frame(report: FeasibilityReport) -> pd.DataFrame:
    return _frame((e.to_record() for e in report.entries), ACTUATION_COLUMNS)


def redistribution_filename(height: float) -> str:
    return f"redistribution_{height:.3f}.csv"
