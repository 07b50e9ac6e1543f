"""
Analysis Commands

Each command runs one analysis for a built Scenario, writes its files under
the scenario's output directory and returns a CommandResult the CLI can
summarise. Commands share no state.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from src.actuation.feasibility import FeasibilityReport, check_actuation_feasibility
from src.analysis.config import Scenario
from src.analysis.reconcile import reconcile, reconciliation_markdown
from src.analysis.writers import (
    actuation_frame,
    comparison_frame,
    redistribution_filename,
    redistribution_frame,
    squat_profile_frame,
    stair_peaks_frame,
    stair_sweep_frame,
    write_csv,
)
from src.model.errors import UnreachableHeightError
from src.stairs.climbing import stair_knee_torque, stair_peaks
from src.statics.minimax import default_free_param_range, minimax_family, redistribution_sweep
from src.statics.profiles import (
    Strategy,
    comparison_rows,
    default_heights,
    joint_peaks,
    squat_profile,
)
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass
class CommandResult:
    """Files written by a command plus headline numbers"""
    name: str
    files: List[Path] = field(default_factory=list)
    summary: Dict[str, object] = field(default_factory=dict)


def cmd_squat(scenario: Scenario) -> CommandResult:
    """
    Torque profiles of every squat strategy plus the comparison table

    Raises:
        UnreachableHeightError: no sample of any strategy was reachable
    """
    out = scenario.output_dir
    heights = default_heights(scenario.geometry, scenario.lateral_offset, scenario.samples)
    result = CommandResult("squat")

    profiles = {}
    for strategy in Strategy:
        profile = squat_profile(
            scenario.geometry,
            scenario.squat_load,
            heights,
            strategy,
            scenario.lateral_offset,
            scenario.anthropometrics.foot_width,
            workers=scenario.workers,
        )
        profiles[strategy] = profile
        result.files.append(write_csv(squat_profile_frame(profile), out / f"squat_{strategy.value}.csv"))
        result.summary[f"{strategy.value} peak |tau| [Nm]"] = profile.peak_max_abs()

    if all(p.reachable_count == 0 for p in profiles.values()):
        raise UnreachableHeightError("every squat sample is unreachable")

    rows = comparison_rows(scenario.geometry, scenario.squat_load, profiles, scenario.lateral_offset)
    result.files.append(write_csv(comparison_frame(rows), out / "comparison.csv"))
    result.summary["samples"] = len(heights)
    logger.info(f"Squat profiles written for {len(heights)} heights")
    return result


def cmd_redistribute(scenario: Scenario, height: Optional[float] = None) -> CommandResult:
    """Sweep of the minimax family's free parameter at one height"""
    if height is None:
        height = scenario.config.sweep.redistribution_height_m
    geom, load, offset = scenario.geometry, scenario.squat_load, scenario.lateral_offset
    family = minimax_family(geom, load, height, offset)
    values = default_free_param_range(family, scenario.config.sweep.free_param_samples)
    samples = redistribution_sweep(geom, load, height, values, offset)

    path = write_csv(redistribution_frame(samples), scenario.output_dir / redistribution_filename(height))
    optimum = next(s for s in samples if s.is_optimum)
    logger.info(f"Redistribution at {height:.3f} m: optimum max |tau| {optimum.max_abs:.2f} Nm")
    return CommandResult(
        "redistribute",
        [path],
        {
            "height [m]": height,
            "optimum max |tau| [Nm]": optimum.max_abs,
            "optimum hip/knee/ankle [Nm]": (
                optimum.torques.tau_hip, optimum.torques.tau_knee, optimum.torques.tau_ankle,
            ),
        },
    )


def cmd_stairs(scenario: Scenario) -> CommandResult:
    """Stair ascent peaks and the stance-knee sweep"""
    knee_samples = scenario.config.stairs.knee_samples
    knee = stair_knee_torque(scenario.stair, scenario.geometry, knee_samples)
    peaks = stair_peaks(scenario.stair, scenario.geometry, knee_samples, knee)
    out = scenario.output_dir
    files = [
        write_csv(stair_sweep_frame(knee), out / "stairs.csv"),
        write_csv(stair_peaks_frame(peaks), out / "stairs_peaks.csv"),
    ]
    return CommandResult(
        "stairs",
        files,
        {"knee [Nm]": peaks.knee, "ankle [Nm]": peaks.ankle, "hip [Nm]": peaks.hip, "knee height [m]": peaks.knee_height},
    )


def computed_peaks(scenario: Scenario) -> Dict[str, float]:
    """
    Per-joint sizing peaks from the analyses

    The larger of the stair peak and the frontal-minimax squat peak, the
    squat strategy the legs are meant to use under load.
    """
    heights = default_heights(scenario.geometry, scenario.lateral_offset, scenario.samples)
    profile = squat_profile(
        scenario.geometry,
        scenario.squat_load,
        heights,
        Strategy.FRONTAL_MINIMAX,
        scenario.lateral_offset,
        workers=scenario.workers,
    )
    squat = joint_peaks(profile)
    stair = stair_peaks(scenario.stair, scenario.geometry, scenario.config.stairs.knee_samples).as_dict()
    return {joint: max(squat[joint], stair[joint]) for joint in ("hip", "knee", "ankle")}


def actuation_report(scenario: Scenario, peaks: Optional[Dict[str, float]] = None) -> FeasibilityReport:
    if peaks is None:
        peaks = scenario.design_peaks or computed_peaks(scenario)
    return check_actuation_feasibility(
        peaks,
        scenario.drives,
        scenario.motor,
        efficiency=scenario.config.actuation.efficiency,
        single_stage_max_ratio=scenario.config.actuation.single_stage_max_ratio,
    )


def cmd_actuation(scenario: Scenario, peaks: Optional[Dict[str, float]] = None) -> CommandResult:
    """Required ratio, current and verdict for every drive"""
    report = actuation_report(scenario, peaks)
    path = write_csv(actuation_frame(report), scenario.output_dir / "actuation_report.csv")
    summary = {
        f"{e.name} ratio / current": (e.required_ratio, e.required_current_a) for e in report.entries
    }
    summary["motor mass per robot [kg]"] = report.mass.per_robot
    summary["feasible"] = report.feasible
    return CommandResult("actuation", [path], summary)


def cmd_reconcile(scenario: Scenario) -> CommandResult:
    """Published figures against computed values, as markdown"""
    rows, parameters = reconcile(
        scenario.squat_load,
        scenario.stair,
        scenario.anthropometrics.standing_attach_height,
        scenario.anthropometrics.foot_width,
        scenario.motor,
        scenario.config.stairs.knee_samples,
    )
    path = scenario.output_dir / "reconciliation.md"
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(reconciliation_markdown(rows, parameters))
    summary = {r.quantity: (r.published, r.computed, r.status) for r in rows}
    return CommandResult("reconcile", [path], summary)


def cmd_all(scenario: Scenario) -> List[CommandResult]:
    """Every command into one output tree"""
    results = [
        cmd_squat(scenario),
        cmd_redistribute(scenario),
        cmd_stairs(scenario),
        cmd_actuation(scenario),
        cmd_reconcile(scenario),
    ]
    logger.info(f"All analyses written to {scenario.output_dir}")
    return results
