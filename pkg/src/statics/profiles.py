"""
Squat Profiles and Strategy Comparison

Evaluates a torque strategy over a sweep of hip heights. Unreachable
samples are flagged and the sweep continues; output order always follows
the height order, whatever the degree of parallelism.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.kinematics.planar_leg import reachable_height_band
from src.model.errors import UnreachableHeightError, XRLError
from src.model.sizing import DEFAULT_LATERAL_OFFSET_M
from src.model.types import JointTorques, LegGeometry, LoadCase
from src.model.units import XRL_FOOT_WIDTH_M
from src.statics.closed_chain import (
    InternalWrench,
    frontal_chain_torques,
    optimal_internal_wrench,
    optimal_torques_l2,
    sagittal_squat_torques,
)
from src.statics.minimax import (
    AnkleMode,
    family_internal_wrench,
    fixed_ankle_torque,
    minimax_torques,
)
from src.utils.logger import SweepDebugger, get_logger

logger = get_logger(__name__)

DEFAULT_SWEEP_SAMPLES = 200
SWEEP_MARGIN_M = 1e-3


class Strategy(Enum):
    SAGITTAL = "sagittal"
    FRONTAL_L2 = "frontal-l2"
    FRONTAL_MINIMAX = "frontal-minimax"
    FRONTAL_FIXED_ANKLE = "frontal-fixed-ankle"


@dataclass(frozen=True)
class ProfileSample:
    """Strategy result at one height; torques is None when unreachable"""
    height: float
    torques: Optional[JointTorques]
    internal_wrench: Optional[InternalWrench] = None
    note: str = ""

    @property
    def reachable(self) -> bool:
        return self.torques is not None

    @property
    def max_abs(self) -> float:
        return self.torques.max_abs if self.torques else math.nan

    @property
    def l2_norm(self) -> float:
        return self.torques.l2_norm if self.torques else math.nan


@dataclass(frozen=True)
class SquatProfile:
    strategy: Strategy
    samples: Tuple[ProfileSample, ...]

    def __post_init__(self):
        heights = [s.height for s in self.samples]
        if any(b <= a for a, b in zip(heights, heights[1:])):
            raise XRLError("profile heights must be strictly increasing")

    @property
    def heights(self) -> np.ndarray:
        return np.array([s.height for s in self.samples])

    @property
    def reachable_count(self) -> int:
        return sum(1 for s in self.samples if s.reachable)

    def peak_max_abs(self) -> float:
        values = [s.max_abs for s in self.samples if s.reachable]
        return max(values) if values else math.nan


@dataclass(frozen=True)
class ComparisonRow:
    height: float
    sagittal_max_abs: float
    frontal_l2_max_abs: float
    frontal_minimax_max_abs: float
    l2_norm_ratio: float
    minimax_to_sagittal_ratio: float


def default_heights(
    geom: LegGeometry,
    lateral_offset: float = DEFAULT_LATERAL_OFFSET_M,
    samples: int = DEFAULT_SWEEP_SAMPLES,
    margin: float = SWEEP_MARGIN_M,
) -> np.ndarray:
    """
    Uniform heights over the band both squat planes can reach

    The band is shrunk by margin at both ends so no sample lands exactly on
    a singular posture.
    """
    sag_min, sag_max = reachable_height_band(geom, 0.0)
    front_min, front_max = reachable_height_band(geom, lateral_offset)
    low = max(sag_min, front_min) + margin
    high = min(sag_max, front_max) - margin
    if samples < 1:
        raise XRLError(f"need at least one sample, got {samples}")
    if high <= low:
        raise UnreachableHeightError(
            f"no height reachable by both squat planes: band [{low:.6g}, {high:.6g}] is empty"
        )
    if samples == 1:
        return np.array([(low + high) / 2.0])
    return np.linspace(low, high, samples)


def evaluate_strategy(
    geom: LegGeometry,
    load: LoadCase,
    height: float,
    strategy: Strategy,
    lateral_offset: float = DEFAULT_LATERAL_OFFSET_M,
    foot_width: float = XRL_FOOT_WIDTH_M,
) -> ProfileSample:
    """One strategy at one height; raises on an unreachable posture"""
    strategy = Strategy(strategy)
    if strategy is Strategy.SAGITTAL:
        return ProfileSample(height, sagittal_squat_torques(geom, load, height))
    if strategy is Strategy.FRONTAL_L2:
        iw = optimal_internal_wrench(geom, load, height, lateral_offset)
        return ProfileSample(height, optimal_torques_l2(geom, load, height, lateral_offset), iw)
    if strategy is Strategy.FRONTAL_MINIMAX:
        torques, _ = minimax_torques(geom, load, height, AnkleMode.free(), lateral_offset)
    else:
        mode = AnkleMode.fixed(fixed_ankle_torque(load, foot_width))
        torques, _ = minimax_torques(geom, load, height, mode, lateral_offset)
    return ProfileSample(height, torques, family_internal_wrench(torques))


def squat_profile(
    geom: LegGeometry,
    load: LoadCase,
    heights: Sequence[float],
    strategy: Strategy,
    lateral_offset: float = DEFAULT_LATERAL_OFFSET_M,
    foot_width: float = XRL_FOOT_WIDTH_M,
    workers: int = 1,
) -> SquatProfile:
    """
    Evaluate a strategy at every height

    Args:
        heights: strictly increasing hip heights
        workers: thread count; results are assembled in height order

    Returns:
        SquatProfile with unreachable samples flagged
    """
    strategy = Strategy(strategy)
    debugger = SweepDebugger(f"squat.{strategy.value}")
    debugger.log_config({"samples": len(heights), "lateral_offset": lateral_offset, "workers": workers})

    def sample(height: float) -> ProfileSample:
        height = float(height)
        try:
            result = evaluate_strategy(geom, load, height, strategy, lateral_offset, foot_width)
        except XRLError as e:
            logger.warning(f"{strategy.value}: sample at {height:.6g} m flagged: {e}")
            return ProfileSample(height, None, note=str(e))
        debugger.log_sample(height, result.torques.as_dict())
        return result

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            samples = tuple(pool.map(sample, heights))
    else:
        samples = tuple(sample(h) for h in heights)
    profile = SquatProfile(strategy, samples)
    debugger.log_metric("peak max |tau|", profile.peak_max_abs())
    return profile


def _ratio(numerator: float, denominator: float) -> float:
    if math.isnan(numerator) or math.isnan(denominator):
        return math.nan
    if denominator <= 1e-12:
        return 0.0
    return numerator / denominator


COMPARED_STRATEGIES = (Strategy.SAGITTAL, Strategy.FRONTAL_L2, Strategy.FRONTAL_MINIMAX)


def comparison_rows(
    geom: LegGeometry,
    load: LoadCase,
    profiles: Mapping[Strategy, SquatProfile],
    lateral_offset: float = DEFAULT_LATERAL_OFFSET_M,
) -> List[ComparisonRow]:
    """
    Peak torques of the sagittal, L2 and minimax strategies side by side

    The three profiles must share one height grid. l2_norm_ratio compares
    the L2-optimal frontal torques with the frontal torques under zero
    internal wrench.
    """
    grids = [tuple(profiles[s].heights) for s in COMPARED_STRATEGIES]
    if any(grid != grids[0] for grid in grids):
        raise XRLError("compared profiles must share one height grid")
    heights = grids[0]
    rows = []
    for i, height in enumerate(heights):
        sagittal = profiles[Strategy.SAGITTAL].samples[i]
        l2 = profiles[Strategy.FRONTAL_L2].samples[i]
        minimax = profiles[Strategy.FRONTAL_MINIMAX].samples[i]
        if l2.reachable:
            passive = frontal_chain_torques(geom, load, float(height), InternalWrench.zero(), lateral_offset)
            passive_norm = passive.l2_norm
        else:
            passive_norm = math.nan
        rows.append(ComparisonRow(
            height=float(height),
            sagittal_max_abs=sagittal.max_abs,
            frontal_l2_max_abs=l2.max_abs,
            frontal_minimax_max_abs=minimax.max_abs,
            l2_norm_ratio=_ratio(l2.l2_norm, passive_norm),
            minimax_to_sagittal_ratio=_ratio(minimax.max_abs, sagittal.max_abs),
        ))
    return rows


def compare_strategies(
    geom: LegGeometry,
    load: LoadCase,
    heights: Sequence[float],
    lateral_offset: float = DEFAULT_LATERAL_OFFSET_M,
    workers: int = 1,
) -> List[ComparisonRow]:
    """Evaluate the compared strategies over heights and tabulate them"""
    profiles = {
        strategy: squat_profile(geom, load, heights, strategy, lateral_offset, workers=workers)
        for strategy in COMPARED_STRATEGIES
    }
    return comparison_rows(geom, load, profiles, lateral_offset)


def joint_peaks(profile: SquatProfile) -> dict:
    """Largest torque magnitude per joint over the reachable samples"""
    peaks = {"hip": 0.0, "knee": 0.0, "ankle": 0.0}
    for sample in profile.samples:
        if sample.reachable:
            for joint, value in sample.torques.as_dict().items():
                peaks[joint] = max(peaks[joint], abs(value))
    return peaks
