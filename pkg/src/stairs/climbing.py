"""
Stair Ascent Torques

While one leg is swinging up to the next step the other carries the whole
robot and payload. The ankle holds the forward lean, the stance hip holds
the torso and swing leg up over half the hip width, and the knee works
hardest as the hip descends far enough for the swing foot to clear the step.
"""

import math
from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from src.kinematics.planar_leg import JointState, jacobian
from src.model.errors import NegativeInputError, UnreachableStepError, XRLError
from src.model.sizing import make_load_case
from src.model.types import JointTorques, LegGeometry, LoadCase, PlanarWrench, ScenarioKind
from src.model.units import (
    XRL_FORWARD_LEAN_M,
    XRL_HIP_WIDTH_M,
    XRL_PAYLOAD_MASS_KG,
    XRL_ROBOT_MASS_KG,
    XRL_STAIR_HEIGHT_M,
)
from src.statics.closed_chain import leg_torques_from_wrench, sagittal_posture
from src.utils.logger import get_logger

logger = get_logger(__name__)

DEFAULT_KNEE_SAMPLES = 500


def _published_stair_load() -> LoadCase:
    return make_load_case(ScenarioKind.STAIR, XRL_ROBOT_MASS_KG, XRL_PAYLOAD_MASS_KG)


@dataclass(frozen=True)
class StairScenario:
    """Single-support stair step"""
    stair_height: float = XRL_STAIR_HEIGHT_M
    forward_lean: float = XRL_FORWARD_LEAN_M
    hip_width: float = XRL_HIP_WIDTH_M
    load: LoadCase = field(default_factory=_published_stair_load)

    def __post_init__(self):
        if not self.stair_height > 0:
            raise NegativeInputError(f"stair_height must be > 0, got {self.stair_height}")
        if self.forward_lean < 0:
            raise NegativeInputError(f"forward_lean must be >= 0, got {self.forward_lean}")
        if not self.hip_width > 0:
            raise NegativeInputError(f"hip_width must be > 0, got {self.hip_width}")
        if self.load.per_leg:
            raise XRLError("stair load must be carried by a single leg (per_leg=False)")


@dataclass(frozen=True)
class KneeSweepPoint:
    height: float
    tau_knee: float


@dataclass(frozen=True)
class StairKneeResult:
    """Worst stance-knee torque and where it happens"""
    torque: float
    height: float
    posture: JointState
    sweep: Tuple[KneeSweepPoint, ...]


@dataclass(frozen=True)
class StairPeaks:
    knee: float
    ankle: float
    hip: float
    knee_height: float = math.nan

    def as_dict(self) -> dict:
        return {"knee": self.knee, "ankle": self.ankle, "hip": self.hip}


def stair_ankle_torque(s: StairScenario) -> float:
    """Full load times the forward lean"""
    return s.load.total_vertical_load * s.forward_lean


def stair_hip_torque(s: StairScenario) -> float:
    """Full load times half the hip width"""
    return s.load.total_vertical_load * s.hip_width / 2.0


def stance_leg_torques(geom: LegGeometry, load: LoadCase, height: float) -> JointTorques:
    """Stance-leg torques with the hip straight over the ankle"""
    q = sagittal_posture(geom, height)
    return leg_torques_from_wrench(jacobian(geom, q), PlanarWrench(0.0, -load.leg_vertical_load, 0.0))


def stair_knee_torque(
    s: StairScenario,
    geom: LegGeometry,
    samples: int = DEFAULT_KNEE_SAMPLES,
) -> StairKneeResult:
    """
    Largest stance-knee torque while the hip descends by up to one step

    The hip height is swept over [l_s - stair_height, l_s] and the best
    sample is refined with a bounded scalar search between its neighbours.

    Args:
        s: stair scenario
        geom: leg link lengths
        samples: sweep resolution

    Returns:
        StairKneeResult with the torque magnitude, its height and posture,
        and the sweep it was picked from

    Raises:
        UnreachableStepError: step taller than the leg's squat band
    """
    standing = geom.standing_height
    squat_band = standing - geom.crawling_height
    if s.stair_height >= squat_band:
        raise UnreachableStepError(
            f"stair height {s.stair_height:.6g} m needs the hip below the crawling height "
            f"(squat band {squat_band:.6g} m)"
        )
    if samples < 2:
        raise XRLError(f"knee sweep needs at least 2 samples, got {samples}")

    def knee_magnitude(height: float) -> float:
        return abs(stance_leg_torques(geom, s.load, height).tau_knee)

    heights = np.linspace(standing - s.stair_height, standing, samples)
    torques = np.array([knee_magnitude(float(h)) for h in heights])
    best = int(np.argmax(torques))
    best_height, best_torque = float(heights[best]), float(torques[best])

    low, high = float(heights[max(best - 1, 0)]), float(heights[min(best + 1, samples - 1)])
    refined = minimize_scalar(
        lambda h: -knee_magnitude(h),
        bounds=(low, high),
        method="bounded",
        options={"xatol": 1e-10},
    )
    if refined.success and -refined.fun > best_torque:
        best_height, best_torque = float(refined.x), float(-refined.fun)

    logger.debug(f"stair knee peak {best_torque:.4f} Nm at hip height {best_height:.4f} m")
    return StairKneeResult(
        torque=best_torque,
        height=best_height,
        posture=sagittal_posture(geom, best_height),
        sweep=tuple(KneeSweepPoint(float(h), float(t)) for h, t in zip(heights, torques)),
    )


def stair_peaks(
    s: StairScenario,
    geom: LegGeometry,
    samples: int = DEFAULT_KNEE_SAMPLES,
    knee: Optional[StairKneeResult] = None,
) -> StairPeaks:
    """Knee, ankle and hip peaks of the stair step, reusing a knee sweep when given"""
    if knee is None:
        knee = stair_knee_torque(s, geom, samples)
    peaks = StairPeaks(
        knee=knee.torque,
        ankle=stair_ankle_torque(s),
        hip=stair_hip_torque(s),
        knee_height=knee.height,
    )
    logger.info(f"stair peaks: knee {peaks.knee:.2f}, ankle {peaks.ankle:.2f}, hip {peaks.hip:.2f} Nm")
    return peaks
