"""
Minimax Torque Redistribution

With the lateral squeeze force held at zero, the frontal closed chain
leaves one free parameter: the internal moment, which shows up as the hip
torque. Holding the knee-hip and ankle-knee torque differences fixed by the
vertical load,

    tau_knee  - tau_hip  = -l1 sin(theta1) mg/2
    tau_ankle - tau_knee =  l2 sin(theta3) mg/2

every member of the family is tau_hip = p, tau_knee = p + d_knee,
tau_ankle = p + d_ankle. Here theta1 is the link-1 angle measured the
other way round from the chain's bend convention (theta1 = -(ankle + knee))
and theta3 the link-2 angle (theta3 = ankle).

The objective max|p + d_i| is convex and piecewise linear in p, so the
optimum sits on a breakpoint and is found exactly by enumeration.
"""

import math
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.kinematics.planar_leg import JointState
from src.model.sizing import DEFAULT_LATERAL_OFFSET_M
from src.model.types import JointTorques, LegGeometry, LoadCase
from src.statics.closed_chain import InternalWrench, frontal_posture
from src.utils.logger import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class AnkleMode:
    """Free ankle, or ankle torque pinned to a value"""
    fixed_torque: Optional[float] = None

    @classmethod
    def free(cls) -> "AnkleMode":
        return cls(None)

    @classmethod
    def fixed(cls, torque: float) -> "AnkleMode":
        return cls(float(torque))

    @property
    def is_fixed(self) -> bool:
        return self.fixed_torque is not None


@dataclass(frozen=True)
class FamilyOffsets:
    """Torques of the family member with zero hip torque"""
    hip: float
    knee: float
    ankle: float
    theta1: float
    theta3: float

    def as_array(self) -> np.ndarray:
        """Offsets in (hip, knee, ankle) order"""
        return np.array([self.hip, self.knee, self.ankle], dtype=float)

    def member(self, hip_torque: float) -> JointTorques:
        return JointTorques(
            tau_hip=hip_torque,
            tau_knee=hip_torque + self.knee,
            tau_ankle=hip_torque + self.ankle,
        )

    def member_for_ankle(self, ankle_torque: float) -> JointTorques:
        return self.member(ankle_torque - self.ankle)


@dataclass(frozen=True)
class RedistributionSample:
    """One point of the free-parameter sweep (parametrised by ankle torque)"""
    free_param: float
    torques: JointTorques
    max_abs: float
    residual_knee_hip: float
    residual_ankle_knee: float
    is_optimum: bool = False


def family_angles(q: JointState) -> Tuple[float, float]:
    """(theta1, theta3) as used by the family constraints"""
    return -(q.theta_ankle + q.theta_knee), q.theta_ankle


def constraint_rhs(geom: LegGeometry, load: LoadCase, theta1: float, theta3: float) -> Tuple[float, float]:
    """Right-hand sides of the two family constraints"""
    half_load = load.leg_vertical_load
    return (
        -geom.l1 * math.sin(theta1) * half_load,
        geom.l2 * math.sin(theta3) * half_load,
    )


def minimax_family(
    geom: LegGeometry,
    load: LoadCase,
    height: float,
    lateral_offset: float = DEFAULT_LATERAL_OFFSET_M,
) -> FamilyOffsets:
    """Offsets of the one-parameter torque family at a frontal posture"""
    q = frontal_posture(geom, height, lateral_offset)
    theta1, theta3 = family_angles(q)
    knee_minus_hip, ankle_minus_knee = constraint_rhs(geom, load, theta1, theta3)
    return FamilyOffsets(
        hip=0.0,
        knee=knee_minus_hip,
        ankle=knee_minus_hip + ankle_minus_knee,
        theta1=theta1,
        theta3=theta3,
    )


def family_internal_wrench(torques: JointTorques) -> InternalWrench:
    """Internal wrench reproducing a family member: no squeeze, moment = hip torque"""
    return InternalWrench(0.0, torques.tau_hip)


def _max_abs(p: float, offsets: Sequence[float]) -> float:
    return max(abs(p + d) for d in offsets)


def solve_minimax(offsets: Sequence[float]) -> Tuple[float, float]:
    """
    Minimise max_i |p + d_i| over p by breakpoint enumeration

    Breakpoints are the zeros -d_i of each term and the crossings
    -(d_i + d_j)/2 where two terms trade places as the maximum.

    Returns:
        (p, objective value)
    """
    offsets = [float(d) for d in offsets]
    candidates = {-d for d in offsets}
    candidates.update(-(a + b) / 2.0 for a, b in combinations(offsets, 2))
    best_p, best_value = None, math.inf
    for p in sorted(candidates):
        value = _max_abs(p, offsets)
        if value < best_value:
            best_p, best_value = p, value
    return best_p, best_value


def minimax_torques(
    geom: LegGeometry,
    load: LoadCase,
    height: float,
    ankle_mode: AnkleMode = AnkleMode.free(),
    lateral_offset: float = DEFAULT_LATERAL_OFFSET_M,
) -> Tuple[JointTorques, float]:
    """
    Family member with the smallest peak torque magnitude

    With a fixed ankle mode the ankle torque is pinned and the rest follow
    from the constraints.

    Returns:
        (right-leg torques, achieved max |tau|)
    """
    family = minimax_family(geom, load, height, lateral_offset)
    if ankle_mode.is_fixed:
        torques = family.member_for_ankle(ankle_mode.fixed_torque)
    else:
        hip, _ = solve_minimax(family.as_array())
        torques = family.member(hip)
    return torques, torques.max_abs


def fixed_ankle_torque(load: LoadCase, foot_width: float) -> float:
    """Half the gravitational load times half the foot width"""
    return load.leg_vertical_load * foot_width / 2.0


def default_free_param_range(family: FamilyOffsets, samples: int = 401) -> np.ndarray:
    """Ankle-torque values bracketing the minimax optimum"""
    p_opt, value = solve_minimax(family.as_array())
    centre = p_opt + family.ankle
    half_width = max(2.0 * value, 10.0)
    return np.linspace(centre - half_width, centre + half_width, samples)


def redistribution_sweep(
    geom: LegGeometry,
    load: LoadCase,
    height: float,
    free_param_range: Optional[Sequence[float]] = None,
    lateral_offset: float = DEFAULT_LATERAL_OFFSET_M,
    include_optimum: bool = True,
) -> List[RedistributionSample]:
    """
    Sweep the ankle torque along the family and report every joint

    Args:
        free_param_range: ankle torques to evaluate; bracketed around the
            optimum when omitted
        include_optimum: insert the exact minimax member, marked, in order

    Returns:
        samples in ascending ankle torque
    """
    family = minimax_family(geom, load, height, lateral_offset)
    rhs_knee_hip, rhs_ankle_knee = constraint_rhs(geom, load, family.theta1, family.theta3)
    values = default_free_param_range(family) if free_param_range is None else np.asarray(free_param_range, dtype=float)

    optimum_ankle = None
    if include_optimum:
        p_opt, _ = solve_minimax(family.as_array())
        optimum_ankle = family.member(p_opt).tau_ankle
        values = np.append(values[values != optimum_ankle], optimum_ankle)

    samples = []
    for ankle in np.sort(values):
        torques = family.member_for_ankle(float(ankle))
        samples.append(RedistributionSample(
            free_param=float(ankle),
            torques=torques,
            max_abs=torques.max_abs,
            residual_knee_hip=(torques.tau_knee - torques.tau_hip) - rhs_knee_hip,
            residual_ankle_knee=(torques.tau_ankle - torques.tau_knee) - rhs_ankle_knee,
            is_optimum=optimum_ankle is not None and float(ankle) == optimum_ankle,
        ))
    logger.debug(f"redistribution sweep at {height:.4f} m: {len(samples)} samples")
    return samples
