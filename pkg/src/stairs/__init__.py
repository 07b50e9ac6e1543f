"""
Stair ascent analysis
Includes: single-support ankle, hip and knee peak torques
"""

from .climbing import (
    StairScenario,
    KneeSweepPoint,
    StairKneeResult,
    StairPeaks,
    stair_ankle_torque,
    stair_hip_torque,
    stance_leg_torques,
    stair_knee_torque,
    stair_peaks,
)

__all__ = [
    "StairScenario",
    "KneeSweepPoint",
    "StairKneeResult",
    "StairPeaks",
    "stair_ankle_torque",
    "stair_hip_torque",
    "stance_leg_torques",
    "stair_knee_torque",
    "stair_peaks",
]
