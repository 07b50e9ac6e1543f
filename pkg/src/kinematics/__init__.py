"""
Planar leg kinematics
Includes: forward kinematics, squat inverse kinematics, Jacobians
"""

from .planar_leg import (
    Plane,
    KneeBranch,
    JointState,
    HipPose,
    PlanarJacobian,
    branch_for_plane,
    forward_kinematics,
    jacobian,
    singular_heights,
    reachable_height_band,
    frontal_lateral_offset,
    knee_horizontal_height,
    solve_squat_posture,
    mirror_state,
)

__all__ = [
    "Plane",
    "KneeBranch",
    "JointState",
    "HipPose",
    "PlanarJacobian",
    "branch_for_plane",
    "forward_kinematics",
    "jacobian",
    "singular_heights",
    "reachable_height_band",
    "frontal_lateral_offset",
    "knee_horizontal_height",
    "solve_squat_posture",
    "mirror_state",
]
