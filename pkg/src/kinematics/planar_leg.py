"""
Planar 3R Leg Kinematics

One XRL leg is modelled as a planar chain foot -> ankle -> knee -> hip in
either the sagittal plane (knees back) or the frontal plane (knees out).

Conventions:
- joint vectors are ordered (ankle, knee, hip), foot to body
- every joint angle is a relative bend, zero when the leg is straight up
- the hip attachment pose is (t, z, phi) relative to the ankle joint:
  t horizontal, z vertical, phi the body pitch/roll, zero when level
- in the frontal model +t points toward the body midline for the leg in
  question; the opposite leg is the mirror image
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from src.model.errors import BranchInfeasibleError, UnreachableHeightError, XRLError
from src.model.types import LegGeometry

_REACH_TOLERANCE = 1e-12
# Cosine-rule values this close to +-1 are the straight or fully folded knee
_SNAP_TOLERANCE = 1e-12


class Plane(Enum):
    SAGITTAL = "sagittal"
    FRONTAL = "frontal"


class KneeBranch(Enum):
    KNEES_BACK = "knees-back"
    KNEES_OUT = "knees-out"


_BRANCH_FOR_PLANE = {
    Plane.SAGITTAL: KneeBranch.KNEES_BACK,
    Plane.FRONTAL: KneeBranch.KNEES_OUT,
}


def branch_for_plane(plane: Plane) -> KneeBranch:
    return _BRANCH_FOR_PLANE[Plane(plane)]


@dataclass(frozen=True)
class JointState:
    """Joint angles of one leg plus its plane model"""
    theta_ankle: float
    theta_knee: float
    theta_hip: float
    plane: Plane = Plane.SAGITTAL
    knee_branch: KneeBranch = KneeBranch.KNEES_BACK

    def __post_init__(self):
        if not all(math.isfinite(a) for a in (self.theta_ankle, self.theta_knee, self.theta_hip)):
            raise XRLError("joint angles must be finite")
        if _BRANCH_FOR_PLANE[self.plane] is not self.knee_branch:
            raise BranchInfeasibleError(
                f"{self.plane.value} model requires {_BRANCH_FOR_PLANE[self.plane].value}, "
                f"got {self.knee_branch.value}"
            )

    @classmethod
    def from_vector(cls, angles, plane: Plane = Plane.SAGITTAL) -> "JointState":
        ankle, knee, hip = (float(a) for a in angles)
        plane = Plane(plane)
        return cls(ankle, knee, hip, plane, branch_for_plane(plane))

    def as_vector(self) -> np.ndarray:
        return np.array([self.theta_ankle, self.theta_knee, self.theta_hip], dtype=float)


@dataclass(frozen=True)
class HipPose:
    """Hip attachment pose relative to the ankle joint"""
    t: float
    z: float
    phi: float

    def as_vector(self) -> np.ndarray:
        return np.array([self.t, self.z, self.phi], dtype=float)


@dataclass(frozen=True)
class PlanarJacobian:
    """
    3x3 map from joint rates (ankle, knee, hip) to hip twist (t, z, phi)

    Rows are addressable as J_t, J_z and J_theta.
    """
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=float)
        if matrix.shape != (3, 3):
            raise XRLError(f"Jacobian must be 3x3, got {matrix.shape}")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)

    @property
    def J_t(self) -> np.ndarray:
        return self.matrix[0]

    @property
    def J_z(self) -> np.ndarray:
        return self.matrix[1]

    @property
    def J_theta(self) -> np.ndarray:
        return self.matrix[2]

    @property
    def J_t_theta(self) -> np.ndarray:
        """2x3 block of the horizontal and angular rows"""
        return self.matrix[[0, 2]]


def forward_kinematics(geom: LegGeometry, q: JointState) -> HipPose:
    """Hip attachment pose for a joint state"""
    shank = q.theta_ankle
    thigh = q.theta_ankle + q.theta_knee
    t = geom.l2 * math.sin(shank) + geom.l1 * math.sin(thigh)
    z = geom.l2 * math.cos(shank) + geom.l1 * math.cos(thigh)
    return HipPose(t=t, z=z, phi=thigh + q.theta_hip)


def jacobian(geom: LegGeometry, q: JointState) -> PlanarJacobian:
    """Analytic Jacobian of forward_kinematics"""
    shank = q.theta_ankle
    thigh = q.theta_ankle + q.theta_knee
    c_shank, s_shank = geom.l2 * math.cos(shank), geom.l2 * math.sin(shank)
    c_thigh, s_thigh = geom.l1 * math.cos(thigh), geom.l1 * math.sin(thigh)
    return PlanarJacobian(np.array([
        [c_shank + c_thigh, c_thigh, 0.0],
        [-(s_shank + s_thigh), -s_thigh, 0.0],
        [1.0, 1.0, 1.0],
    ]))


def singular_heights(geom: LegGeometry) -> Tuple[float, float]:
    """(standing, crawling) hip heights where the vertical load needs no torque"""
    return geom.l1 + geom.l2, geom.l2 - geom.l1


def reachable_height_band(geom: LegGeometry, lateral_offset: float = 0.0) -> Tuple[float, float]:
    """
    Hip heights reachable with the hip level and offset horizontally

    Raises:
        UnreachableHeightError: offset beyond the leg's full reach
    """
    reach = geom.l1 + geom.l2
    offset = abs(lateral_offset)
    if offset > reach:
        raise UnreachableHeightError(f"lateral offset {lateral_offset} exceeds reach {reach}")
    fold = geom.l2 - geom.l1
    z_min = math.sqrt(max(0.0, fold * fold - offset * offset))
    z_max = math.sqrt(reach * reach - offset * offset)
    return z_min, z_max


def frontal_lateral_offset(stance_width: float, hip_width: float) -> float:
    """Per-leg horizontal offset of hip over ankle for a frontal stance"""
    return (stance_width - hip_width) / 2.0


def knee_horizontal_height(geom: LegGeometry) -> float:
    """Sagittal hip height at which link 1 is horizontal over the ankle"""
    return math.sqrt(geom.l2 * geom.l2 - geom.l1 * geom.l1)


def solve_squat_posture(
    geom: LegGeometry,
    height: float,
    plane: Plane = Plane.SAGITTAL,
    lateral_offset: float = 0.0,
) -> JointState:
    """
    Closed-form inverse kinematics for a level squat posture

    Two-link cosine rule for the knee, then the ankle from the direction of
    the hip, then the hip joint absorbs the remaining orientation so the
    body stays level.

    Args:
        geom: leg link lengths
        height: hip attachment height above the ankle joint
        plane: sagittal or frontal model (selects the knee branch)
        lateral_offset: horizontal hip offset t; must be 0 for sagittal

    Returns:
        JointState placing the hip at (lateral_offset, height, 0)
    """
    plane = Plane(plane)
    if plane is Plane.SAGITTAL and lateral_offset != 0.0:
        raise BranchInfeasibleError("sagittal squat posture requires the hip over the ankle")

    z_min, z_max = reachable_height_band(geom, lateral_offset)
    if not (z_min - _REACH_TOLERANCE <= height <= z_max + _REACH_TOLERANCE):
        raise UnreachableHeightError(
            f"height {height:.6g} m outside reachable band [{z_min:.6g}, {z_max:.6g}] "
            f"for offset {lateral_offset:.6g} m"
        )

    l1, l2 = geom.l1, geom.l2
    r_squared = lateral_offset * lateral_offset + height * height
    cos_knee = (r_squared - l1 * l1 - l2 * l2) / (2.0 * l1 * l2)
    if cos_knee >= 1.0 - _SNAP_TOLERANCE:
        knee = 0.0
    elif cos_knee <= -1.0 + _SNAP_TOLERANCE:
        knee = math.pi
    else:
        knee = math.acos(cos_knee)
    ankle = math.atan2(lateral_offset, height) - math.atan2(l1 * math.sin(knee), l2 + l1 * math.cos(knee))
    hip = -(ankle + knee)
    return JointState(ankle, knee, hip, plane, branch_for_plane(plane))


def mirror_state(q: JointState) -> JointState:
    """Joint state of the mirror-image leg"""
    return JointState(-q.theta_ankle, -q.theta_knee, -q.theta_hip, q.plane, q.knee_branch)
