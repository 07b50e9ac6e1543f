"""
Squat Statics and Closed-Chain Load Sharing

Joint torques follow the Jacobian transpose law tau = J^T w, where w is the
wrench the load applies at the hip attachment. In the sagittal squat each
leg is an open chain carrying half the load. In the frontal squat the two
legs, the ground and the body close a loop, so a lateral squeeze force f_y
and an internal moment m can circulate without disturbing balance: the
right leg carries (+f_y, +m), the left leg (-f_y, -m).
"""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from src.kinematics.planar_leg import (
    JointState,
    Plane,
    PlanarJacobian,
    forward_kinematics,
    jacobian,
    solve_squat_posture,
)
from src.model.errors import XRLError
from src.model.sizing import DEFAULT_LATERAL_OFFSET_M
from src.model.types import JointTorques, LegGeometry, LoadCase, PlanarWrench
from src.utils.logger import get_logger

logger = get_logger(__name__)

# Singular values below this fraction of the largest are treated as zero
PINV_RTOL = 1e-10


@dataclass(frozen=True)
class InternalWrench:
    """Squeeze force and moment circulating in the closed chain"""
    f_y: float
    m: float

    def __post_init__(self):
        if not (math.isfinite(self.f_y) and math.isfinite(self.m)):
            raise XRLError("internal wrench must be finite")

    @classmethod
    def zero(cls) -> "InternalWrench":
        return cls(0.0, 0.0)

    def as_vector(self) -> np.ndarray:
        return np.array([self.f_y, self.m], dtype=float)

    def left(self) -> "InternalWrench":
        """Share carried by the left leg"""
        return InternalWrench(-self.f_y, -self.m)


def pseudoinverse(matrix: np.ndarray, rtol: float = PINV_RTOL) -> np.ndarray:
    """Moore-Penrose pseudoinverse by SVD, rank-robust near singular postures"""
    return np.linalg.pinv(np.asarray(matrix, dtype=float), rtol=rtol)


def leg_torques_from_wrench(J: PlanarJacobian, w: PlanarWrench) -> JointTorques:
    """tau = J^T w"""
    return JointTorques.from_vector(J.matrix.T @ w.as_vector())


def sagittal_posture(geom: LegGeometry, height: float) -> JointState:
    return solve_squat_posture(geom, height, Plane.SAGITTAL, 0.0)


def frontal_posture(geom: LegGeometry, height: float, lateral_offset: float = DEFAULT_LATERAL_OFFSET_M) -> JointState:
    return solve_squat_posture(geom, height, Plane.FRONTAL, lateral_offset)


def sagittal_wrench(load: LoadCase) -> PlanarWrench:
    """Per-leg wrench: half the vertical load plus half the rearing moment"""
    return PlanarWrench(0.0, -load.leg_vertical_load, load.leg_assist_moment)


def sagittal_squat_torques(geom: LegGeometry, load: LoadCase, height: float) -> JointTorques:
    """Per-leg torques of the knees-back squat at a hip height"""
    q = sagittal_posture(geom, height)
    return leg_torques_from_wrench(jacobian(geom, q), sagittal_wrench(load))


def frontal_chain_torques(
    geom: LegGeometry,
    load: LoadCase,
    height: float,
    iw: InternalWrench,
    lateral_offset: float = DEFAULT_LATERAL_OFFSET_M,
) -> JointTorques:
    """
    Right-leg torques of the knees-out squat for a given internal wrench

    tau = J_yt^T [f_y, m] - J_z^T mg/2. The left leg is the mirror image.
    """
    q = frontal_posture(geom, height, lateral_offset)
    w = PlanarWrench(iw.f_y, -load.leg_vertical_load, iw.m)
    return leg_torques_from_wrench(jacobian(geom, q), w)


def frontal_leg_pair(
    geom: LegGeometry,
    load: LoadCase,
    height: float,
    iw: InternalWrench,
    lateral_offset: float = DEFAULT_LATERAL_OFFSET_M,
) -> Tuple[JointTorques, JointTorques]:
    """(right, left) torques of the frontal squat"""
    right = frontal_chain_torques(geom, load, height, iw, lateral_offset)
    return right, right.mirrored()


def _gravity_only_torques(J: PlanarJacobian, load: LoadCase) -> np.ndarray:
    return -J.J_z * load.leg_vertical_load


def l2_projector(J: PlanarJacobian) -> np.ndarray:
    """I - J_yt^T (J_yt^T)^#, the projector onto torques no internal wrench can cancel"""
    a = J.J_t_theta.T
    return np.eye(3) - a @ pseudoinverse(a)


def optimal_internal_wrench(
    geom: LegGeometry,
    load: LoadCase,
    height: float,
    lateral_offset: float = DEFAULT_LATERAL_OFFSET_M,
) -> InternalWrench:
    """
    Internal wrench minimising the sum of squared joint torques

    [f_y, m] = -(J_yt^T)^# tau_sag, where tau_sag is the frontal torque with
    no internal wrench.
    """
    q = frontal_posture(geom, height, lateral_offset)
    J = jacobian(geom, q)
    tau_sag = _gravity_only_torques(J, load)
    f_y, m = -pseudoinverse(J.J_t_theta.T) @ tau_sag
    return InternalWrench(float(f_y), float(m))


def optimal_torques_l2(
    geom: LegGeometry,
    load: LoadCase,
    height: float,
    lateral_offset: float = DEFAULT_LATERAL_OFFSET_M,
) -> JointTorques:
    """Minimum-norm right-leg torques, tau0 = (I - J_yt^T J_yt^T#) tau_sag"""
    q = frontal_posture(geom, height, lateral_offset)
    J = jacobian(geom, q)
    return JointTorques.from_vector(l2_projector(J) @ _gravity_only_torques(J, load))


def torque_objective(torques: JointTorques) -> float:
    """V = tau^T tau"""
    v = torques.as_vector()
    return float(v @ v)


@dataclass(frozen=True)
class GroundReaction:
    """Reaction the ground applies to one foot, in the global frame"""
    f_y: float
    f_z: float
    moment: float


def _to_global(wrench: np.ndarray, side: float) -> np.ndarray:
    # Leg frame +t points inboard; the right leg sits at +y so its +t is -y.
    # Positive leg-frame rotation turns +z toward +t.
    f_t, f_n, m = wrench
    return np.array([-side * f_t, f_n, side * m])


def reconstruct_wrench(J: PlanarJacobian, torques: JointTorques) -> np.ndarray:
    """Hip wrench consistent with the torques (least squares on J^T w = tau)"""
    solution, *_ = np.linalg.lstsq(J.matrix.T, torques.as_vector(), rcond=None)
    return solution


def ground_reactions(
    geom: LegGeometry,
    q: JointState,
    torques: JointTorques,
    hip_width: float,
) -> Tuple[GroundReaction, GroundReaction]:
    """
    Ground reactions at both feet rebuilt from right-leg torques

    The hip wrench is recovered from the torques, carried down the
    massless leg, and reversed at the foot. The left leg is the mirror image
    of the right; in the sagittal model both legs share one frame. Only
    meaningful away from singular postures, where J^T is invertible.
    """
    J = jacobian(geom, q)
    pose = forward_kinematics(geom, q)
    leg_wrench = reconstruct_wrench(J, torques)

    reactions = []
    for side in (1.0, -1.0):
        if q.plane is Plane.SAGITTAL:
            f_y, f_z, m = leg_wrench
            hip_y = pose.t
            ankle_y = 0.0
        else:
            # mirrored leg carries the same leg-frame wrench
            f_y, f_z, m = _to_global(leg_wrench, side)
            hip_y = side * hip_width / 2.0
            ankle_y = hip_y + side * pose.t
        # moment of the hip force about the ankle, global (y, z) plane
        lever_y, lever_z = hip_y - ankle_y, pose.z
        moment_at_ankle = m + lever_y * f_z - lever_z * f_y
        reactions.append(GroundReaction(f_y=-f_y, f_z=-f_z, moment=-moment_at_ankle))
    return reactions[0], reactions[1]


def equilibrium_residual(
    geom: LegGeometry,
    load: LoadCase,
    q: JointState,
    torques: JointTorques,
    hip_width: float,
) -> float:
    """
    Net force and moment imbalance of the two-leg system

    The ground reactions, taken about the global origin under the body,
    must balance the external load (weight plus any rearing moment).
    """
    pose = forward_kinematics(geom, q)
    right, left = ground_reactions(geom, q, torques, hip_width)
    total = np.zeros(3)
    for side, reaction in ((1.0, right), (-1.0, left)):
        if q.plane is Plane.SAGITTAL:
            ankle_y = 0.0
        else:
            ankle_y = side * (hip_width / 2.0 + pose.t)
        total += np.array([
            reaction.f_y,
            reaction.f_z,
            reaction.moment + ankle_y * reaction.f_z,
        ])
    external = np.array([0.0, -load.total_vertical_load, 0.0])
    if q.plane is Plane.SAGITTAL:
        external[2] = 2.0 * load.leg_assist_moment
    # ground reactions carry the load: reaction + applied (as felt at ground) = 0
    residual = total + external
    logger.debug(f"equilibrium residual {residual}")
    return float(np.max(np.abs(residual)))
