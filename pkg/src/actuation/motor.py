"""
Motor Model

Linear current-to-torque model of the leg motors. Within the rated current
range the motors do not saturate, so torque = Kt * I.
"""

import math
from dataclasses import dataclass

from src.model.errors import NegativeInputError, OverCurrentError, XRLError

DEFAULT_TORQUE_CONSTANT = 0.45  # Nm/A
DEFAULT_CONTINUOUS_CURRENT = 50.0  # A
DEFAULT_PEAK_CURRENT = 75.0  # A
DEFAULT_MOTOR_MASS = 2.2  # kg


@dataclass(frozen=True)
class MotorSpec:
    """Electrical and mass ratings of one motor"""
    torque_constant: float = DEFAULT_TORQUE_CONSTANT
    max_continuous_current: float = DEFAULT_CONTINUOUS_CURRENT
    max_peak_current: float = DEFAULT_PEAK_CURRENT
    mass: float = DEFAULT_MOTOR_MASS

    def __post_init__(self):
        for name in ("torque_constant", "max_continuous_current", "max_peak_current", "mass"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise NegativeInputError(f"{name} must be positive, got {value}")
        if self.max_peak_current < self.max_continuous_current:
            raise XRLError(
                f"max_peak_current {self.max_peak_current} below "
                f"max_continuous_current {self.max_continuous_current}"
            )

    @property
    def continuous_torque(self) -> float:
        return self.torque_constant * self.max_continuous_current

    @property
    def peak_torque(self) -> float:
        return self.torque_constant * self.max_peak_current


def motor_torque(current: float, spec: MotorSpec) -> float:
    """
    Motor shaft torque at a current

    Raises:
        NegativeInputError: negative current
        OverCurrentError: current above the peak rating
    """
    if current < 0:
        raise NegativeInputError(f"current must be >= 0, got {current}")
    if current > spec.max_peak_current:
        raise OverCurrentError(
            f"current {current} A exceeds the {spec.max_peak_current} A peak rating"
        )
    return spec.torque_constant * current


def motor_current_for_torque(torque: float, spec: MotorSpec) -> float:
    """Current drawn for a motor shaft torque (no rating check)"""
    if torque < 0:
        raise NegativeInputError(f"torque must be >= 0, got {torque}")
    return torque / spec.torque_constant


def required_gear_ratio(
    peak_joint_torque: float,
    spec: MotorSpec,
    motors: int = 1,
    efficiency: float = 1.0,
) -> float:
    """
    Gear reduction that lets the motors hold a joint torque at continuous current

    Args:
        peak_joint_torque: joint torque magnitude to hold
        spec: motor ratings
        motors: motors sharing the joint (1, or 2 through a differential)
        efficiency: transmission efficiency in (0, 1]

    Returns:
        ratio = peak / (motors * Kt * I_cont * efficiency)
    """
    if peak_joint_torque < 0:
        raise NegativeInputError(f"peak joint torque must be >= 0, got {peak_joint_torque}")
    if motors not in (1, 2):
        raise XRLError(f"a joint is driven by 1 or 2 motors, got {motors}")
    if not 0 < efficiency <= 1:
        raise XRLError(f"efficiency must lie in (0, 1], got {efficiency}")
    return peak_joint_torque / (motors * motor_torque(spec.max_continuous_current, spec) * efficiency)
