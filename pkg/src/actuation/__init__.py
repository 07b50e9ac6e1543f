"""
Leg actuation
Includes: motor model, two-motor differential, gear sizing and feasibility
"""

from .motor import (
    MotorSpec,
    motor_torque,
    motor_current_for_torque,
    required_gear_ratio,
)
from .differential import (
    velocity_matrix,
    torque_matrix,
    differential_map,
    differential_velocity_map,
    motor_torques_for_joint,
    power_residual,
)
from .feasibility import (
    MAX_GEAR_RATIO,
    JointDrive,
    JointFeasibility,
    ActuatorMass,
    FeasibilityReport,
    actuator_mass,
    motor_current_at_ratio,
    check_joint,
    check_actuation_feasibility,
)

__all__ = [
    "MotorSpec",
    "motor_torque",
    "motor_current_for_torque",
    "required_gear_ratio",
    "velocity_matrix",
    "torque_matrix",
    "differential_map",
    "differential_velocity_map",
    "motor_torques_for_joint",
    "power_residual",
    "MAX_GEAR_RATIO",
    "JointDrive",
    "JointFeasibility",
    "ActuatorMass",
    "FeasibilityReport",
    "actuator_mass",
    "motor_current_at_ratio",
    "check_joint",
    "check_actuation_feasibility",
]
