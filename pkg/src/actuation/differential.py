"""
Two-Motor Differential

Two motors drive two joint axes through a miter-gear differential. Turning
the motors in opposite directions spins the output shaft about its own
axis; turning them together swings the whole shaft about the common input
axis (the carrier). Either axis can take the combined torque of both motors.

    joint rates   = (1/ratio) D motor rates,   D = 1/2 [[1, -1], [1, 1]]
    joint torques = ratio D^-T motor torques

so motor power equals joint power for a lossless transmission.
"""

from typing import Tuple

import numpy as np

from src.model.errors import XRLError

_D = 0.5 * np.array([[1.0, -1.0], [1.0, 1.0]])


def _check_ratio(ratio: float) -> None:
    if not ratio > 0:
        raise XRLError(f"differential ratio must be positive, got {ratio}")


def velocity_matrix(ratio: float = 1.0) -> np.ndarray:
    """Motor rates (a, b) -> joint rates (output axis, carrier axis)"""
    _check_ratio(ratio)
    return _D / ratio


def torque_matrix(ratio: float = 1.0) -> np.ndarray:
    """Motor torques (a, b) -> joint torques; the inverse transpose of velocity_matrix"""
    _check_ratio(ratio)
    return ratio * np.array([[1.0, -1.0], [1.0, 1.0]])


def differential_map(tau_motor_a: float, tau_motor_b: float, ratio: float = 1.0) -> Tuple[float, float]:
    """
    Joint torques produced by a pair of motor torques

    Returns:
        (output-axis torque, carrier-axis torque)
    """
    tau_out, tau_carrier = torque_matrix(ratio) @ np.array([tau_motor_a, tau_motor_b], dtype=float)
    return float(tau_out), float(tau_carrier)


def differential_velocity_map(omega_motor_a: float, omega_motor_b: float, ratio: float = 1.0) -> Tuple[float, float]:
    """(output-axis rate, carrier-axis rate) for a pair of motor rates"""
    omega_out, omega_carrier = velocity_matrix(ratio) @ np.array([omega_motor_a, omega_motor_b], dtype=float)
    return float(omega_out), float(omega_carrier)


def motor_torques_for_joint(tau_out: float, tau_carrier: float, ratio: float = 1.0) -> Tuple[float, float]:
    """Motor torques (a, b) that produce the given joint torques"""
    tau_a, tau_b = velocity_matrix(ratio).T @ np.array([tau_out, tau_carrier], dtype=float)
    return float(tau_a), float(tau_b)


def power_residual(motor_torques, motor_rates, ratio: float = 1.0) -> float:
    """Motor-side power minus joint-side power"""
    tau_m = np.asarray(motor_torques, dtype=float)
    omega_m = np.asarray(motor_rates, dtype=float)
    tau_j = torque_matrix(ratio) @ tau_m
    omega_j = velocity_matrix(ratio) @ omega_m
    return float(tau_m @ omega_m - tau_j @ omega_j)
