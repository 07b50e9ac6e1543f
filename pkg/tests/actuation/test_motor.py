"""
Unit tests for the motor model and the two-motor differential
"""

import pytest
import numpy as np
from hypothesis import given
from hypothesis import strategies as st

# Add parent directory to path for imports
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.actuation import (
    MotorSpec,
    differential_map,
    differential_velocity_map,
    motor_current_for_torque,
    motor_torque,
    motor_torques_for_joint,
    power_residual,
    required_gear_ratio,
    torque_matrix,
    velocity_matrix,
)
from src.model import NegativeInputError, OverCurrentError, XRLError


@pytest.fixture
def spec():
    return MotorSpec()


class TestMotorTorque:
    """Tests for the linear current model"""

    def test_continuous_torque(self, spec):
        assert motor_torque(50.0, spec) == pytest.approx(22.5)
        assert spec.continuous_torque == pytest.approx(22.5)
        assert spec.peak_torque == pytest.approx(33.75)

    def test_zero_current(self, spec):
        assert motor_torque(0.0, spec) == 0.0

    def test_over_current_rejected(self, spec):
        with pytest.raises(OverCurrentError):
            motor_torque(76.0, spec)

    def test_negative_current_rejected(self, spec):
        with pytest.raises(NegativeInputError):
            motor_torque(-1.0, spec)

    def test_current_for_torque(self, spec):
        assert motor_current_for_torque(22.5, spec) == pytest.approx(50.0)

    def test_spec_validation(self):
        with pytest.raises(NegativeInputError):
            MotorSpec(torque_constant=0.0)
        with pytest.raises(XRLError):
            MotorSpec(max_continuous_current=80.0, max_peak_current=75.0)


class TestRequiredGearRatio:
    """Tests for gear sizing at continuous current"""

    def test_single_motor_knee(self, spec):
        assert required_gear_ratio(168.0, spec, motors=1) == pytest.approx(7.47, abs=5e-3)

    def test_differential_halves_ratio(self, spec):
        assert required_gear_ratio(168.0, spec, motors=2) == pytest.approx(168.0 / 45.0)

    def test_direct_drive_break_even(self, spec):
        assert required_gear_ratio(22.5, spec) == pytest.approx(1.0)

    def test_efficiency_raises_ratio(self, spec):
        assert required_gear_ratio(168.0, spec, efficiency=0.8) == pytest.approx(168.0 / (22.5 * 0.8))

    def test_motor_count_checked(self, spec):
        with pytest.raises(XRLError):
            required_gear_ratio(100.0, spec, motors=3)

    def test_efficiency_checked(self, spec):
        with pytest.raises(XRLError):
            required_gear_ratio(100.0, spec, efficiency=0.0)


class TestDifferential:
    """Tests for the differential velocity and torque maps"""

    def test_output_axis_doubles_torque(self):
        assert differential_map(1.0, -1.0) == pytest.approx((2.0, 0.0))

    def test_carrier_axis_doubles_torque(self):
        assert differential_map(1.0, 1.0) == pytest.approx((0.0, 2.0))

    def test_velocity_map(self):
        assert differential_velocity_map(2.0, -2.0) == pytest.approx((2.0, 0.0))
        assert differential_velocity_map(2.0, 2.0, ratio=2.0) == pytest.approx((0.0, 1.0))

    @pytest.mark.parametrize("ratio", [1.0, 3.75, 10.0])
    def test_torque_map_is_inverse_transpose(self, ratio):
        np.testing.assert_allclose(
            torque_matrix(ratio), np.linalg.inv(velocity_matrix(ratio)).T, atol=1e-12
        )

    def test_power_balance(self):
        """Lossless: motor power equals joint power"""
        rng = np.random.default_rng(43)
        for _ in range(1000):
            ratio = rng.uniform(1.0, 10.0)
            torques = rng.normal(scale=20.0, size=2)
            rates = rng.normal(scale=50.0, size=2)
            scale = np.linalg.norm(torques) * np.linalg.norm(rates)
            assert abs(power_residual(torques, rates, ratio)) <= 1e-12 * scale

    @given(
        tau_out=st.floats(min_value=-500, max_value=500),
        tau_carrier=st.floats(min_value=-500, max_value=500),
    )
    def test_inverse_map(self, tau_out, tau_carrier):
        tau_a, tau_b = motor_torques_for_joint(tau_out, tau_carrier, ratio=4.5)
        out, carrier = differential_map(tau_a, tau_b, ratio=4.5)
        assert out == pytest.approx(tau_out, abs=1e-9)
        assert carrier == pytest.approx(tau_carrier, abs=1e-9)

    def test_ratio_must_be_positive(self):
        with pytest.raises(XRLError):
            velocity_matrix(0.0)
