"""
Unit tests for the XRL domain model: units, value types, sizing, load cases
"""

import pytest
import numpy as np
from hypothesis import given
from hypothesis import strategies as st

# Add parent directory to path for imports
import sys
import os
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from src.model import (
    Anthropometrics,
    ConfigValidationError,
    DEFAULT_ASSIST_MOMENT_ARM_M,
    DEFAULT_LATERAL_OFFSET_M,
    DEFAULT_STANCE_WIDTH_M,
    DegenerateGeometryError,
    JointTorques,
    LegGeometry,
    LoadCase,
    NegativeInputError,
    PlanarWrench,
    ScenarioKind,
    XRLError,
    default_anthropometrics,
    make_load_case,
    recompose_heights,
    solve_link_lengths,
)
from src.model.units import (
    OPERATOR_HEIGHT_M,
    XRL_ASSIST_FORCE_N,
    XRL_FOOT_WIDTH_M,
    XRL_HIP_WIDTH_M,
    XRL_PAYLOAD_MASS_KG,
    XRL_ROBOT_MASS_KG,
    XRL_STAIR_HEIGHT_M,
    cm_to_m,
    inch_to_m,
    lb_to_kg,
    lbf_to_newtons,
    weight,
)


@pytest.fixture
def squat_load():
    return make_load_case(ScenarioKind.SQUAT, XRL_ROBOT_MASS_KG, XRL_PAYLOAD_MASS_KG, XRL_ASSIST_FORCE_N)


@pytest.fixture
def stair_load():
    return make_load_case(ScenarioKind.STAIR, XRL_ROBOT_MASS_KG, XRL_PAYLOAD_MASS_KG, XRL_ASSIST_FORCE_N)


class TestUnits:
    """Tests for conversion at the input boundary"""

    def test_pound_conversions(self):
        assert lb_to_kg(1.0) == pytest.approx(0.45359237)
        assert lbf_to_newtons(1.0) == pytest.approx(4.4482216, rel=1e-7)

    def test_length_conversions(self):
        assert inch_to_m(14.0) == pytest.approx(0.3556)
        assert cm_to_m(194.31) == pytest.approx(1.9431)
        assert OPERATOR_HEIGHT_M == pytest.approx(1.9431)
        assert XRL_STAIR_HEIGHT_M == pytest.approx(0.2032)
        assert XRL_HIP_WIDTH_M == pytest.approx(0.3556)

    def test_weight_is_mass_times_gravity(self):
        assert weight(10.0) == pytest.approx(98.0665)
        assert weight(0.0) == 0.0


class TestSolveLinkLengths:
    """Tests for link-length sizing"""

    def test_default_operator(self):
        geom = solve_link_lengths(default_anthropometrics())
        assert geom.l1 == pytest.approx(0.425)
        assert geom.l2 == pytest.approx(1.025)

    def test_unit_heights(self):
        anthro = Anthropometrics(1.0, 0.2, XRL_HIP_WIDTH_M, XRL_FOOT_WIDTH_M)
        geom = solve_link_lengths(anthro)
        assert geom.l1 == pytest.approx(0.4)
        assert geom.l2 == pytest.approx(0.6)

    @given(
        standing=st.floats(min_value=0.2, max_value=3.0),
        fraction=st.floats(min_value=0.01, max_value=0.99),
    )
    def test_recompose_round_trip(self, standing, fraction):
        """Sizing then recomposing recovers the attachment heights"""
        crawling = standing * fraction
        anthro = Anthropometrics(standing, crawling, 0.3, 0.1)
        s, c = recompose_heights(solve_link_lengths(anthro))
        assert s == pytest.approx(standing, abs=1e-12)
        assert c == pytest.approx(crawling, abs=1e-12)

    def test_equal_heights_rejected(self):
        with pytest.raises(DegenerateGeometryError):
            Anthropometrics(1.0, 1.0, 0.3, 0.1)

    def test_zero_crawling_height_rejected(self):
        with pytest.raises(DegenerateGeometryError):
            Anthropometrics(1.0, 0.0, 0.3, 0.1)


class TestLegGeometry:
    """Tests for LegGeometry invariants"""

    def test_l2_must_exceed_l1(self):
        with pytest.raises(DegenerateGeometryError):
            LegGeometry(l1=0.5, l2=0.4)

    def test_l1_must_be_positive(self):
        with pytest.raises(DegenerateGeometryError):
            LegGeometry(l1=0.0, l2=0.4)

    def test_heights(self):
        geom = LegGeometry(0.425, 1.025)
        assert geom.standing_height == pytest.approx(1.45)
        assert geom.crawling_height == pytest.approx(0.6)

    def test_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            LegGeometry(l1=-1.0, l2=0.4)


class TestLoadCases:
    """Tests for make_load_case"""

    def test_squat_load_matches_published_total(self, squat_load):
        assert squat_load.total_vertical_load == pytest.approx(800.7, rel=1e-3)
        assert squat_load.leg_vertical_load == pytest.approx(squat_load.total_vertical_load / 2)
        assert squat_load.per_leg is True

    def test_stair_load_excludes_assist(self, stair_load):
        assert stair_load.total_vertical_load == pytest.approx(578.3, rel=1e-3)
        assert stair_load.assist_force == 0.0
        assert stair_load.per_leg is False
        assert stair_load.leg_vertical_load == stair_load.total_vertical_load

    def test_rearing_moment_per_leg(self, squat_load):
        assert squat_load.leg_assist_moment == pytest.approx(59.0, abs=1e-9)
        assert squat_load.assist_moment_arm == pytest.approx(DEFAULT_ASSIST_MOMENT_ARM_M)

    def test_negative_mass_rejected(self):
        with pytest.raises(NegativeInputError):
            make_load_case(ScenarioKind.SQUAT, -1.0, 10.0)

    def test_negative_load_case_rejected(self):
        with pytest.raises(NegativeInputError):
            LoadCase(total_vertical_load=-5.0)

    def test_kind_from_string(self):
        load = make_load_case("stair", 10.0, 0.0)
        assert load.kind is ScenarioKind.STAIR

    def test_scaled(self, squat_load):
        doubled = squat_load.scaled(2.0)
        assert doubled.total_vertical_load == pytest.approx(2 * squat_load.total_vertical_load)
        assert doubled.leg_assist_moment == pytest.approx(2 * squat_load.leg_assist_moment)


class TestStanceDefaults:
    """Tests for the derived frontal stance"""

    def test_offset_reproduces_fixed_ankle_pair(self):
        assert DEFAULT_LATERAL_OFFSET_M * 800.7 / 2 == pytest.approx(30.5 + 93.4)

    def test_stance_width(self):
        assert DEFAULT_STANCE_WIDTH_M == pytest.approx(XRL_HIP_WIDTH_M + 2 * DEFAULT_LATERAL_OFFSET_M)
        assert DEFAULT_STANCE_WIDTH_M == pytest.approx(0.9746, abs=1e-4)


class TestValueTypes:
    """Tests for wrench and torque value types"""

    def test_joint_torques_vector_order(self):
        torques = JointTorques.from_vector([1.0, 2.0, 3.0])
        assert torques.tau_ankle == 1.0
        assert torques.tau_knee == 2.0
        assert torques.tau_hip == 3.0
        np.testing.assert_array_equal(torques.as_vector(), [1.0, 2.0, 3.0])

    def test_joint_torque_norms(self):
        torques = JointTorques(tau_hip=-4.0, tau_knee=3.0, tau_ankle=0.0)
        assert torques.max_abs == 4.0
        assert torques.l2_norm == pytest.approx(5.0)
        assert torques.mirrored() == JointTorques(4.0, -3.0, -0.0)

    def test_non_finite_torque_rejected(self):
        with pytest.raises(XRLError):
            JointTorques(float("nan"), 0.0, 0.0)

    def test_wrench_vector(self):
        np.testing.assert_array_equal(PlanarWrench(1.0, -2.0, 3.0).as_vector(), [1.0, -2.0, 3.0])


class TestErrors:
    """Tests for the error hierarchy"""

    def test_config_error_names_field(self):
        error = ConfigValidationError("must be positive", "loads.robot_mass_kg")
        assert str(error) == "loads.robot_mass_kg: must be positive"
        assert error.field_path == "loads.robot_mass_kg"
        assert isinstance(error, XRLError)
