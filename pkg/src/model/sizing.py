"""
Link-length sizing and load-case construction

The leg is sized so that both common postures are kinematic singularities:
standing puts the hip attachment at l1 + l2, crawling folds the knee fully
so the attachment sits at l2 - l1. In both, gravity is carried by the
structure rather than the motors.
"""

from typing import Tuple, Union

from src.model.errors import DegenerateGeometryError, NegativeInputError
from src.model.types import Anthropometrics, LegGeometry, LoadCase, ScenarioKind
from src.model.units import (
    XRL_ASSIST_FORCE_N,
    XRL_FOOT_WIDTH_M,
    XRL_HIP_WIDTH_M,
    weight,
)

# Estimated attachment heights for a 194.31 cm (OPERATOR_HEIGHT_M) operator.
DEFAULT_STANDING_ATTACH_HEIGHT_M = 1.45
DEFAULT_CRAWLING_ATTACH_HEIGHT_M = 0.60

# Calibrated so the per-leg rearing moment equals 59 Nm under the
# published 50 lbf assistive load: (F * arm) / 2 = 59.
DEFAULT_ASSIST_MOMENT_ARM_M = 2.0 * 59.0 / XRL_ASSIST_FORCE_N

# Frontal stance: with the hip offset t over the ankle, the hip torque of the
# fixed-ankle strategy is ankle - t * mg/2 at every height. The published
# -93.4 / 30.5 Nm pair under 800.7 N fixes t.
DEFAULT_LATERAL_OFFSET_M = (30.5 + 93.4) / (800.7 / 2.0)
DEFAULT_STANCE_WIDTH_M = XRL_HIP_WIDTH_M + 2.0 * DEFAULT_LATERAL_OFFSET_M


def default_anthropometrics() -> Anthropometrics:
    """Anthropometrics of the design operator"""
    return Anthropometrics(
        standing_attach_height=DEFAULT_STANDING_ATTACH_HEIGHT_M,
        crawling_attach_height=DEFAULT_CRAWLING_ATTACH_HEIGHT_M,
        hip_width=XRL_HIP_WIDTH_M,
        foot_width=XRL_FOOT_WIDTH_M,
    )


def solve_link_lengths(anthro: Anthropometrics) -> LegGeometry:
    """
    Solve l_s = l1 + l2 and l_c = l2 - l1 for the link lengths

    Args:
        anthro: operator attachment heights

    Returns:
        LegGeometry with l1 = (l_s - l_c)/2 and l2 = (l_s + l_c)/2
    """
    standing = anthro.standing_attach_height
    crawling = anthro.crawling_attach_height
    if not standing > crawling > 0:
        raise DegenerateGeometryError(
            f"need standing > crawling > 0, got standing={standing}, crawling={crawling}"
        )
    return LegGeometry(l1=(standing - crawling) / 2.0, l2=(standing + crawling) / 2.0)


def recompose_heights(geom: LegGeometry) -> Tuple[float, float]:
    """Inverse of solve_link_lengths: (standing, crawling) attachment heights"""
    return geom.standing_height, geom.crawling_height


def make_load_case(
    kind: Union[ScenarioKind, str],
    robot_mass: float,
    payload_mass: float,
    assist_force: float = 0.0,
    assist_moment_arm: float = DEFAULT_ASSIST_MOMENT_ARM_M,
) -> LoadCase:
    """
    Build the load case for a scenario

    Squat (and custom) loads add the assistive force to the weight of robot
    and payload and split it over both legs. Stair loads exclude the
    assistive force and put everything on the single stance leg.
    """
    kind = ScenarioKind(kind)
    for name, value in (
        ("robot_mass", robot_mass),
        ("payload_mass", payload_mass),
        ("assist_force", assist_force),
        ("assist_moment_arm", assist_moment_arm),
    ):
        if value < 0:
            raise NegativeInputError(f"{name} must be >= 0, got {value}")

    gravity_load = weight(robot_mass + payload_mass)
    if kind is ScenarioKind.STAIR:
        return LoadCase(
            total_vertical_load=gravity_load,
            assist_force=0.0,
            assist_moment_arm=assist_moment_arm,
            per_leg=False,
            kind=kind,
        )
    return LoadCase(
        total_vertical_load=gravity_load + assist_force,
        assist_force=assist_force,
        assist_moment_arm=assist_moment_arm,
        per_leg=True,
        kind=kind,
    )
