"""
Unit conversion at the input boundary

Everything stored by the toolkit is SI. Imperial figures from the design
requirements are converted here once and never kept.
"""

STANDARD_GRAVITY = 9.80665  # m/s^2

_LB_TO_KG = 0.45359237
_INCH_TO_M = 0.0254


def lb_to_kg(pounds: float) -> float:
    """Convert pound-mass to kilograms"""
    return pounds * _LB_TO_KG


def lbf_to_newtons(pounds_force: float) -> float:
    """Convert pound-force to newtons"""
    return pounds_force * _LB_TO_KG * STANDARD_GRAVITY


def inch_to_m(inches: float) -> float:
    return inches * _INCH_TO_M


def cm_to_m(centimeters: float) -> float:
    return centimeters / 100.0


def weight(mass_kg: float) -> float:
    """Gravitational force of a mass in newtons"""
    return mass_kg * STANDARD_GRAVITY


# Published XRL scenario, converted from the imperial design figures
XRL_ROBOT_MASS_KG = lb_to_kg(80.0)
XRL_PAYLOAD_MASS_KG = lb_to_kg(50.0)
XRL_ASSIST_FORCE_N = lbf_to_newtons(50.0)
XRL_HIP_WIDTH_M = inch_to_m(14.0)
XRL_STAIR_HEIGHT_M = inch_to_m(8.0)
XRL_FOOT_WIDTH_M = inch_to_m(6.0)  # back-derived from the 30.5 Nm fixed ankle torque
XRL_FORWARD_LEAN_M = 0.20
OPERATOR_HEIGHT_M = cm_to_m(194.31)  # 97.5th percentile male
