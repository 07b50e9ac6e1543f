"""
Gear Sizing and Actuation Feasibility

Checks each joint drive against the torque peaks from the squat and stair
analyses. Infeasible joints are report entries, never exceptions.
"""

import math
from dataclasses import asdict, dataclass
from typing import Dict, List, Mapping, Optional

from src.actuation.motor import MotorSpec, motor_current_for_torque, required_gear_ratio
from src.model.errors import XRLError
from src.utils.logger import get_logger

logger = get_logger(__name__)

# Near-direct drive keeps the reduction below 10:1
MAX_GEAR_RATIO = 10.0
DEFAULT_SINGLE_STAGE_MAX_RATIO = 5.0
LEGS_PER_ROBOT = 2


@dataclass(frozen=True)
class JointDrive:
    """
    How one joint is actuated

    joint names the torque peak the drive must hold; it defaults to the
    drive's own name in the layout. Alternative drives are studied in the
    report but left out of mass totals.
    """
    motors_per_joint: int = 2
    gear_ratio: float = 1.0
    differential: bool = True
    joint: Optional[str] = None
    alternative: bool = False

    def __post_init__(self):
        if self.motors_per_joint not in (1, 2):
            raise XRLError(f"motors_per_joint must be 1 or 2, got {self.motors_per_joint}")
        if not 1.0 <= self.gear_ratio <= MAX_GEAR_RATIO:
            raise XRLError(f"gear_ratio must lie in [1, {MAX_GEAR_RATIO:g}], got {self.gear_ratio}")
        if self.differential and self.motors_per_joint != 2:
            raise XRLError("a differential drive needs two motors")


@dataclass(frozen=True)
class JointFeasibility:
    """Sizing verdict for one drive"""
    name: str
    joint: str
    peak_torque_nm: float
    motors: int
    differential: bool
    gear_ratio: float
    required_ratio: float
    required_current_a: float
    continuous_ok: bool
    peak_ok: bool
    ratio_ok: bool
    current_margin: float
    transmission_stages_risk: bool
    motor_mass_kg: float
    efficiency: float

    @property
    def feasible(self) -> bool:
        return self.ratio_ok and self.continuous_ok and self.peak_ok

    def to_record(self) -> dict:
        record = asdict(self)
        record["feasible"] = self.feasible
        return record


@dataclass(frozen=True)
class ActuatorMass:
    per_joint: Dict[str, float]
    per_leg: float
    per_robot: float


@dataclass(frozen=True)
class FeasibilityReport:
    entries: List[JointFeasibility]
    spec: MotorSpec
    efficiency: float
    mass: ActuatorMass

    @property
    def feasible(self) -> bool:
        return all(e.feasible for e in self.entries)

    def failing(self) -> List[str]:
        return [e.name for e in self.entries if not e.feasible]


def actuator_mass(
    drives: Mapping[str, JointDrive],
    spec: MotorSpec,
    legs: int = LEGS_PER_ROBOT,
) -> ActuatorMass:
    """Motor mass per joint, per leg and per robot (alternatives excluded)"""
    per_joint = {name: drive.motors_per_joint * spec.mass for name, drive in drives.items()}
    per_leg = sum(per_joint[name] for name, drive in drives.items() if not drive.alternative)
    return ActuatorMass(per_joint=per_joint, per_leg=per_leg, per_robot=per_leg * legs)


def motor_current_at_ratio(
    peak_joint_torque: float,
    spec: MotorSpec,
    motors: int,
    gear_ratio: float,
    efficiency: float = 1.0,
) -> float:
    """Current each motor draws holding a joint torque through a reduction"""
    shaft_torque = abs(peak_joint_torque) / (motors * gear_ratio * efficiency)
    return motor_current_for_torque(shaft_torque, spec)


def check_joint(
    name: str,
    peak_torque: float,
    drive: JointDrive,
    spec: MotorSpec,
    efficiency: float = 1.0,
    single_stage_max_ratio: float = DEFAULT_SINGLE_STAGE_MAX_RATIO,
) -> JointFeasibility:
    peak = abs(peak_torque)
    required = required_gear_ratio(peak, spec, drive.motors_per_joint, efficiency)
    current = motor_current_at_ratio(peak, spec, drive.motors_per_joint, drive.gear_ratio, efficiency)
    return JointFeasibility(
        name=name,
        joint=drive.joint or name,
        peak_torque_nm=peak,
        motors=drive.motors_per_joint,
        differential=drive.differential,
        gear_ratio=drive.gear_ratio,
        required_ratio=required,
        required_current_a=current,
        continuous_ok=current <= spec.max_continuous_current,
        peak_ok=current <= spec.max_peak_current,
        ratio_ok=required <= MAX_GEAR_RATIO,
        current_margin=1.0 - current / spec.max_continuous_current,
        transmission_stages_risk=max(required, drive.gear_ratio) > single_stage_max_ratio,
        motor_mass_kg=drive.motors_per_joint * spec.mass,
        efficiency=efficiency,
    )


def check_actuation_feasibility(
    peaks: Mapping[str, float],
    drives: Mapping[str, JointDrive],
    spec: MotorSpec,
    efficiency: float = 1.0,
    single_stage_max_ratio: float = DEFAULT_SINGLE_STAGE_MAX_RATIO,
) -> FeasibilityReport:
    """
    Size every drive in the layout against its joint's torque peak

    Args:
        peaks: joint name -> peak torque magnitude [Nm]
        drives: drive name -> JointDrive
        spec: motor ratings
        efficiency: lossless transmission at 1.0
        single_stage_max_ratio: reductions above this need several stages

    Returns:
        FeasibilityReport with one entry per drive, in layout order
    """
    if not math.isfinite(efficiency) or not 0 < efficiency <= 1:
        raise XRLError(f"efficiency must lie in (0, 1], got {efficiency}")

    entries = []
    for name, drive in drives.items():
        joint = drive.joint or name
        if joint not in peaks:
            raise XRLError(f"drive '{name}' references joint '{joint}' with no torque peak")
        entry = check_joint(name, peaks[joint], drive, spec, efficiency, single_stage_max_ratio)
        if not entry.feasible:
            logger.warning(
                f"{name}: infeasible (ratio {entry.required_ratio:.3f}, current {entry.required_current_a:.1f} A)"
            )
        entries.append(entry)
    return FeasibilityReport(
        entries=entries,
        spec=spec,
        efficiency=efficiency,
        mass=actuator_mass(drives, spec),
    )
