"""
Scenario configuration

A scenario file is JSON with one section per concern. Every section has
published-scenario defaults, so an empty object is a valid scenario.
Validation failures surface as ConfigValidationError naming the offending
field, e.g. "anthropometrics.crawling_attach_height: ...".
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Literal, Optional, Union

from dotenv import load_dotenv
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    ValidationError,
    ValidationInfo,
    field_validator,
    model_validator,
)
from pydantic_settings import BaseSettings, SettingsConfigDict

from src.actuation.feasibility import DEFAULT_SINGLE_STAGE_MAX_RATIO, MAX_GEAR_RATIO, JointDrive
from src.actuation.motor import MotorSpec
from src.kinematics.planar_leg import frontal_lateral_offset, reachable_height_band
from src.model.errors import ConfigValidationError, XRLError
from src.model.sizing import (
    DEFAULT_ASSIST_MOMENT_ARM_M,
    DEFAULT_CRAWLING_ATTACH_HEIGHT_M,
    DEFAULT_STANCE_WIDTH_M,
    DEFAULT_STANDING_ATTACH_HEIGHT_M,
    make_load_case,
    solve_link_lengths,
)
from src.model.types import Anthropometrics, LegGeometry, LoadCase, ScenarioKind
from src.model.units import (
    XRL_ASSIST_FORCE_N,
    XRL_FOOT_WIDTH_M,
    XRL_FORWARD_LEAN_M,
    XRL_HIP_WIDTH_M,
    XRL_PAYLOAD_MASS_KG,
    XRL_ROBOT_MASS_KG,
    XRL_STAIR_HEIGHT_M,
)
from src.stairs.climbing import DEFAULT_KNEE_SAMPLES, StairScenario
from src.utils.logger import get_logger

load_dotenv()

logger = get_logger(__name__)


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class AnthropometricsSection(_Section):
    """Operator dimensions and stance"""
    standing_attach_height: float = Field(DEFAULT_STANDING_ATTACH_HEIGHT_M, gt=0, description="l_s [m]")
    crawling_attach_height: float = Field(DEFAULT_CRAWLING_ATTACH_HEIGHT_M, gt=0, description="l_c [m]")
    hip_width: float = Field(XRL_HIP_WIDTH_M, gt=0, description="[m]")
    foot_width: float = Field(XRL_FOOT_WIDTH_M, gt=0, description="[m]")
    stance_width: float = Field(DEFAULT_STANCE_WIDTH_M, gt=0, description="Ankle-to-ankle width of the frontal squat [m]")

    @field_validator("crawling_attach_height")
    @classmethod
    def crawling_below_standing(cls, value: float, info: ValidationInfo):
        standing = info.data.get("standing_attach_height")
        if standing is not None and value >= standing:
            raise ValueError(f"must be below standing_attach_height ({standing})")
        return value

    @field_validator("stance_width")
    @classmethod
    def stance_not_narrower_than_hips(cls, value: float, info: ValidationInfo):
        hip_width = info.data.get("hip_width")
        if hip_width is not None and value < hip_width:
            raise ValueError(f"must be at least hip_width ({hip_width})")
        return value


class LoadsSection(_Section):
    robot_mass_kg: float = Field(XRL_ROBOT_MASS_KG, ge=0)
    payload_mass_kg: float = Field(XRL_PAYLOAD_MASS_KG, ge=0)
    assist_force_n: float = Field(XRL_ASSIST_FORCE_N, ge=0)
    assist_moment_arm_m: float = Field(DEFAULT_ASSIST_MOMENT_ARM_M, ge=0)


class StairsSection(_Section):
    stair_height_m: float = Field(XRL_STAIR_HEIGHT_M, gt=0)
    forward_lean_m: float = Field(XRL_FORWARD_LEAN_M, ge=0)
    knee_samples: int = Field(DEFAULT_KNEE_SAMPLES, ge=2)


class MotorSection(_Section):
    torque_constant: float = Field(0.45, gt=0, description="[Nm/A]")
    max_continuous_current: float = Field(50.0, gt=0, description="[A]")
    max_peak_current: float = Field(75.0, gt=0, description="[A]")
    mass_kg: float = Field(2.2, gt=0)

    @field_validator("max_peak_current")
    @classmethod
    def peak_not_below_continuous(cls, value: float, info: ValidationInfo):
        continuous = info.data.get("max_continuous_current")
        if continuous is not None and value < continuous:
            raise ValueError(f"must be at least max_continuous_current ({continuous})")
        return value


class DriveSection(_Section):
    motors_per_joint: Literal[1, 2] = 2
    gear_ratio: float = Field(3.75, ge=1.0, le=MAX_GEAR_RATIO)
    differential: bool = True
    joint: Optional[str] = None
    alternative: bool = False

    @model_validator(mode="after")
    def differential_needs_two_motors(self):
        if self.differential and self.motors_per_joint != 2:
            raise ValueError("a differential drive needs motors_per_joint = 2")
        return self


def _default_drives() -> Dict[str, DriveSection]:
    return {
        "hip": DriveSection(gear_ratio=3.75),
        "knee": DriveSection(gear_ratio=4.5),
        "ankle": DriveSection(gear_ratio=3.75),
    }


class SweepSection(_Section):
    samples: int = Field(200, ge=1)
    redistribution_height_m: float = Field(1.0, gt=0)
    free_param_samples: int = Field(401, ge=2)
    workers: int = Field(1, ge=1)


class ActuationSection(_Section):
    efficiency: float = Field(1.0, gt=0, le=1.0)
    single_stage_max_ratio: float = Field(DEFAULT_SINGLE_STAGE_MAX_RATIO, ge=1.0)
    design_peaks_nm: Optional[Dict[str, float]] = Field(
        None, description="Joint peaks to size against; computed from the analyses when absent"
    )

    @field_validator("design_peaks_nm")
    @classmethod
    def peaks_non_negative(cls, value: Optional[Dict[str, float]]):
        if value is not None:
            for joint, peak in value.items():
                if peak < 0:
                    raise ValueError(f"peak for '{joint}' must be >= 0, got {peak}")
        return value


class OutputSection(_Section):
    directory: str = "output"


class ScenarioConfig(_Section):
    """Complete scenario: every section optional"""
    anthropometrics: AnthropometricsSection = Field(default_factory=AnthropometricsSection)
    loads: LoadsSection = Field(default_factory=LoadsSection)
    stairs: StairsSection = Field(default_factory=StairsSection)
    motor: MotorSection = Field(default_factory=MotorSection)
    drives: Dict[str, DriveSection] = Field(default_factory=_default_drives)
    sweep: SweepSection = Field(default_factory=SweepSection)
    actuation: ActuationSection = Field(default_factory=ActuationSection)
    output: OutputSection = Field(default_factory=OutputSection)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)


class Settings(BaseSettings):
    """Process settings from the environment (and .env)"""

    LOG_LEVEL: str = "INFO"
    XRL_OUTPUT_DIR: Optional[str] = None
    XRL_WORKERS: Optional[int] = Field(None, ge=1)

    model_config = SettingsConfigDict(case_sensitive=True, extra="ignore")


def get_settings() -> Settings:
    try:
        return Settings()
    except ValidationError as e:
        first = e.errors()[0]
        raise ConfigValidationError(first["msg"], _field_path(first["loc"])) from e


def _field_path(loc) -> str:
    return ".".join(str(part) for part in loc)


def parse_config(data: Union[str, dict]) -> ScenarioConfig:
    """
    Validate a scenario from JSON text or a dict

    Raises:
        ConfigValidationError: first validation failure, with its field path
    """
    try:
        if isinstance(data, str):
            config = ScenarioConfig.model_validate_json(data)
        else:
            config = ScenarioConfig.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise ConfigValidationError(first["msg"], _field_path(first["loc"])) from e
    # domain invariants the section validators cannot see on their own
    build_scenario(config)
    return config


def load_config(path: Union[str, Path, None] = None) -> ScenarioConfig:
    """Load a scenario file; defaults when path is None"""
    if path is None:
        return ScenarioConfig()
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigValidationError(f"cannot read config file {path}: {e.strerror}") from e
    config = parse_config(text)
    logger.info(f"Loaded scenario config from {path}")
    return config


def save_config(config: ScenarioConfig, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(config.to_json() + "\n", encoding="utf-8")
    return path


@dataclass(frozen=True)
class Scenario:
    """Domain objects built from a validated config"""
    config: ScenarioConfig
    anthropometrics: Anthropometrics
    geometry: LegGeometry
    lateral_offset: float
    squat_load: LoadCase
    stair: StairScenario
    motor: MotorSpec
    drives: Dict[str, JointDrive]
    samples: int
    workers: int
    output_dir: Path

    @property
    def design_peaks(self) -> Optional[Dict[str, float]]:
        return self.config.actuation.design_peaks_nm


def build_scenario(
    config: ScenarioConfig,
    output_dir: Union[str, Path, None] = None,
    samples: Optional[int] = None,
    workers: Optional[int] = None,
) -> Scenario:
    """
    Construct domain objects, mapping invariant failures to their section

    Explicit arguments override the config file.
    """
    a = config.anthropometrics
    try:
        anthro = Anthropometrics(
            standing_attach_height=a.standing_attach_height,
            crawling_attach_height=a.crawling_attach_height,
            hip_width=a.hip_width,
            foot_width=a.foot_width,
        )
        geometry = solve_link_lengths(anthro)
    except XRLError as e:
        raise ConfigValidationError(str(e), "anthropometrics") from e

    lateral_offset = frontal_lateral_offset(a.stance_width, a.hip_width)
    try:
        reachable_height_band(geometry, lateral_offset)
    except XRLError as e:
        raise ConfigValidationError(str(e), "anthropometrics.stance_width") from e

    loads = config.loads
    squat_load = make_load_case(
        ScenarioKind.SQUAT, loads.robot_mass_kg, loads.payload_mass_kg,
        loads.assist_force_n, loads.assist_moment_arm_m,
    )
    stair_load = make_load_case(
        ScenarioKind.STAIR, loads.robot_mass_kg, loads.payload_mass_kg,
        loads.assist_force_n, loads.assist_moment_arm_m,
    )
    stair = StairScenario(
        stair_height=config.stairs.stair_height_m,
        forward_lean=config.stairs.forward_lean_m,
        hip_width=a.hip_width,
        load=stair_load,
    )

    m = config.motor
    motor = MotorSpec(
        torque_constant=m.torque_constant,
        max_continuous_current=m.max_continuous_current,
        max_peak_current=m.max_peak_current,
        mass=m.mass_kg,
    )
    peaks = config.actuation.design_peaks_nm
    if peaks is not None:
        for name, d in config.drives.items():
            if (d.joint or name) not in peaks:
                raise ConfigValidationError(
                    f"joint '{d.joint or name}' has no entry in actuation.design_peaks_nm", f"drives.{name}.joint"
                )
    drives = {
        name: JointDrive(
            motors_per_joint=d.motors_per_joint,
            gear_ratio=d.gear_ratio,
            differential=d.differential,
            joint=d.joint,
            alternative=d.alternative,
        )
        for name, d in config.drives.items()
    }

    return Scenario(
        config=config,
        anthropometrics=anthro,
        geometry=geometry,
        lateral_offset=lateral_offset,
        squat_load=squat_load,
        stair=stair,
        motor=motor,
        drives=drives,
        samples=samples if samples is not None else config.sweep.samples,
        workers=workers if workers is not None else config.sweep.workers,
        output_dir=Path(output_dir if output_dir is not None else config.output.directory),
    )


def config_as_dict(config: ScenarioConfig) -> dict:
    return json.loads(config.to_json())
