"""
Core domain types for the XRL leg model

All types are frozen dataclasses holding SI values. Invariants are checked
on construction so an instance in hand is always valid.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.model.errors import DegenerateGeometryError, NegativeInputError, XRLError


class ScenarioKind(Enum):
    """Loading scenario"""
    SQUAT = "squat"
    STAIR = "stair"
    CUSTOM = "custom"


def _require_finite(name: str, *values: float) -> None:
    if not all(math.isfinite(v) for v in values):
        raise XRLError(f"{name} components must be finite, got {values}")


@dataclass(frozen=True)
class Anthropometrics:
    """Operator dimensions that drive the leg design"""
    standing_attach_height: float
    crawling_attach_height: float
    hip_width: float
    foot_width: float

    def __post_init__(self):
        if not self.crawling_attach_height > 0:
            raise DegenerateGeometryError(
                f"crawling_attach_height must be > 0, got {self.crawling_attach_height}"
            )
        if not self.standing_attach_height > self.crawling_attach_height:
            raise DegenerateGeometryError(
                "standing_attach_height must exceed crawling_attach_height "
                f"({self.standing_attach_height} <= {self.crawling_attach_height})"
            )
        if self.hip_width <= 0 or self.foot_width <= 0:
            raise DegenerateGeometryError("hip_width and foot_width must be positive")


@dataclass(frozen=True)
class LegGeometry:
    """Link lengths of one leg; l1 joins the hip, l2 joins the foot"""
    l1: float
    l2: float

    def __post_init__(self):
        if not self.l1 > 0:
            raise DegenerateGeometryError(f"l1 must be positive, got {self.l1}")
        if not self.l2 > self.l1:
            raise DegenerateGeometryError(
                f"l2 must exceed l1 so the crawling height is positive ({self.l2} <= {self.l1})"
            )

    @property
    def standing_height(self) -> float:
        return self.l1 + self.l2

    @property
    def crawling_height(self) -> float:
        return self.l2 - self.l1


@dataclass(frozen=True)
class LoadCase:
    """
    Loads acting on the robot for one scenario

    total_vertical_load is the positive magnitude mg of gravity plus
    assistance. With per_leg set the two stance legs share it equally.
    """
    total_vertical_load: float
    assist_force: float = 0.0
    assist_moment_arm: float = 0.0
    per_leg: bool = True
    kind: ScenarioKind = ScenarioKind.CUSTOM

    def __post_init__(self):
        for name in ("total_vertical_load", "assist_force", "assist_moment_arm"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise NegativeInputError(f"{name} must be a finite value >= 0, got {value}")

    @property
    def leg_vertical_load(self) -> float:
        """Vertical load carried by one stance leg"""
        return self.total_vertical_load / 2.0 if self.per_leg else self.total_vertical_load

    @property
    def assist_moment(self) -> float:
        """Rearing moment needed to apply the assistive force"""
        return self.assist_force * self.assist_moment_arm

    @property
    def leg_assist_moment(self) -> float:
        return self.assist_moment / 2.0 if self.per_leg else self.assist_moment

    def scaled(self, factor: float) -> "LoadCase":
        """Same scenario with every load multiplied by factor"""
        return LoadCase(
            total_vertical_load=self.total_vertical_load * factor,
            assist_force=self.assist_force * factor,
            assist_moment_arm=self.assist_moment_arm,
            per_leg=self.per_leg,
            kind=self.kind,
        )


@dataclass(frozen=True)
class PlanarWrench:
    """
    Load applied at the hip attachment of one leg

    f_t is horizontal (F_x sagittal, F_y frontal), f_n vertical, m the
    moment about the plane normal.
    """
    f_t: float
    f_n: float
    m: float

    def __post_init__(self):
        _require_finite("PlanarWrench", self.f_t, self.f_n, self.m)

    def as_vector(self) -> np.ndarray:
        return np.array([self.f_t, self.f_n, self.m], dtype=float)


@dataclass(frozen=True)
class JointTorques:
    """Hip, knee and ankle torques of one leg in Nm"""
    tau_hip: float
    tau_knee: float
    tau_ankle: float

    def __post_init__(self):
        _require_finite("JointTorques", self.tau_hip, self.tau_knee, self.tau_ankle)

    @classmethod
    def from_vector(cls, vector) -> "JointTorques":
        """Build from a vector in (ankle, knee, hip) joint order"""
        ankle, knee, hip = (float(v) for v in vector)
        return cls(tau_hip=hip, tau_knee=knee, tau_ankle=ankle)

    @classmethod
    def zero(cls) -> "JointTorques":
        return cls(0.0, 0.0, 0.0)

    def as_vector(self) -> np.ndarray:
        """Torques in (ankle, knee, hip) joint order"""
        return np.array([self.tau_ankle, self.tau_knee, self.tau_hip], dtype=float)

    @property
    def max_abs(self) -> float:
        return max(abs(self.tau_hip), abs(self.tau_knee), abs(self.tau_ankle))

    @property
    def l2_norm(self) -> float:
        return float(np.linalg.norm(self.as_vector()))

    def mirrored(self) -> "JointTorques":
        """Torques of the mirror-image leg"""
        return JointTorques(-self.tau_hip, -self.tau_knee, -self.tau_ankle)

    def as_dict(self) -> dict:
        return {"hip": self.tau_hip, "knee": self.tau_knee, "ankle": self.tau_ankle}
