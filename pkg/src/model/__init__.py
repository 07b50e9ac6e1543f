"""
XRL domain model
Includes: value types, units, link sizing, load cases, errors
"""

from .errors import (
    XRLError,
    DegenerateGeometryError,
    NegativeInputError,
    UnreachableHeightError,
    BranchInfeasibleError,
    UnreachableStepError,
    OverCurrentError,
    ConfigValidationError,
)
from .types import (
    Anthropometrics,
    LegGeometry,
    LoadCase,
    PlanarWrench,
    JointTorques,
    ScenarioKind,
)
from .sizing import (
    DEFAULT_ASSIST_MOMENT_ARM_M,
    DEFAULT_LATERAL_OFFSET_M,
    DEFAULT_STANCE_WIDTH_M,
    default_anthropometrics,
    solve_link_lengths,
    recompose_heights,
    make_load_case,
)

__all__ = [
    "XRLError",
    "DegenerateGeometryError",
    "NegativeInputError",
    "UnreachableHeightError",
    "BranchInfeasibleError",
    "UnreachableStepError",
    "OverCurrentError",
    "ConfigValidationError",
    "Anthropometrics",
    "LegGeometry",
    "LoadCase",
    "PlanarWrench",
    "JointTorques",
    "ScenarioKind",
    "DEFAULT_ASSIST_MOMENT_ARM_M",
    "DEFAULT_LATERAL_OFFSET_M",
    "DEFAULT_STANCE_WIDTH_M",
    "default_anthropometrics",
    "solve_link_lengths",
    "recompose_heights",
    "make_load_case",
]
