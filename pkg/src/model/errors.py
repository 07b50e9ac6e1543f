"""
Error hierarchy for the XRL analysis toolkit

All errors derive from ValueError so callers that only care about bad
input can catch the builtin.
"""


class XRLError(ValueError):
    """Base class for every toolkit error"""


class DegenerateGeometryError(XRLError):
    """Link lengths or attachment heights that cannot form a leg"""


class NegativeInputError(XRLError):
    """A mass, force or length that must be non-negative was negative"""


class UnreachableHeightError(XRLError):
    """Requested hip height lies outside the leg's reachable band"""


class BranchInfeasibleError(XRLError):
    """Knee branch does not match the plane model"""


class UnreachableStepError(XRLError):
    """Stair step is taller than the squat band of the leg"""


class OverCurrentError(XRLError):
    """Motor current outside the rated range"""


class ConfigValidationError(XRLError):
    """Scenario configuration failed validation"""

    def __init__(self, message: str, field_path: str = ""):
        self.field_path = field_path
        super().__init__(f"{field_path}: {message}" if field_path else message)
