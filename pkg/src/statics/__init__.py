"""
Squat statics for the XRL legs
Includes: Jacobian-transpose torques, closed-chain internal wrench,
L2 (pseudoinverse) and minimax redistribution, profiles and comparisons
"""

from .closed_chain import (
    InternalWrench,
    GroundReaction,
    pseudoinverse,
    leg_torques_from_wrench,
    sagittal_posture,
    frontal_posture,
    sagittal_squat_torques,
    frontal_chain_torques,
    frontal_leg_pair,
    l2_projector,
    optimal_internal_wrench,
    optimal_torques_l2,
    torque_objective,
    ground_reactions,
    equilibrium_residual,
)
from .minimax import (
    AnkleMode,
    FamilyOffsets,
    RedistributionSample,
    minimax_family,
    family_internal_wrench,
    solve_minimax,
    minimax_torques,
    fixed_ankle_torque,
    redistribution_sweep,
)
from .profiles import (
    Strategy,
    ProfileSample,
    SquatProfile,
    ComparisonRow,
    COMPARED_STRATEGIES,
    default_heights,
    evaluate_strategy,
    squat_profile,
    comparison_rows,
    compare_strategies,
    joint_peaks,
)

__all__ = [
    "InternalWrench",
    "GroundReaction",
    "pseudoinverse",
    "leg_torques_from_wrench",
    "sagittal_posture",
    "frontal_posture",
    "sagittal_squat_torques",
    "frontal_chain_torques",
    "frontal_leg_pair",
    "l2_projector",
    "optimal_internal_wrench",
    "optimal_torques_l2",
    "torque_objective",
    "ground_reactions",
    "equilibrium_residual",
    "AnkleMode",
    "FamilyOffsets",
    "RedistributionSample",
    "minimax_family",
    "family_internal_wrench",
    "solve_minimax",
    "minimax_torques",
    "fixed_ankle_torque",
    "redistribution_sweep",
    "Strategy",
    "ProfileSample",
    "SquatProfile",
    "ComparisonRow",
    "COMPARED_STRATEGIES",
    "default_heights",
    "evaluate_strategy",
    "squat_profile",
    "comparison_rows",
    "compare_strategies",
    "joint_peaks",
]
