"""
Scenario analysis
Includes: configuration, commands, CSV writers, published-value reconciliation
"""

from .config import (
    ScenarioConfig,
    Scenario,
    Settings,
    get_settings,
    parse_config,
    load_config,
    save_config,
    build_scenario,
)
from .commands import (
    CommandResult,
    cmd_squat,
    cmd_redistribute,
    cmd_stairs,
    cmd_actuation,
    cmd_reconcile,
    cmd_all,
    computed_peaks,
)
from .reconcile import (
    ReconciliationRow,
    InferredParameter,
    ReconciliationGeometry,
    fit_reconciliation_geometry,
    reconcile,
    reconciliation_markdown,
)

__all__ = [
    "ScenarioConfig",
    "Scenario",
    "Settings",
    "get_settings",
    "parse_config",
    "load_config",
    "save_config",
    "build_scenario",
    "CommandResult",
    "cmd_squat",
    "cmd_redistribute",
    "cmd_stairs",
    "cmd_actuation",
    "cmd_reconcile",
    "cmd_all",
    "computed_peaks",
    "ReconciliationRow",
    "InferredParameter",
    "ReconciliationGeometry",
    "fit_reconciliation_geometry",
    "reconcile",
    "reconciliation_markdown",
]
