#!/usr/bin/env python3
"""
Command-line front end for the XRL leg analysis toolkit

Usage:
    python cli.py all --config config/xrl_default.json --out output
    python cli.py redistribute --height 1.0
"""

import argparse
import sys
from typing import List, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from src.analysis.commands import (
    CommandResult,
    cmd_actuation,
    cmd_all,
    cmd_reconcile,
    cmd_redistribute,
    cmd_squat,
    cmd_stairs,
)
from src.analysis.config import build_scenario, get_settings, load_config
from src.model.errors import (
    BranchInfeasibleError,
    ConfigValidationError,
    UnreachableHeightError,
    UnreachableStepError,
    XRLError,
)
from src.utils.logger import get_logger, set_level

console = Console()

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_INFEASIBLE = 3

VERBS = ("squat", "redistribute", "stairs", "actuation", "reconcile", "all")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xrl",
        description="Statics, torque redistribution and actuator sizing for the XRL legs",
    )
    parser.add_argument("verb", choices=VERBS, help="Analysis to run")
    parser.add_argument(
        "--config",
        default=None,
        help="Scenario JSON file (published-scenario defaults when omitted)"
    )
    parser.add_argument(
        "--out",
        default=None,
        help="Output directory (overrides XRL_OUTPUT_DIR and the config file)"
    )
    parser.add_argument(
        "--samples",
        type=int,
        default=None,
        help="Squat sweep samples (overrides the config file)"
    )
    parser.add_argument(
        "--height",
        type=float,
        default=None,
        help="Hip height for redistribute [m]"
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Threads for squat sweeps (overrides XRL_WORKERS and the config file)"
    )
    return parser


def _format(value) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"
    if isinstance(value, tuple):
        return ", ".join(_format(v) for v in value)
    return str(value)


def render(result: CommandResult) -> None:
    """Summary table of one command"""
    table = Table(title=f"xrl {result.name}", show_header=True, header_style="bold cyan")
    table.add_column("quantity")
    table.add_column("value", justify="right")
    for key, value in result.summary.items():
        table.add_row(str(key), _format(value))
    console.print(table)
    for path in result.files:
        console.print(f"[dim]wrote {path}[/dim]")


def main(argv: Optional[List[str]] = None) -> int:
    """Run one verb; returns the process exit code"""
    args = build_parser().parse_args(argv)
    logger = get_logger("cli")

    try:
        settings = get_settings()
        set_level(settings.LOG_LEVEL)
        if args.samples is not None and args.samples < 1:
            raise ConfigValidationError(f"must be >= 1, got {args.samples}", "--samples")
        if args.workers is not None and args.workers < 1:
            raise ConfigValidationError(f"must be >= 1, got {args.workers}", "--workers")
        config = load_config(args.config)
        scenario = build_scenario(
            config,
            output_dir=args.out if args.out is not None else settings.XRL_OUTPUT_DIR,
            samples=args.samples,
            workers=args.workers if args.workers is not None else settings.XRL_WORKERS,
        )
    except ConfigValidationError as e:
        console.print(f"[red]Invalid configuration: {e}[/red]")
        return EXIT_CONFIG

    try:
        if args.verb == "squat":
            results = [cmd_squat(scenario)]
        elif args.verb == "redistribute":
            results = [cmd_redistribute(scenario, args.height)]
        elif args.verb == "stairs":
            results = [cmd_stairs(scenario)]
        elif args.verb == "actuation":
            results = [cmd_actuation(scenario)]
        elif args.verb == "reconcile":
            results = [cmd_reconcile(scenario)]
        else:
            results = cmd_all(scenario)
    except (UnreachableHeightError, UnreachableStepError, BranchInfeasibleError) as e:
        console.print(f"[red]Infeasible scenario: {e}[/red]")
        return EXIT_INFEASIBLE
    except XRLError as e:
        logger.error(f"{args.verb} failed: {e}")
        console.print(f"[red]{args.verb} failed: {e}[/red]")
        return EXIT_CONFIG

    console.print(Panel.fit(
        f"[bold cyan]XRL {args.verb}[/bold cyan] -> {scenario.output_dir}",
        border_style="cyan"
    ))
    for result in results:
        render(result)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
