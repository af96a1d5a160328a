"""Command-line entry point.

Subcommands fig2, fig3 and fig4 run the bundled experiment presets; sweep
runs a generic parameter sweep; validate resolves a config and prints the
scenario plus derived diagnostics as JSON.  Configuration resolves in layers:
preset defaults, then --config file, then repeatable --set key=value
overrides (values parsed as JSON, falling back to bare strings).

Exit codes: 0 success, 2 configuration or validation error, 3 evaluation
error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, TextIO

from .errors import ConfigError, EvaluationError, ValidationError
from .experiments import ExperimentResult, run_fig2, run_fig3, run_fig4, run_sweep, write_csv
from .scenario import (
    PRESETS,
    load_config,
    resolved_config,
    scenario_diagnostics,
    scenario_from_config,
    split_config,
)

_COMMANDS = {
    "fig2": "per-subcarrier rates under the three model variants",
    "fig3": "adjacent-antenna phase variation vs. bandwidth per antenna count",
    "fig4": "delay spread and CP overhead vs. bandwidth per center frequency",
    "sweep": "Cartesian sweep over up to two scalar config fields",
    "validate": "resolve and validate a config, print scenario and diagnostics",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pinchsim",
        description="Link-level simulator for OFDM pinching-antenna systems.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, help_text in _COMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--config", default=None, help="JSON config file")
        sub.add_argument(
            "--set",
            dest="overrides",
            action="append",
            default=[],
            metavar="KEY=VALUE",
            help="override a config field (repeatable; value parsed as JSON)",
        )
        sub.add_argument("--out", default=None, help="output path (default stdout)")
    return parser


def _parse_override(item: str) -> tuple[str, Any]:
    key, sep, raw = item.partition("=")
    if not sep or not key:
        raise ConfigError(f"--set expects KEY=VALUE, got {item!r}")
    try:
        value = json.loads(raw)
    except json.JSONDecodeError:
        value = raw
    return key, value


def _resolve_config(args: argparse.Namespace) -> dict[str, Any]:
    config = dict(PRESETS.get(args.command, {}))
    if args.config is not None:
        config.update(load_config(args.config))
    for item in args.overrides:
        key, value = _parse_override(item)
        config[key] = value
    return config


def _run(args: argparse.Namespace, stream: TextIO) -> None:
    scenario_cfg, experiment_cfg = split_config(_resolve_config(args))
    scenario = scenario_from_config(scenario_cfg)

    if args.command == "validate":
        report = {
            "config": resolved_config(scenario),
            "diagnostics": scenario_diagnostics(scenario),
        }
        stream.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
        return

    result: ExperimentResult
    if args.command == "fig2":
        result = run_fig2(scenario)
    elif args.command == "fig3":
        result = run_fig3(
            scenario,
            experiment_cfg.get("fig3_bandwidths"),
            experiment_cfg.get("fig3_pa_counts"),
        )
    elif args.command == "fig4":
        result = run_fig4(
            scenario,
            experiment_cfg.get("fig4_bandwidths"),
            experiment_cfg.get("fig4_center_frequencies"),
        )
    else:
        result = run_sweep(scenario, experiment_cfg.get("sweep_axes"))
    write_csv(result, stream)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.out is None:
            _run(args, sys.stdout)
        else:
            with open(args.out, "w", newline="") as stream:
                _run(args, stream)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EvaluationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
