"""Command-line interface.

Subcommands:
  spectrum  relative energy levels of the cold Hamiltonian across a sweep
  cycle     a single Otto cycle: one summary row, optional per-level file
  sweep     cycle observables across a sweep (per the config's discord flag)
  discord   sweep with discord differences forced on
  approx    numeric W_1 against the two-level closed form and its bound
  preset    print the fully resolved config for a named figure preset

All subcommands accept --config/--preset plus output and override flags.
Environment variables with the RABIOTTO_ prefix override any config key.
Exit codes: 0 success, 2 configuration error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .eigensolver import EigensolverError
from .spectral import ConvergenceError, converged_cutoff
from .cycle import run_cycle
from .sweep import (
    ConfigError,
    SweepConfig,
    SweepResult,
    _config_from_dict,
    apply_env_overrides,
    figure_preset,
    protocol_from_config,
    run_sweep,
    write_output,
    _format_value,
)

NUMERICAL_ERRORS = (EigensolverError, ConvergenceError, ArithmeticError, FloatingPointError)

CYCLE_SUMMARY_COLUMNS = [
    "g_over_omega_c", "theta", "variant", "W", "Q_h", "Q_c", "eta", "regime", "config_hash",
]
PER_LEVEL_COLUMNS = ["n", "E_n_h", "E_n_c", "P_n_h", "P_n_c", "W_n", "config_hash"]


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help="path to a JSON config document")
    parser.add_argument("--preset", help="figure preset name (fig2 ... fig10)")
    parser.add_argument("--out", help="output file (default: stdout)")
    parser.add_argument("--format", choices=("csv", "json"), help="output format")
    parser.add_argument("--workers", type=int, help="parallel workers (0 = all cores)")
    parser.add_argument("--omega-ref", type=float, dest="omega_ref",
                        help="reference angular frequency in rad/s")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rabiotto",
        description="Quantum Otto engine with a generalized-Rabi working substance",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, descr in (
        ("spectrum", "relative energy levels across a coupling sweep"),
        ("sweep", "Otto-cycle observables across a sweep"),
        ("discord", "sweep with quantum-discord differences"),
        ("approx", "numeric W_1 vs the two-level approximation"),
    ):
        p = sub.add_parser(name, help=descr)
        _add_common(p)
    p_cycle = sub.add_parser("cycle", help="a single Otto cycle")
    _add_common(p_cycle)
    p_cycle.add_argument("--per-level", dest="per_level",
                         help="also write a per-level CSV (n, E_n_h, E_n_c, P_n_h, P_n_c, W_n)")
    p_preset = sub.add_parser("preset", help="print a resolved figure-preset config")
    p_preset.add_argument("name", help="preset name (fig2 ... fig10)")
    p_preset.add_argument("--out", help="output file (default: stdout)")
    return parser


def _load_config(args: argparse.Namespace, kind: str | None) -> SweepConfig:
    if getattr(args, "config", None) and getattr(args, "preset", None):
        raise ConfigError("--config and --preset are mutually exclusive")
    if getattr(args, "preset", None):
        data = figure_preset(args.preset).resolved_dict()
    elif getattr(args, "config", None):
        try:
            with open(args.config, "r", encoding="utf-8") as handle:
                data = json.load(handle)
        except OSError as exc:
            raise ConfigError(f"cannot read config file: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config document is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config document must be a JSON object")
    else:
        data = {}
    apply_env_overrides(data)
    if kind is not None:
        data["kind"] = kind
    if getattr(args, "workers", None) is not None:
        data["workers"] = args.workers
    if getattr(args, "omega_ref", None) is not None:
        data["omega_ref"] = args.omega_ref
    if getattr(args, "format", None):
        data["out_format"] = args.format
    if getattr(args, "out", None):
        data["out_path"] = args.out
    return _config_from_dict(data)


def _emit(result: SweepResult, config: SweepConfig) -> int:
    text = write_output(result, config.out_path, config.out_format)
    if not config.out_path:
        sys.stdout.write(text)
    error_col = result.columns.index("error")
    data_rows = [row for row in result.rows]
    if data_rows and all(row[error_col] for row in data_rows):
        sys.stderr.write("rabiotto: every sweep point failed\n")
        return 3
    return 0


def _write_table(path: str | None, columns: list[str], rows: list[list]) -> None:
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(_format_value(v) for v in row))
    text = "\n".join(lines) + "\n"
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _run_single_cycle(args: argparse.Namespace) -> int:
    config = _load_config(args, kind="cycle")
    protocol = protocol_from_config(config)
    if config.cutoff.mode == "fixed":
        cutoff = int(config.cutoff.n_max)
    else:
        cutoff = max(
            converged_cutoff(params, config.n_levels, config.cutoff.tol,
                             ceiling=config.cutoff.ceiling).n_max
            for params in (protocol.cold, protocol.hot)
        )
    states, report = run_cycle(protocol, cutoff=cutoff)
    config_hash = config.config_hash()
    summary = [
        config.g_over_omega_c, config.theta, config.variant,
        report.work, report.q_hot, report.q_cold, report.eta, report.regime, config_hash,
    ]
    _write_table(config.out_path, CYCLE_SUMMARY_COLUMNS, [summary])
    for warning in report.warnings:
        sys.stderr.write(f"rabiotto: warning: {warning}\n")
    if getattr(args, "per_level", None):
        eh = states.hot.ground_referenced()
        ec = states.cold.ground_referenced()
        rows = []
        for n in range(min(protocol.n_levels, states.hot.dim)):
            rows.append([
                n, float(eh[n]), float(ec[n]),
                float(states.populations_hot[n]), float(states.populations_cold[n]),
                float(report.work_per_level[n]), config_hash,
            ])
        _write_table(args.per_level, PER_LEVEL_COLUMNS, rows)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "preset":
            config = figure_preset(args.name)
            text = json.dumps(config.resolved_dict(), indent=1, sort_keys=True) + "\n"
            if args.out:
                with open(args.out, "w", encoding="utf-8") as handle:
                    handle.write(text)
            else:
                sys.stdout.write(text)
            return 0
        if args.command == "cycle":
            return _run_single_cycle(args)
        kind = {"spectrum": "spectrum", "approx": "approx"}.get(args.command)
        config = _load_config(args, kind=kind)
        if args.command == "discord":
            d = config.discord
            config = dataclasses.replace(
                config, discord=dataclasses.replace(d, enabled=True)
            )
        result = run_sweep(config)
        return _emit(result, config)
    except ConfigError as exc:
        sys.stderr.write(f"rabiotto: config error: {exc}\n")
        return 2
    except NUMERICAL_ERRORS as exc:
        sys.stderr.write(f"rabiotto: numerical failure: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
