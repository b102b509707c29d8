"""Command-line front end: ``timebin-amp run|sweep|patterns|verify``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error,
3 I/O error.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from . import __version__
from .analysis.sweep import SweepSource, sweep, t_grid
from .analysis.verification import CHECKS, GridName, run_checks
from .config import get_config
from .errors import DomainError
from .protocol.models import DetectorModel, ProtocolConfig
from .protocol.runner import run_protocol
from .records import (
    make_record,
    patterns_csv,
    patterns_table,
    run_csv,
    sweep_csv,
    sweep_gnuplot,
    sweep_json_rows,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3

_FLAG_NAMES = {
    "alpha": "--alpha",
    "beta": "--beta",
    "eta": "--eta",
    "t": "--t",
    "detector_model": "--detector",
}


class UsageError(Exception):
    """Invalid flag value detected after argument parsing."""


def _eta_list(text: str) -> list[float]:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid eta list {text!r}") from e


def _describe_validation(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        loc = item.get("loc") or ()
        flag = _FLAG_NAMES.get(str(loc[0]), str(loc[0])) if loc else "--alpha/--beta"
        parts.append(f"{flag}: {item['msg']}")
    return "; ".join(parts)


def _protocol_config(args: argparse.Namespace) -> ProtocolConfig:
    try:
        return ProtocolConfig(
            alpha=args.alpha,
            beta=args.beta,
            eta=args.eta,
            t=args.t,
            detector_model=args.detector,
        )
    except ValidationError as e:
        raise UsageError(_describe_validation(e)) from e


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    Path(output).write_text(text, encoding="utf-8")
    logger.info("Wrote %s", output)


def cmd_run(args: argparse.Namespace) -> int:
    config = _protocol_config(args)
    result = run_protocol(config)
    if args.format == "csv":
        text = run_csv(result)
    else:
        record = make_record(
            "run", config.model_dump(mode="json"), result, with_meta=not args.no_meta
        )
        text = record.to_json()
    _emit(text, args.output)
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    for eta in args.eta_list:
        if not 0.0 <= eta <= 1.0:
            raise UsageError(f"--eta-list: eta must be in [0, 1], got {eta}")
    try:
        ts = t_grid(args.t_min, args.t_max, args.t_step)
    except DomainError as e:
        raise UsageError(f"--t-min/--t-max/--t-step: {e}") from e
    rows = sweep(args.eta_list, ts, SweepSource(args.source))
    if args.format == "gnuplot":
        text = sweep_gnuplot(rows, args.quantity)
    elif args.format == "json":
        config: dict[str, Any] = {
            "eta_list": args.eta_list,
            "t_min": args.t_min,
            "t_max": args.t_max,
            "t_step": args.t_step,
            "quantity": args.quantity,
            "source": args.source,
        }
        text = make_record(
            "sweep", config, sweep_json_rows(rows, args.quantity), with_meta=not args.no_meta
        ).to_json()
    else:
        text = sweep_csv(rows)
    _emit(text, args.output)
    return EXIT_OK


def cmd_patterns(args: argparse.Namespace) -> int:
    config = _protocol_config(args)
    result = run_protocol(config)
    if args.format == "csv":
        text = patterns_csv(result.per_pattern, args.branch)
    elif args.format == "json":
        text = make_record(
            "patterns",
            {**config.model_dump(mode="json"), "branch": args.branch},
            result.per_pattern,
            with_meta=not args.no_meta,
        ).to_json()
    else:
        text = patterns_table(result.per_pattern, args.branch)
    _emit(text, args.output)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_checks(args.grid, args.check or None)
    lines = [f"verify grid={report.grid}"]
    for check in report.checks:
        status = "ok  " if check.passed else "FAIL"
        lines.append(f"  {status} {check.name:<26} max_error={check.max_error:.3e}  {check.detail}")
    failure = report.first_failure
    if failure is None:
        lines.append(f"all {len(report.checks)} checks passed")
    else:
        lines.append(f"first failure: {failure.name}: {failure.detail}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def _add_protocol_flags(parser: argparse.ArgumentParser, *, eta_required: bool = True) -> None:
    default = 1 / math.sqrt(2)
    parser.add_argument("--alpha", type=float, default=default, help="S_H amplitude (default 1/sqrt2)")
    parser.add_argument("--beta", type=float, default=default, help="L_V amplitude (default 1/sqrt2)")
    parser.add_argument("--eta", type=float, required=eta_required, help="Input fidelity in [0, 1]")
    parser.add_argument("--t", type=float, required=True, help="VBS transmission in [0, 1]")
    parser.add_argument(
        "--detector",
        choices=[m.value for m in DetectorModel],
        default=DetectorModel.NUMBER_RESOLVING.value,
        help="Heralding detector model",
    )


def _add_output_flags(parser: argparse.ArgumentParser, formats: list[str]) -> None:
    parser.add_argument("--format", choices=formats, default=formats[0], help="Output layout")
    parser.add_argument("--output", "-o", help="Output path (default stdout)")
    parser.add_argument(
        "--no-meta", action="store_true", help="Omit the timestamped meta block from JSON"
    )


def build_parser() -> argparse.ArgumentParser:
    cfg = get_config()
    parser = argparse.ArgumentParser(
        prog="timebin-amp",
        description="Exact simulator for heralded amplification of time-bin single-photon entanglement",
    )
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument("--version", action="version", version=f"timebin-amp {__version__}")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    run_parser = subparsers.add_parser("run", help="Run one protocol instance")
    _add_protocol_flags(run_parser)
    _add_output_flags(run_parser, ["json", "csv"])
    run_parser.set_defaults(handler=cmd_run)

    sweep_parser = subparsers.add_parser("sweep", help="Sweep t for several input fidelities")
    sweep_parser.add_argument(
        "--eta-list",
        type=_eta_list,
        default=list(cfg.sweep_etas),
        help="Comma-separated input fidelities (default 0.2,0.4,0.8)",
    )
    sweep_parser.add_argument("--t-min", type=float, default=cfg.sweep_t_min)
    sweep_parser.add_argument("--t-max", type=float, default=cfg.sweep_t_max)
    sweep_parser.add_argument("--t-step", type=float, default=cfg.sweep_t_step)
    sweep_parser.add_argument(
        "--quantity", choices=["g", "eta-prime", "p-total", "all"], default="all"
    )
    sweep_parser.add_argument(
        "--source", choices=[s.value for s in SweepSource], default=SweepSource.CLOSED_FORM.value
    )
    _add_output_flags(sweep_parser, ["csv", "json", "gnuplot"])
    sweep_parser.set_defaults(handler=cmd_sweep)

    patterns_parser = subparsers.add_parser("patterns", help="Per-pattern heralding table")
    _add_protocol_flags(patterns_parser)
    patterns_parser.add_argument(
        "--branch", choices=["entangled", "vacuum", "both"], default="both"
    )
    _add_output_flags(patterns_parser, ["table", "csv", "json"])
    patterns_parser.set_defaults(handler=cmd_patterns)

    verify_parser = subparsers.add_parser("verify", help="Run the verification suite")
    verify_parser.add_argument(
        "--grid", choices=[g.value for g in GridName], default=GridName.QUICK.value
    )
    verify_parser.add_argument(
        "--check", action="append", choices=list(CHECKS), help="Run only the named check"
    )
    verify_parser.add_argument("--output", "-o", help="Output path (default stdout)")
    verify_parser.set_defaults(handler=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Main entry point for the CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)

    level = logging.DEBUG if args.debug else getattr(logging, get_config().log_level, logging.WARNING)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    try:
        return args.handler(args)
    except (UsageError, DomainError) as e:
        print(f"timebin-amp {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"timebin-amp {args.command}: cannot write output: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
