#!/usr/bin/env python3
"""Write the gain, fidelity and success-probability curves as gnuplot data."""

import argparse
import asyncio
import sys
from pathlib import Path

# Add the project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from timebin_amp.analysis import SweepSource, closed_max_p_total, sweep_async, t_grid
from timebin_amp.analysis.verification import COEFFICIENT_SET, verify_against_brute_force
from timebin_amp.config import get_config
from timebin_amp.records import sweep_gnuplot

FIGURES = {
    "gain.dat": "g",
    "fidelity.dat": "eta-prime",
    "success.dat": "p-total",
}


async def write_curves(args):
    """Sweep once and write one data file per plotted quantity."""
    cfg = get_config()
    etas = args.eta or list(cfg.sweep_etas)
    ts = t_grid(cfg.sweep_t_min, cfg.sweep_t_max, args.t_step or cfg.sweep_t_step)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    print(f"🚀 Sweeping {len(etas)} x {len(ts)} points ({args.source})...")
    try:
        rows = await sweep_async(etas, ts, SweepSource(args.source), args.threads)
    except Exception as e:
        print(f"❌ Sweep failed: {e}")
        return 1

    for filename, quantity in FIGURES.items():
        path = out_dir / filename
        path.write_text(sweep_gnuplot(rows, quantity), encoding="utf-8")
        print(f"📁 {quantity:<10} -> {path}")

    print("\n📊 Maximum success probability on t <= 1/2:")
    for eta in etas:
        t_best, value = closed_max_p_total(eta)
        print(f"  eta={eta}: P_t={value:.6g} at t={t_best}")
    return 0


def compare(args):
    """Print the brute-force vs closed-form discrepancy per quantity."""
    cfg = get_config()
    etas = args.eta or list(cfg.sweep_etas)
    ts = t_grid(0.05, 0.95, args.t_step or 0.05)
    report = verify_against_brute_force(etas, ts, COEFFICIENT_SET)

    print(f"📊 Compared {report.points} points (tolerance {report.tolerance:g})")
    for name, error in report.max_errors.items():
        print(f"  {name}: {error:.3e}")

    if args.export:
        Path(args.export).write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
        print(f"📁 Exported report to {args.export}")

    if not report.passed:
        print(f"❌ {report.first_failure}")
        return 1
    print("✅ Brute force matches the closed forms")
    return 0


def main():
    """Main CLI entry point."""
    parser = argparse.ArgumentParser(description="Time-bin amplifier figure data")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    curves_parser = subparsers.add_parser("curves", help="Write gnuplot data files")
    curves_parser.add_argument("--out-dir", default="figures", help="Output directory")
    curves_parser.add_argument("--eta", type=float, action="append", help="Input fidelity (repeatable)")
    curves_parser.add_argument("--t-step", type=float, help="Transmission step")
    curves_parser.add_argument("--source", choices=[s.value for s in SweepSource], default="closed")
    curves_parser.add_argument("--threads", type=int, help="Worker threads")

    compare_parser = subparsers.add_parser("compare", help="Brute force vs closed forms")
    compare_parser.add_argument("--eta", type=float, action="append", help="Input fidelity (repeatable)")
    compare_parser.add_argument("--t-step", type=float, help="Transmission step")
    compare_parser.add_argument("--export", help="Write the report as JSON")

    args = parser.parse_args()

    if not args.command:
        parser.print_help()
        return 1

    if args.command == "curves":
        return asyncio.run(write_curves(args))
    elif args.command == "compare":
        return compare(args)
    else:
        parser.print_help()
        return 1


if __name__ == "__main__":
    sys.exit(main())
