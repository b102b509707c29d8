"""Time-bin Amplifier MCP Server

Exposes protocol runs, sweeps, the pattern table, state evolution and the
verification suite as Model Context Protocol tools. States travel in ket
notation, e.g. ``0.5|S_H@a1> + 0.5|L_V@a1>``.
"""

import logging
import sys

from fastmcp import Context, FastMCP
from fastmcp.exceptions import ToolError
from pydantic import ValidationError

from .. import __version__
from ..analysis.sweep import SweepSource, sweep_async, t_grid
from ..analysis.verification import CHECKS, run_checks
from ..errors import TimebinAmpError
from ..notation import format_state, parse_state
from ..protocol.circuit import build_circuit, evolve
from ..protocol.models import DetectorModel, ProtocolConfig
from ..protocol.runner import run_protocol

logger = logging.getLogger(__name__)

mcp = FastMCP("Time-bin Amplifier")


def _config(eta: float, t: float, alpha: float | None, beta: float | None, detector: str) -> ProtocolConfig:
    fields = {"eta": eta, "t": t, "detector_model": detector}
    if alpha is not None:
        fields["alpha"] = alpha
    if beta is not None:
        fields["beta"] = beta
    try:
        return ProtocolConfig(**fields)
    except ValidationError as e:
        raise ToolError(f"Invalid protocol parameters: {e}")


# ===== PROTOCOL TOOLS =====

async def run_amplifier(
    ctx: Context,
    eta: float,
    t: float,
    alpha: float | None = None,
    beta: float | None = None,
    detector: str = DetectorModel.NUMBER_RESOLVING.value,
) -> dict:
    """Run the amplification protocol once.

    Args:
        eta: Weight of the entangled component before amplification
        t: Transmission of both variable beam splitters
        alpha: S_H amplitude of the qubit (default 1/sqrt2)
        beta: L_V amplitude of the qubit (default 1/sqrt2)
        detector: "number-resolving" or "threshold"

    Returns:
        p1, p2, p_total, eta_out, g, output fidelity and per-pattern rows

    Examples:
        run_amplifier(eta=0.2, t=0.25)  # eta_out = 3/7, g = 15/7
    """
    config = _config(eta, t, alpha, beta, detector)
    await ctx.info(f"Running protocol at eta={eta}, t={t} ({config.detector_model.value})")
    try:
        result = run_protocol(config)
    except TimebinAmpError as e:
        raise ToolError(f"Protocol run failed: {e}")
    await ctx.info(f"✓ p_total={result.p_total:.6g}, eta'={result.eta_out:.6g}")
    return result.model_dump(mode="json")


async def list_patterns(
    ctx: Context,
    eta: float,
    t: float,
    alpha: float | None = None,
    beta: float | None = None,
    detector: str = DetectorModel.NUMBER_RESOLVING.value,
) -> list[dict]:
    """List the sixteen heralding patterns with their probabilities and corrections.

    Each row gives the pattern name (e.g. ``D1aD2a-D1bD2b``), the probability
    that the entangled and the vacuum branch herald it, the phase flips
    applied afterwards and the corrected output fidelity.
    """
    config = _config(eta, t, alpha, beta, detector)
    try:
        result = run_protocol(config)
    except TimebinAmpError as e:
        raise ToolError(f"Protocol run failed: {e}")
    await ctx.info(f"✓ {len(result.per_pattern)} patterns")
    return [
        {**o.model_dump(mode="json"), "correction_label": o.correction_label}
        for o in result.per_pattern
    ]


async def sweep_curves(
    ctx: Context,
    eta_list: list[float],
    t_min: float = 0.01,
    t_max: float = 0.99,
    t_step: float = 0.01,
    source: str = SweepSource.CLOSED_FORM.value,
) -> list[dict]:
    """Evaluate p1, p2, p_total, eta' and g over a t grid for each eta.

    Args:
        eta_list: Input fidelities, e.g. [0.2, 0.4, 0.8]
        t_min, t_max, t_step: Inclusive transmission grid
        source: "closed" for the analytic curves, "brute" for full simulation

    Returns:
        Rows ordered by (eta, t)
    """
    try:
        ts = t_grid(t_min, t_max, t_step)
        await ctx.info(f"Sweeping {len(eta_list)} x {len(ts)} points ({source})")
        rows = await sweep_async(eta_list, ts, SweepSource(source))
    except (TimebinAmpError, ValueError) as e:
        raise ToolError(f"Sweep failed: {e}")
    return [r.model_dump(mode="json") for r in rows]


async def evolve_state(ctx: Context, state: str, t: float) -> dict:
    """Push a ket-notation state through the amplifier circuit.

    Input modes are a1/b1 (signal) and a2/b2 (auxiliary); the output lives on
    the detector paths a5-a8, b5-b8 and on out1/out2.

    Examples:
        evolve_state("|S_H@a2, L_V@a2>", t=0.5)
    """
    try:
        initial = parse_state(state)
        final = evolve(initial, build_circuit(t))
    except (TimebinAmpError, ValueError) as e:
        raise ToolError(f"Cannot evolve state: {e}")
    await ctx.info(f"✓ {len(initial)} -> {len(final)} terms")
    return {
        "state": format_state(final),
        "terms": len(final),
        "norm_squared": final.norm_squared(),
        "photon_numbers": sorted(final.photon_numbers()),
    }


async def verify(ctx: Context, grid: str = "quick", checks: list[str] | None = None) -> dict:
    """Run the verification suite.

    Args:
        grid: "quick" or "full"
        checks: Optional subset of check names; all by default

    Returns:
        Overall pass flag and one row per check
    """
    unknown = [c for c in checks or [] if c not in CHECKS]
    if unknown:
        raise ToolError(f"Unknown checks: {', '.join(unknown)}. Available: {', '.join(CHECKS)}")
    await ctx.info(f"Running {len(checks or CHECKS)} checks on the {grid} grid")
    try:
        report = run_checks(grid, checks)
    except ValueError as e:
        raise ToolError(f"Verification failed to run: {e}")
    return {"passed": report.passed, **report.model_dump(mode="json")}


for _tool in (run_amplifier, list_patterns, sweep_curves, evolve_state, verify):
    mcp.tool(_tool)


# ===== RESOURCES =====

async def docs_notation() -> str:
    """Ket notation reference."""
    return """# Ket notation

A state is a sum of terms `coefficient|occupations>`:

    0.5|S_H@a1> - 0.5|L_V@b1> + (0.1+0.2j)|S_H@a2, L_V@a2> + |2*S_H@a3>

- Mode labels are `<bin>_<pol>@<path>` with bin S or L and pol H or V.
- `2*S_H@a3` puts two photons in one mode.
- `|vac>` is the vacuum.
- Missing coefficients are 1; repeated kets add up.
"""


async def docs_circuit() -> str:
    """Circuit and detector layout."""
    return """# Amplifier circuit

Per party (a shown, b identical with out2):

    VBS   a2 -> sqrt(t) a2 + sqrt(1-t) out1
    BS    a1 -> (a3 + a4)/sqrt2,  a2 -> (a3 - a4)/sqrt2
    PBS   a3 -> a5 (H), a6 (V);   a4 -> a7 (H), a8 (V)

Detectors D1..D4 watch a5..a8. Success needs one S_H detector (D1/D3) and one
L_V detector (D2/D4) per side: D1D2, D1D4, D2D3 or D3D4.
"""


mcp.resource("docs://notation")(docs_notation)
mcp.resource("docs://circuit")(docs_circuit)


# ===== CLI SUPPORT =====

def main():
    """Main entry point for the MCP server."""
    import argparse

    parser = argparse.ArgumentParser(description="Time-bin Amplifier MCP Server")
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument("--version", action="version", version=f"timebin-amp {__version__}")
    args = parser.parse_args()

    level = logging.DEBUG if args.debug else logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr)
    logger.info("Starting Time-bin Amplifier MCP server (debug=%s)", args.debug)

    try:
        mcp.run()
    except KeyboardInterrupt:
        logger.info("MCP server stopped")
        sys.exit(0)


if __name__ == "__main__":
    main()
