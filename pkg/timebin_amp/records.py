"""Serialised output of the command-line tools.

JSON records carry ``schema_version`` and, unless disabled, a ``meta`` block
with the package version and a UTC timestamp. CSV and gnuplot layouts carry
data only, so identical inputs give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable, Sequence
from datetime import datetime, timezone
from typing import Any

from pydantic import BaseModel, Field

from . import __version__
from .analysis.sweep import SweepRow
from .protocol.models import PatternOutcome, ProtocolResult

SCHEMA_VERSION = "1"

SWEEP_HEADER = ("eta", "t", "p1", "p2", "p_total", "eta_prime", "g", "source")
RUN_HEADER = (
    "alpha",
    "beta",
    "eta",
    "t",
    "detector",
    "p1",
    "p2",
    "p_total",
    "eta_prime",
    "g",
    "output_fidelity",
)
PATTERN_HEADER = ("pattern", "prob_entangled", "prob_vacuum", "correction", "fidelity")

# sweep --quantity -> SweepRow field
QUANTITY_FIELDS = {"g": "g", "eta-prime": "eta_prime", "p-total": "p_total"}


class OutputRecord(BaseModel):
    """Envelope for every JSON document the CLI emits."""

    schema_version: str = SCHEMA_VERSION
    command: str
    config: dict[str, Any] = Field(default_factory=dict)
    result: Any = None
    meta: dict[str, Any] | None = None

    def to_json(self) -> str:
        payload = self.model_dump(mode="json", exclude_none=False)
        if payload["meta"] is None:
            del payload["meta"]
        return json.dumps(payload, indent=2) + "\n"


def build_meta() -> dict[str, Any]:
    return {
        "version": __version__,
        "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
    }


def make_record(
    command: str, config: dict[str, Any], result: Any, *, with_meta: bool = True
) -> OutputRecord:
    if isinstance(result, BaseModel):
        result = result.model_dump(mode="json")
    elif isinstance(result, list):
        result = [r.model_dump(mode="json") if isinstance(r, BaseModel) else r for r in result]
    return OutputRecord(
        command=command,
        config=config,
        result=result,
        meta=build_meta() if with_meta else None,
    )


def format_number(value: float | None) -> str:
    """Shortest text that reads back to the same float; None becomes an empty field."""
    if value is None:
        return ""
    return repr(float(value))


def _csv_text(header: Sequence[str], rows: Iterable[dict[str, str]]) -> str:
    buf = io.StringIO(newline="")
    writer = csv.DictWriter(buf, fieldnames=list(header), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    return buf.getvalue()


def sweep_csv(rows: Iterable[SweepRow]) -> str:
    return _csv_text(
        SWEEP_HEADER,
        (
            {
                "eta": format_number(r.eta),
                "t": format_number(r.t),
                "p1": format_number(r.p1),
                "p2": format_number(r.p2),
                "p_total": format_number(r.p_total),
                "eta_prime": format_number(r.eta_prime),
                "g": format_number(r.g),
                "source": r.source.value,
            }
            for r in rows
        ),
    )


def sweep_json_rows(rows: Iterable[SweepRow], quantity: str = "all") -> list[dict[str, Any]]:
    """Rows for the JSON layout, narrowed to one plotted quantity if requested."""
    dumped = [r.model_dump(mode="json") for r in rows]
    if quantity == "all":
        return dumped
    field = QUANTITY_FIELDS[quantity]
    return [{"eta": d["eta"], "t": d["t"], field: d[field], "source": d["source"]} for d in dumped]


def sweep_gnuplot(rows: Sequence[SweepRow], quantity: str = "all") -> str:
    """Whitespace-separated blocks, one per eta, separated by two blank lines."""
    fields = ["p1", "p2", "p_total", "eta_prime", "g"] if quantity == "all" else [QUANTITY_FIELDS[quantity]]
    lines: list[str] = []
    current: float | None = None
    for row in rows:
        if row.eta != current:
            if current is not None:
                lines.extend(["", ""])
            current = row.eta
            lines.append(f"# eta={format_number(row.eta)} source={row.source.value}")
            lines.append("# t " + " ".join(fields))
        values = [getattr(row, f) for f in fields]
        lines.append(
            " ".join([format_number(row.t), *(format_number(v) if v is not None else "NaN" for v in values)])
        )
    return "\n".join(lines) + "\n" if lines else ""


def run_csv(result: ProtocolResult) -> str:
    c = result.config
    return _csv_text(
        RUN_HEADER,
        [
            {
                "alpha": format_number(c.alpha),
                "beta": format_number(c.beta),
                "eta": format_number(c.eta),
                "t": format_number(c.t),
                "detector": c.detector_model.value,
                "p1": format_number(result.p1),
                "p2": format_number(result.p2),
                "p_total": format_number(result.p_total),
                "eta_prime": format_number(result.eta_out if result.fidelity_defined else None),
                "g": format_number(result.g),
                "output_fidelity": format_number(result.output_fidelity),
            }
        ],
    )


def pattern_row(outcome: PatternOutcome, branch: str = "both") -> dict[str, str]:
    return {
        "pattern": outcome.pattern.name,
        "prob_entangled": format_number(outcome.prob_entangled) if branch != "vacuum" else "",
        "prob_vacuum": format_number(outcome.prob_vacuum) if branch != "entangled" else "",
        "correction": outcome.correction_label,
        "fidelity": format_number(outcome.fidelity),
    }


def patterns_csv(outcomes: Iterable[PatternOutcome], branch: str = "both") -> str:
    return _csv_text(PATTERN_HEADER, (pattern_row(o, branch) for o in outcomes))


def patterns_table(outcomes: Sequence[PatternOutcome], branch: str = "both") -> str:
    """Aligned plain-text table."""
    columns = ["pattern"]
    if branch in ("entangled", "both"):
        columns.append("prob_entangled")
    if branch in ("vacuum", "both"):
        columns.append("prob_vacuum")
    columns.append("correction")
    rows = [[pattern_row(o, branch)[c] for c in columns] for o in outcomes]
    widths = [max([len(c), *(len(r[i]) for r in rows)]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    lines.extend("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in rows)
    return "\n".join(lines) + "\n"
