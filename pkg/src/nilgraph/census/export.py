"""DOT, JSON and CSV renderings of reports and graphs.

All output is a pure function of its input: vertices keep their canonical
order, JSON keys are sorted, and nothing time-dependent is written.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import structlog

from nilgraph.census.analyze import RingReport
from nilgraph.core.exceptions import ExportError, InvalidParameterError
from nilgraph.core.types import CensusSummary, VerdictStatus
from nilgraph.graphs.nil_graph import NilGraph

logger = structlog.get_logger()

SCHEMA_VERSION = 1
FORMATS: tuple[str, ...] = ("dot", "json", "csv")

CSV_COLUMNS: tuple[str, ...] = (
    "label",
    "order",
    "ideal_count",
    "max_ideals",
    "min_primes",
    "reduced",
    "local",
    "vertices",
    "edges",
    "ag_edges",
    "alpha_strict",
    "alpha_unit",
    "genus",
    "genus_lo",
    "genus_hi",
    "pass",
    "fail",
    "not_applicable",
    "unexpected_failures",
)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(graph: NilGraph, name: str | None = None) -> str:
    """Graphviz text; nodes are labelled by ideal generators, Nil(R) ideals are boxes."""
    title = name or graph.ring.label
    lines = [f"graph {_quote(title)} {{"]
    for i, vertex in enumerate(graph.vertices):
        shape = "box" if graph.in_nil[i] else "ellipse"
        lines.append(f"  {i} [label={_quote(vertex.label())}, shape={shape}];")
    for a, b in sorted(graph.edges):
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dump(payload: dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def to_json(report: RingReport) -> str:
    """One ring report, schema versioned."""
    return _dump({"schema_version": SCHEMA_VERSION, "ring": report.to_dict()})


def census_to_json(reports: Sequence[RingReport], summary: CensusSummary) -> str:
    """A census: reports in label order plus the summary."""
    ordered = sorted(reports, key=lambda r: r.label)
    return _dump(
        {
            "schema_version": SCHEMA_VERSION,
            "rings": [r.to_dict() for r in ordered],
            "summary": summary.to_dict(),
        }
    )


def csv_row(report: RingReport) -> list[Any]:
    statuses = [v.status for v in report.theorems]
    verdict = report.genus.verdict
    return [
        report.label,
        report.order,
        report.ideal_count,
        report.max_count,
        report.min_count,
        int(report.is_reduced),
        int(report.is_local),
        report.graph_order,
        report.graph_size,
        report.ag_size,
        report.alpha_strict,
        report.alpha_unit,
        str(verdict),
        verdict.lo,
        "" if verdict.hi is None else verdict.hi,
        statuses.count(VerdictStatus.PASS),
        statuses.count(VerdictStatus.FAIL),
        statuses.count(VerdictStatus.NOT_APPLICABLE),
        sum(1 for v in report.theorems if v.unexpected),
    ]


def to_csv(reports: Sequence[RingReport]) -> str:
    """One row per ring, sorted by label."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in sorted(reports, key=lambda r: r.label):
        writer.writerow(csv_row(report))
    return buffer.getvalue()


def render(
    fmt: str,
    reports: Sequence[RingReport],
    *,
    graph: NilGraph | None = None,
    summary: CensusSummary | None = None,
) -> str:
    """Render ``reports`` in ``fmt``.

    DOT needs ``graph``; JSON of more than one report (or with a summary)
    produces the census document.

    Raises:
        InvalidParameterError: For an unknown format or a DOT request without a graph
    """
    if fmt == "dot":
        if graph is None:
            raise InvalidParameterError("graph", None, "a nil-graph for DOT output")
        return to_dot(graph)
    if fmt == "json":
        if len(reports) == 1 and summary is None:
            return to_json(reports[0])
        return census_to_json(reports, summary or CensusSummary(ring_count=len(reports)))
    if fmt == "csv":
        return to_csv(reports)
    raise InvalidParameterError("format", fmt, f"one of {', '.join(FORMATS)}")


def write_export(path: Path, text: str) -> Path:
    """Write ``text`` to ``path``, creating parent directories.

    Raises:
        ExportError: If the path cannot be written
    """
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise ExportError(str(path), str(e)) from e
    logger.info("Export written", path=str(path), size=len(text))
    return path
