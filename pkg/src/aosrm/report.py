"""Rendering of metric reports, multi-version comparison and chart data."""

from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import IoFailure
from .inheritance import Violation
from .metrics import (
    DEFINED, METRIC_NAMES, NA, MetricsReport, MetricValue, TypeRow, compute_metrics, format_value,
)
from .redefinition import COUNTER_NAMES, RedefinitionTally

MACHINE_FORMAT = "aosrm-report/1"
CSV_HEADER = ["version", *METRIC_NAMES]


@dataclass
class ComparisonTable:
    rows: list[tuple[str, MetricsReport]] = field(default_factory=list)

    @property
    def columns(self) -> tuple[str, ...]:
        return METRIC_NAMES

    def cells(self) -> list[list[str]]:
        return [[label, *(format_value(r.metrics[m]) for m in METRIC_NAMES)] for label, r in self.rows]


def _csv_text(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def render_csv(table: ComparisonTable) -> str:
    return _csv_text([CSV_HEADER, *table.cells()])


def render_table_text(table: ComparisonTable) -> str:
    cells = [["Version", *METRIC_NAMES], *table.cells()]
    widths = [max(len(row[i]) for row in cells) for i in range(len(cells[0]))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render_text(report: MetricsReport) -> str:
    out = [f"AOSRM report: {report.version_label}", ""]
    out.append(f"{'metric':<6}  {'value':<6}  exact")
    for name in METRIC_NAMES:
        v = report.metrics[name]
        out.append(f"{name:<6}  {format_value(v):<6}  {v.exact_text()}")
    out.append("")
    counts = report.tally.as_dict()
    out.append("counters: " + " ".join(f"{k}={counts[k]}" for k in COUNTER_NAMES))
    out.append("")
    out.append(f"types ({len(report.per_type)}):")
    if report.per_type:
        width = max(len(r.name) for r in report.per_type)
        out.append(f"  {'name':<{width}}  {'kind':<9}  DIT  NOC")
        for r in report.per_type:
            out.append(f"  {r.name:<{width}}  {r.kind:<9}  {r.dit:>3}  {r.noc:>3}")
    out.append("")
    out.append(f"violations ({len(report.violations)}):")
    for v in report.violations:
        out.append(f"  {v.kind}: {v.subject} ({v.detail}) at {v.location[0]}:{v.location[1]}")
    out.append(f"warnings ({len(report.warnings)}):")
    out.extend(f"  {w}" for w in report.warnings)
    return "\n".join(out) + "\n"


def machine_document(report: MetricsReport, config: dict | None = None) -> dict:
    return {
        "format": MACHINE_FORMAT,
        "version": report.version_label,
        "config": {"na_as_zero": report.na_as_zero, **(config or {})},
        "tally": report.tally.as_dict(),
        "metrics": {
            name: {"exact": report.metrics[name].exact_text(), "display": format_value(report.metrics[name])}
            for name in METRIC_NAMES
        },
        "types": [{"name": r.name, "kind": r.kind, "dit": r.dit, "noc": r.noc} for r in report.per_type],
        "violations": [
            {"kind": v.kind, "subject": v.subject, "detail": v.detail, "path": v.location[0], "line": v.location[1]}
            for v in report.violations
        ],
        "warnings": list(report.warnings),
    }


def render_machine(report: MetricsReport, config: dict | None = None) -> str:
    return json.dumps(machine_document(report, config), indent=2, sort_keys=True) + "\n"


def _parse_exact(text: str) -> MetricValue:
    if text == "NA":
        return MetricValue(NA)
    num, den = text.split("/")
    return MetricValue(DEFINED, int(num), int(den))


def report_from_machine(text: str) -> MetricsReport:
    doc = json.loads(text)
    if doc.get("format") != MACHINE_FORMAT:
        raise ValueError(f"not an {MACHINE_FORMAT} document")
    return MetricsReport(
        version_label=doc["version"],
        metrics={name: _parse_exact(doc["metrics"][name]["exact"]) for name in METRIC_NAMES},
        tally=RedefinitionTally.from_dict(doc["tally"]),
        per_type=[TypeRow(t["name"], t["kind"], t["dit"], t["noc"]) for t in doc["types"]],
        violations=[Violation(v["kind"], v["subject"], v["detail"], (v["path"], v["line"])) for v in doc["violations"]],
        warnings=list(doc["warnings"]),
        na_as_zero=bool(doc["config"].get("na_as_zero", False)),
    )


def verify_machine(text: str) -> list[str]:
    """Recompute every metric of a machine report from its embedded tally."""
    doc = json.loads(text)
    report = report_from_machine(text)
    problems = report.verify()
    fresh = compute_metrics(report.tally, report.na_as_zero)
    for name in METRIC_NAMES:
        shown = doc["metrics"][name]["display"]
        if shown != format_value(fresh[name]):
            problems.append(f"{name}: display {shown!r} != {format_value(fresh[name])!r}")
    return problems


def verify_manifest(report: MetricsReport, manifest_path: str | os.PathLike) -> list[str]:
    """Compare the tally against a hand-count manifest (``counts`` object of a JSON file)."""
    try:
        manifest = json.loads(Path(manifest_path).read_text(encoding="utf-8"))
    except OSError as exc:
        raise IoFailure(f"cannot read manifest {manifest_path}", exc) from exc
    counts = report.tally.as_dict()
    expected = manifest.get("counts", {})
    return [
        f"{name}: counted {counts[name]} but manifest says {expected[name]}"
        for name in COUNTER_NAMES if name in expected and int(expected[name]) != counts[name]
    ]


def chart_records(table: ComparisonTable) -> list[tuple[str, str, str]]:
    return [
        (label, name, "null" if report.metrics[name].is_na else format_value(report.metrics[name]))
        for label, report in table.rows
        for name in METRIC_NAMES
    ]


def emit_chart_data(table: ComparisonTable, out: str | os.PathLike) -> Path:
    """Write grouped-bar-chart data: one ``version,metric,value`` record per line, NA as ``null``."""
    if not table.rows:
        raise ValueError("empty comparison table")
    path = Path(out)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(_csv_text(chart_records(table)))
    except OSError as exc:
        raise IoFailure(f"cannot write chart data {path}: {exc.strerror or exc}", exc) from exc
    return path
