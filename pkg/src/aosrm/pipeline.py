"""End-to-end analysis of one version directory."""

from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import AosrmError
from .inheritance import InheritanceGraph, Violation, build_graph
from .metrics import MetricsReport, append_metrics_section, compute_metrics, per_type_inheritance
from .model import SourceUnit
from .parser import parse_file
from .redefinition import DetectorConfig, RedefinitionMarks, RedefinitionTally, detect, tally
from .runlog import open_run_log
from .scanner import ScanResult, scan_tree
from .signatures import append_signature_section

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AnalysisConfig:
    detectors: DetectorConfig = DetectorConfig()
    na_as_zero: bool = False
    lang_filter: str = "auto"


@dataclass
class Analysis:
    scan: ScanResult
    units: list[SourceUnit]
    graph: InheritanceGraph
    marks: RedefinitionMarks
    report: MetricsReport
    failed_files: list[tuple[Path, str]] = field(default_factory=list)

    @property
    def violations(self) -> list[Violation]:
        return self.report.violations


class NoParsableFiles(AosrmError):
    pass


def analyze_units(
    units: list[SourceUnit], label: str, config: AnalysisConfig = AnalysisConfig(), extra_warnings=()
) -> tuple[InheritanceGraph, RedefinitionMarks, MetricsReport]:
    graph, violations = build_graph(units)
    marks, pointcut_violations = detect(graph, config.detectors)
    counts: RedefinitionTally = tally(graph, marks)
    warnings = list(extra_warnings)
    for unit in sorted(units, key=lambda u: str(u.file.absolute_path)):
        warnings.extend(unit.warnings)
    warnings.extend(graph.warnings)
    report = MetricsReport(
        version_label=label,
        metrics=compute_metrics(counts, config.na_as_zero),
        tally=counts,
        per_type=per_type_inheritance(graph),
        violations=sorted(violations + pointcut_violations),
        warnings=warnings,
        na_as_zero=config.na_as_zero,
    )
    return graph, marks, report


def analyze(
    root: str | os.PathLike,
    config: AnalysisConfig = AnalysisConfig(),
    log_path: str | os.PathLike | None = None,
    label: str | None = None,
) -> Analysis:
    """Scan, parse and measure one version directory.

    Files that fail to tokenize or parse are reported and left out; the
    analysis is fatal (NoParsableFiles) only when files exist and none of
    them parse.
    """
    scan = scan_tree(root, config.lang_filter)
    label = label or scan.root.name
    runlog = open_run_log(log_path, scan) if log_path is not None else None
    try:
        units: list[SourceUnit] = []
        failed: list[tuple[Path, str]] = []
        for sf in scan.files:
            try:
                units.append(parse_file(sf))
            except OSError as exc:
                failed.append((sf.absolute_path, f"unreadable: {exc.strerror or exc}"))
            except AosrmError as exc:
                failed.append((sf.absolute_path, f"{type(exc).__name__}: {exc}"))
        if scan.files and not units:
            raise NoParsableFiles(f"none of the {len(scan.files)} source files under {scan.root} could be parsed")
        extra = [f"{p}: skipped ({reason})" for p, reason in scan.skipped]
        extra += [f"{p}: not analyzed ({reason})" for p, reason in failed]
        for line in extra:
            log.warning(line)
        graph, marks, report = analyze_units(units, label, config, extra)
        if runlog is not None:
            append_signature_section(runlog, units, marks)
            append_metrics_section(runlog, report)
    finally:
        if runlog is not None:
            runlog.close()
    return Analysis(scan, units, graph, marks, report, failed)

