"""Command-line entry point: ``aosrm analyze`` and ``aosrm compare``.

Exit codes: 0 clean, 2 legality violations found (metrics still produced),
1 fatal error, 3 self-verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .errors import AosrmError
from .pipeline import AnalysisConfig, analyze
from .redefinition import DetectorConfig
from .report import (
    ComparisonTable, emit_chart_data, machine_document, render_csv, render_machine,
    render_table_text, render_text, verify_machine, verify_manifest,
)

EXIT_OK = 0
EXIT_FATAL = 1
EXIT_VIOLATIONS = 2
EXIT_VERIFY = 3

LANG_CHOICES = {"auto": "auto", "java": "java-only", "aspectj": "aspectj-only"}
MANIFEST_NAME = "manifest.json"

CONFIG_KEYS = {
    "advice_redefinition.clause_a": "advice_clause_a",
    "advice_redefinition.clause_b": "advice_clause_b",
    "tec_semantics": "tec_semantics",
    "na_as_zero": "na_as_zero",
}


def _load_config_file(path: str) -> dict:
    """Read dotted configuration keys from a JSON file."""
    data = json.loads(Path(path).read_text(encoding="utf-8"))

    def flatten(obj, prefix=""):
        for key, value in obj.items():
            name = f"{prefix}{key}"
            if isinstance(value, dict):
                yield from flatten(value, name + ".")
            else:
                yield name, value

    out = {}
    for key, value in flatten(data):
        if key not in CONFIG_KEYS:
            raise AosrmError(f"{path}: unknown configuration key {key!r}")
        out[CONFIG_KEYS[key]] = value
    return out


def build_config(args) -> AnalysisConfig:
    settings = {"advice_clause_a": True, "advice_clause_b": True, "tec_semantics": "subclass", "na_as_zero": False}
    if args.config:
        settings.update(_load_config_file(args.config))
    if args.no_advice_clause_a:
        settings["advice_clause_a"] = False
    if args.no_advice_clause_b:
        settings["advice_clause_b"] = False
    if args.tec_semantics:
        settings["tec_semantics"] = args.tec_semantics
    if args.na_as_zero:
        settings["na_as_zero"] = True
    detectors = DetectorConfig(
        bool(settings["advice_clause_a"]), bool(settings["advice_clause_b"]), settings["tec_semantics"]
    )
    return AnalysisConfig(detectors, bool(settings["na_as_zero"]), LANG_CHOICES[args.lang])


def config_summary(config: AnalysisConfig) -> dict:
    return {
        "advice_redefinition.clause_a": config.detectors.advice_clause_a,
        "advice_redefinition.clause_b": config.detectors.advice_clause_b,
        "tec_semantics": config.detectors.tec_semantics,
        "lang": config.lang_filter,
    }


def _verify(report, config: AnalysisConfig, root: Path, manifest: str | None) -> list[str]:
    problems = verify_machine(render_machine(report, config_summary(config)))
    manifest_path = Path(manifest) if manifest else root / MANIFEST_NAME
    if manifest or manifest_path.is_file():
        problems += verify_manifest(report, manifest_path)
    return problems


def cmd_analyze(args) -> int:
    config = build_config(args)
    analysis = analyze(args.root, config, log_path=args.log, label=args.label)
    report = analysis.report
    if args.format == "machine":
        sys.stdout.write(render_machine(report, config_summary(config)))
    elif args.format == "csv":
        sys.stdout.write(render_csv(ComparisonTable([(report.version_label, report)])))
    else:
        sys.stdout.write(render_text(report))
    if args.chart:
        emit_chart_data(ComparisonTable([(report.version_label, report)]), args.chart)
    if args.verify:
        problems = _verify(report, config, analysis.scan.root, args.manifest)
        for p in problems:
            print(f"verify: {p}", file=sys.stderr)
        if problems:
            return EXIT_VERIFY
    return EXIT_VIOLATIONS if report.violations else EXIT_OK


def cmd_compare(args) -> int:
    config = build_config(args)
    roots = [Path(r) for r in args.roots]
    if len(roots) < 2:
        print("compare needs at least two version directories", file=sys.stderr)
        return EXIT_FATAL
    labels = args.labels.split(",") if args.labels else [Path(r).resolve().name for r in roots]
    if len(labels) != len(roots):
        print(f"{len(labels)} labels given for {len(roots)} versions", file=sys.stderr)
        return EXIT_FATAL
    if args.log_dir:
        Path(args.log_dir).mkdir(parents=True, exist_ok=True)

    analyses = []
    for label, root in zip(labels, roots):
        log_path = Path(args.log_dir) / f"{label}.log" if args.log_dir else None
        analyses.append(analyze(root, config, log_path=log_path, label=label))

    table = ComparisonTable([(a.report.version_label, a.report) for a in analyses])
    if args.format == "machine":
        doc = {
            "format": "aosrm-comparison/1",
            "versions": [machine_document(a.report, config_summary(config)) for a in analyses],
        }
        sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    elif args.format == "csv":
        sys.stdout.write(render_csv(table))
    else:
        sys.stdout.write(render_table_text(table))
    if args.chart:
        emit_chart_data(table, args.chart)
    if args.verify:
        failed = False
        for a in analyses:
            for p in _verify(a.report, config, a.scan.root, None):
                print(f"verify [{a.report.version_label}]: {p}", file=sys.stderr)
                failed = True
        if failed:
            return EXIT_VERIFY
    return EXIT_VIOLATIONS if any(a.report.violations for a in analyses) else EXIT_OK


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "csv", "machine"), default="text")
    p.add_argument("--lang", choices=tuple(LANG_CHOICES), default="auto", help="which source files to scan")
    p.add_argument("--chart", metavar="FILE", help="write bar-chart data (version,metric,value) to FILE")
    p.add_argument("--config", metavar="FILE", help="JSON file with detector settings")
    p.add_argument("--na-as-zero", action="store_true", help="report 0 instead of NA for empty denominators")
    p.add_argument("--tec-semantics", choices=("subclass", "superclass"))
    p.add_argument("--no-advice-clause-a", action="store_true",
                   help="do not count advice bound to an inherited pointcut as redefined")
    p.add_argument("--no-advice-clause-b", action="store_true",
                   help="do not count advice calling an overriding method as redefined")
    p.add_argument("--verify", action="store_true",
                   help="recompute metrics from the tally (and check manifest.json if present)")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aosrm", description="Inheritance-reuse metrics for Java/AspectJ sources.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="measure one version directory")
    a.add_argument("root")
    a.add_argument("--log", metavar="FILE", help="write the run log to FILE")
    a.add_argument("--label", help="version label (default: directory name)")
    a.add_argument("--manifest", metavar="FILE", help="hand-count manifest for --verify")
    _common(a)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("compare", help="tabulate several versions side by side")
    c.add_argument("roots", nargs="+")
    c.add_argument("--labels", help="comma-separated version labels, in argument order")
    c.add_argument("--log-dir", metavar="DIR", help="write one run log per version into DIR")
    _common(c)
    c.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (AosrmError, OSError, ValueError) as exc:
        print(f"aosrm: error: {exc}", file=sys.stderr)
        return EXIT_FATAL


if __name__ == "__main__":
    sys.exit(main())
