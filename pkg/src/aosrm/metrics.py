"""The six inheritance factors, computed exactly from a tally."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InvalidTally
from .inheritance import InheritanceGraph, Violation
from .redefinition import COUNTER_NAMES, RedefinitionTally

METRIC_NAMES = ("AdIF", "PIF", "AttIF", "AIF", "CMIF", "CIF")

# metric -> (numerator counter, denominator counter)
METRIC_COUNTERS = {
    "AdIF": ("A_r", "A_a"),
    "PIF": ("P_r", "P_a"),
    "AttIF": ("Att_r", "Att_a"),
    "AIF": ("TCA", "TAA"),
    "CMIF": ("M_r", "M_a"),
    "CIF": ("TEC", "TAC"),
}

DEFINED = "defined"
NA = "NA"


@dataclass(frozen=True)
class MetricValue:
    state: str
    numerator: int = 0
    denominator: int = 0

    @property
    def value(self) -> Fraction | None:
        if self.state == NA:
            return None
        return Fraction(self.numerator, self.denominator)

    @property
    def is_na(self) -> bool:
        return self.state == NA

    def exact_text(self) -> str:
        return "NA" if self.is_na else f"{self.numerator}/{self.denominator}"


def ratio(numerator: int, denominator: int, na_as_zero: bool = False) -> MetricValue:
    if numerator < 0 or denominator < 0:
        raise InvalidTally(f"negative counter in {numerator}/{denominator}")
    if denominator == 0:
        if numerator:
            raise InvalidTally(f"{numerator} redefined out of 0 available")
        # the zero reading keeps the empty fraction visible as 0/1
        return MetricValue(DEFINED, 0, 1) if na_as_zero else MetricValue(NA)
    if numerator > denominator:
        raise InvalidTally(f"{numerator} redefined out of {denominator} available")
    return MetricValue(DEFINED, numerator, denominator)


def compute_metrics(tally: RedefinitionTally, na_as_zero: bool = False) -> dict[str, MetricValue]:
    counts = tally.as_dict()
    return {
        name: ratio(counts[num], counts[den], na_as_zero)
        for name, (num, den) in METRIC_COUNTERS.items()
    }


def format_value(v: MetricValue) -> str:
    """Render a metric the way the result tables do.

    Values are truncated (never rounded) to three decimals and trailing
    zeros are dropped, keeping at least one: 2/3 -> "0.666", 1/2 -> "0.5",
    0 -> "0.0", 1 -> "1.0".
    """
    if v.is_na:
        return "NA"
    thousandths = v.numerator * 1000 // v.denominator
    whole, frac = divmod(thousandths, 1000)
    digits = f"{frac:03d}".rstrip("0") or "0"
    return f"{whole}.{digits}"


@dataclass
class TypeRow:
    name: str
    kind: str
    dit: int
    noc: int


def per_type_inheritance(graph: InheritanceGraph) -> list[TypeRow]:
    return [
        TypeRow(q, graph.nodes[q].kind, graph.dit(q), graph.noc(q))
        for q in sorted(graph.nodes)
    ]


@dataclass
class MetricsReport:
    version_label: str
    metrics: dict[str, MetricValue]
    tally: RedefinitionTally
    per_type: list[TypeRow] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)
    na_as_zero: bool = False

    @property
    def adif(self) -> MetricValue:
        return self.metrics["AdIF"]

    @property
    def pif(self) -> MetricValue:
        return self.metrics["PIF"]

    @property
    def attif(self) -> MetricValue:
        return self.metrics["AttIF"]

    @property
    def aif(self) -> MetricValue:
        return self.metrics["AIF"]

    @property
    def cmif(self) -> MetricValue:
        return self.metrics["CMIF"]

    @property
    def cif(self) -> MetricValue:
        return self.metrics["CIF"]

    def formatted(self) -> dict[str, str]:
        return {name: format_value(self.metrics[name]) for name in METRIC_NAMES}

    def verify(self) -> list[str]:
        """Mismatches between stored metric values and ones recomputed from the tally."""
        fresh = compute_metrics(self.tally, self.na_as_zero)
        return [
            f"{name}: stored {self.metrics[name].exact_text()} != recomputed {fresh[name].exact_text()}"
            for name in METRIC_NAMES if fresh[name] != self.metrics[name]
        ]


def metrics_section_lines(report: MetricsReport) -> list[str]:
    lines = [f"{name}={format_value(report.metrics[name])}" for name in METRIC_NAMES]
    counts = report.tally.as_dict()
    lines.extend(f"COUNT.{name}={counts[name]}" for name in COUNTER_NAMES)
    return lines


def append_metrics_section(log, report: MetricsReport):
    log.write_section("[METRICS]", metrics_section_lines(report))
    return log
