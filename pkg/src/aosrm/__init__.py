"""Inheritance-reuse metrics (AdIF, PIF, AttIF, AIF, CMIF, CIF, DIT, NOC) for Java/AspectJ sources."""

from .inheritance import InheritanceGraph, Violation, build_graph, resolve_name
from .lexer import Token, tokenize
from .metrics import MetricsReport, MetricValue, compute_metrics, format_value, ratio
from .model import AdviceDecl, FieldSig, MethodSig, PointcutDecl, SourceUnit, TypeDecl
from .parser import extract_advice_calls, parse_unit
from .pipeline import AnalysisConfig, analyze
from .redefinition import DetectorConfig, RedefinitionMarks, RedefinitionTally, detect, tally
from .scanner import ScanResult, SourceFile, scan_tree

__version__ = "0.1.0"
