"""Detection of redefined members and the counters behind the six factors."""

from __future__ import annotations

from dataclasses import dataclass, field, fields

from .inheritance import (
    OVERRIDES_CONCRETE_POINTCUT, InheritanceGraph, Violation, _location, is_abstract_aspect,
)
from .model import ASPECT, CLASS, CONSTRUCTOR

TEC_SUBCLASS = "subclass"
TEC_SUPERCLASS = "superclass"


@dataclass(frozen=True)
class DetectorConfig:
    advice_clause_a: bool = True
    advice_clause_b: bool = True
    tec_semantics: str = TEC_SUBCLASS

    def __post_init__(self):
        if self.tec_semantics not in (TEC_SUBCLASS, TEC_SUPERCLASS):
            raise ValueError(f"tec_semantics must be subclass or superclass, not {self.tec_semantics!r}")


@dataclass
class RedefinitionMarks:
    redefined_methods: set[tuple[str, str]] = field(default_factory=set)
    redefined_fields: set[tuple[str, str]] = field(default_factory=set)
    redefined_pointcuts: set[tuple[str, str]] = field(default_factory=set)
    redefined_advices: set[tuple[str, int]] = field(default_factory=set)
    extended_classes: set[str] = field(default_factory=set)
    concrete_aspects: set[str] = field(default_factory=set)


@dataclass(frozen=True)
class RedefinitionTally:
    A_r: int = 0
    A_a: int = 0
    P_r: int = 0
    P_a: int = 0
    Att_r: int = 0
    Att_a: int = 0
    M_r: int = 0
    M_a: int = 0
    TCA: int = 0
    TAA: int = 0
    TEC: int = 0
    TAC: int = 0

    def as_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: dict) -> RedefinitionTally:
        return cls(**{f.name: int(data[f.name]) for f in fields(cls)})


COUNTER_NAMES = tuple(f.name for f in fields(RedefinitionTally))


def _aspect_ancestors(graph: InheritanceGraph, name: str) -> list[str]:
    return [a for a in graph.ancestors(name) if graph.nodes[a].kind == ASPECT]


def _overrides(graph: InheritanceGraph, owner: str, ancestors: list[str]) -> set[str]:
    """Signature keys of ``owner``'s instance methods also declared by one of ``ancestors``."""
    inherited = {
        m.key for a in ancestors for m in graph.nodes[a].methods
        if m.name != CONSTRUCTOR and not m.is_static
    }
    return {
        m.key_text for m in graph.nodes[owner].methods
        if m.name != CONSTRUCTOR and not m.is_static and m.key in inherited
    }


def method_redefinitions(graph: InheritanceGraph) -> set[tuple[str, str]]:
    """(class, signature key) for every class method overriding an ancestor's."""
    marks = set()
    for decl in graph.of_kind(CLASS):
        ancestors = [a for a in graph.ancestors(decl.qualified_name) if graph.nodes[a].kind == CLASS]
        for key in _overrides(graph, decl.qualified_name, ancestors):
            marks.add((decl.qualified_name, key))
    return marks


def pointcut_redefinitions(graph: InheritanceGraph) -> set[tuple[str, str]]:
    marks = set()
    for decl in graph.of_kind(ASPECT):
        inherited = {p.name for a in _aspect_ancestors(graph, decl.qualified_name) for p in graph.nodes[a].pointcuts}
        marks.update((decl.qualified_name, p.name) for p in decl.pointcuts if p.name in inherited)
    return marks


def concrete_pointcut_overrides(graph: InheritanceGraph) -> list[Violation]:
    """Pointcuts that override a concrete pointcut of the nearest declaring ancestor aspect."""
    out = []
    for decl in graph.of_kind(ASPECT):
        ancestors = _aspect_ancestors(graph, decl.qualified_name)
        for pc in decl.pointcuts:
            for a in ancestors:
                base = next((p for p in graph.nodes[a].pointcuts if p.name == pc.name), None)
                if base is None:
                    continue
                if not base.is_abstract:
                    out.append(Violation(
                        OVERRIDES_CONCRETE_POINTCUT, decl.qualified_name,
                        f"pointcut {pc.name} overrides concrete pointcut of {a}", _location(decl),
                    ))
                break
    return sorted(out)


def attribute_redefinitions(graph: InheritanceGraph) -> set[tuple[str, str]]:
    """(owner, field) for fields of classes and aspects re-declared from any ancestor."""
    marks = set()
    for decl in graph.of_kind(CLASS) + graph.of_kind(ASPECT):
        inherited = {f.name for a in graph.ancestors(decl.qualified_name) for f in graph.nodes[a].fields}
        marks.update((decl.qualified_name, f.name) for f in decl.fields if f.name in inherited)
    return marks


def advice_redefinitions(graph: InheritanceGraph, clause_a: bool = True, clause_b: bool = True) -> set[tuple[str, int]]:
    """Advice tied to inherited structure.

    (a) the advice is bound to a pointcut declared in an ancestor aspect;
    (b) the advice calls a method of its own aspect that overrides a method
        of an ancestor aspect.
    """
    marks = set()
    for decl in graph.of_kind(ASPECT):
        ancestors = _aspect_ancestors(graph, decl.qualified_name)
        inherited_pcs = {p.name for a in ancestors for p in graph.nodes[a].pointcuts}
        overriding = {key.split("(", 1)[0] for key in _overrides(graph, decl.qualified_name, ancestors)}
        for adv in decl.advices:
            if clause_a and adv.bound_pointcut_name in inherited_pcs:
                marks.add((decl.qualified_name, adv.ordinal))
            elif clause_b and adv.called_method_names & overriding:
                marks.add((decl.qualified_name, adv.ordinal))
    return marks


def classify_aspects(graph: InheritanceGraph) -> tuple[set[str], set[str]]:
    concrete, abstract = set(), set()
    for decl in graph.of_kind(ASPECT):
        (abstract if is_abstract_aspect(decl) else concrete).add(decl.qualified_name)
    return concrete, abstract


def extended_classes(graph: InheritanceGraph, semantics: str = TEC_SUBCLASS) -> set[str]:
    class_edges = [
        (c, p) for c, p in graph.extends_edges
        if graph.nodes[c].kind == CLASS and graph.nodes[p].kind == CLASS
    ]
    if semantics == TEC_SUPERCLASS:
        return {p for _, p in class_edges}
    return {c for c, _ in class_edges}


def detect(graph: InheritanceGraph, config: DetectorConfig = DetectorConfig()) -> tuple[RedefinitionMarks, list[Violation]]:
    concrete, _ = classify_aspects(graph)
    marks = RedefinitionMarks(
        redefined_methods=method_redefinitions(graph),
        redefined_fields=attribute_redefinitions(graph),
        redefined_pointcuts=pointcut_redefinitions(graph),
        redefined_advices=advice_redefinitions(graph, config.advice_clause_a, config.advice_clause_b),
        extended_classes=extended_classes(graph, config.tec_semantics),
        concrete_aspects=concrete,
    )
    return marks, concrete_pointcut_overrides(graph)


def tally(graph: InheritanceGraph, marks: RedefinitionMarks) -> RedefinitionTally:
    aspects = graph.of_kind(ASPECT)
    classes = graph.of_kind(CLASS)
    return RedefinitionTally(
        A_r=len(marks.redefined_advices),
        A_a=sum(len(a.advices) for a in aspects),
        P_r=len(marks.redefined_pointcuts),
        P_a=sum(len(a.pointcuts) for a in aspects),
        Att_r=len(marks.redefined_fields),
        Att_a=sum(len(t.fields) for t in classes + aspects),
        M_r=len(marks.redefined_methods),
        M_a=sum(1 for c in classes for m in c.methods if m.name != CONSTRUCTOR),
        TCA=len(marks.concrete_aspects),
        TAA=len(aspects),
        TEC=len(marks.extended_classes),
        TAC=len(classes),
    )
