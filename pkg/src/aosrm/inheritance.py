"""Corpus-wide class/aspect/interface inheritance graph.

Edges are resolved from the parsed supertype clauses. Illegal edges (a
class or interface extending an aspect, anything extending a concrete
aspect) and edges inside extends-cycles are reported as violations and left
out of the graph, so depth computations always terminate.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from .errors import UnknownType
from .model import ASPECT, CLASS, INTERFACE, SourceUnit, TypeDecl

EXTENDS_CONCRETE_ASPECT = "ExtendsConcreteAspect"
CLASS_EXTENDS_ASPECT = "ClassExtendsAspect"
INTERFACE_EXTENDS_ASPECT = "InterfaceExtendsAspect"
INHERITANCE_CYCLE = "InheritanceCycle"
DUPLICATE_TYPE_NAME = "DuplicateTypeName"
OVERRIDES_CONCRETE_POINTCUT = "OverridesConcretePointcut"


@dataclass(frozen=True, order=True)
class Violation:
    kind: str
    subject: str
    detail: str
    location: tuple[str, int] = ("", 0)


@dataclass(frozen=True)
class Resolution:
    target: str | None
    warning: str | None = None

    @property
    def external(self) -> bool:
        return self.target is None


def is_abstract_aspect(decl: TypeDecl) -> bool:
    """An aspect is abstract if declared so or if it has any abstract member."""
    return decl.is_abstract or decl.has_abstract_members


def _location(decl: TypeDecl) -> tuple[str, int]:
    path, line = decl.source
    return (str(path) if path is not None else "", line)


class NameIndex:
    """Lookup tables for resolving type references within one corpus."""

    def __init__(self, qualified_names):
        self.qualified = set(qualified_names)
        self.by_suffix: dict[str, list[str]] = defaultdict(list)
        for q in sorted(self.qualified):
            parts = q.split(".")
            for k in range(1, len(parts) + 1):
                self.by_suffix[".".join(parts[-k:])].append(q)

    def resolve(self, ref: str, context: SourceUnit) -> Resolution:
        if ref in self.qualified:
            return Resolution(ref)
        pkg = context.package_name
        if pkg and f"{pkg}.{ref}" in self.qualified:
            return Resolution(f"{pkg}.{ref}")
        head, _, rest = ref.partition(".")
        for imp in context.imports:
            if imp.endswith(".*"):
                continue
            if imp.rsplit(".", 1)[-1] == head:
                cand = imp + ("." + rest if rest else "")
                if cand in self.qualified:
                    return Resolution(cand)
        for imp in context.imports:
            if imp.endswith(".*"):
                cand = f"{imp[:-2]}.{ref}"
                if cand in self.qualified:
                    return Resolution(cand)
        candidates = self.by_suffix.get(ref, [])
        if len(candidates) == 1:
            return Resolution(candidates[0])
        if len(candidates) > 1:
            where = str(context.file.absolute_path)
            return Resolution(None, f"{where}: ambiguous type reference {ref!r} ({', '.join(candidates)}); treated as external")
        return Resolution(None)


def resolve_name(ref: str, context: SourceUnit, corpus: list[SourceUnit]) -> Resolution:
    """Resolve ``ref`` as seen from ``context``.

    Order: exact qualified name, same package, explicit import, unique
    corpus-wide simple name; anything else (including ambiguous names) is
    external.
    """
    index = NameIndex(t.qualified_name for u in corpus for t in u.types)
    return index.resolve(ref, context)


@dataclass
class InheritanceGraph:
    nodes: dict[str, TypeDecl] = field(default_factory=dict)
    extends_edges: set[tuple[str, str]] = field(default_factory=set)
    implements_edges: set[tuple[str, str]] = field(default_factory=set)
    external_refs: set[str] = field(default_factory=set)
    warnings: list[str] = field(default_factory=list)

    def __post_init__(self):
        self._reindex()

    def _reindex(self) -> None:
        self._parents: dict[str, list[str]] = defaultdict(list)
        self._children: dict[str, list[str]] = defaultdict(list)
        for child, parent in sorted(self.extends_edges):
            self._parents[child].append(parent)
            self._children[parent].append(child)
        self._dit: dict[str, int] = {}

    def _require(self, name: str) -> TypeDecl:
        try:
            return self.nodes[name]
        except KeyError:
            raise UnknownType(name) from None

    def parents(self, name: str) -> list[str]:
        return self._parents.get(name, [])

    def children(self, name: str) -> list[str]:
        return self._children.get(name, [])

    def ancestors(self, name: str) -> list[str]:
        """Proper ancestors via extends edges, nearest first."""
        seen: set[str] = set()
        order: list[str] = []
        frontier = list(self.parents(name))
        while frontier:
            nxt: list[str] = []
            for p in frontier:
                if p not in seen:
                    seen.add(p)
                    order.append(p)
                    nxt.extend(self.parents(p))
            frontier = nxt
        return order

    def of_kind(self, kind: str) -> list[TypeDecl]:
        return [self.nodes[q] for q in sorted(self.nodes) if self.nodes[q].kind == kind]

    def dit(self, name: str) -> int:
        self._require(name)
        if name in self._dit:
            return self._dit[name]
        # iterative post-order so deep chains do not hit the recursion limit
        stack = [(name, False)]
        while stack:
            node, expanded = stack.pop()
            if node in self._dit:
                continue
            parents = self.parents(node)
            if expanded or not parents:
                self._dit[node] = 1 + max((self._dit[p] for p in parents), default=-1)
                continue
            stack.append((node, True))
            stack.extend((p, False) for p in parents if p not in self._dit)
        return self._dit[name]

    def noc(self, name: str) -> int:
        self._require(name)
        return len(self.children(name))


def _strongly_connected(nodes, edges) -> list[list[str]]:
    """Tarjan's algorithm, iterative; returns components in discovery order."""
    succ: dict[str, list[str]] = defaultdict(list)
    for a, b in sorted(edges):
        succ[a].append(b)
    index: dict[str, int] = {}
    low: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    out: list[list[str]] = []
    counter = 0
    for root in sorted(nodes):
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            recurse = False
            children = succ.get(v, [])
            while i < len(children):
                w = children[i]
                i += 1
                if w not in index:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                out.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return out


def build_graph(units: list[SourceUnit]) -> tuple[InheritanceGraph, list[Violation]]:
    """Resolve supertypes and collect every legality violation.

    The result does not depend on the order of ``units``.
    """
    units = sorted(units, key=lambda u: str(u.file.absolute_path))
    violations: list[Violation] = []
    nodes: dict[str, TypeDecl] = {}
    context: dict[str, SourceUnit] = {}
    for unit in units:
        for decl in unit.types:
            q = decl.qualified_name
            if q in nodes:
                first = _location(nodes[q])
                violations.append(Violation(
                    DUPLICATE_TYPE_NAME, q, f"also declared at {first[0]}:{first[1]}; later declaration dropped",
                    _location(decl),
                ))
                continue
            nodes[q] = decl
            context[q] = unit

    index = NameIndex(nodes)
    graph = InheritanceGraph(nodes)
    extends: set[tuple[str, str]] = set()
    warnings: set[str] = set()

    for q in sorted(nodes):
        decl = nodes[q]
        unit = context[q]
        for ref in decl.extends_refs:
            res = index.resolve(ref, unit)
            if res.warning:
                warnings.add(res.warning)
            if res.external:
                graph.external_refs.add(ref)
                continue
            target = nodes[res.target]
            if target.kind == ASPECT:
                if decl.kind == CLASS:
                    violations.append(Violation(CLASS_EXTENDS_ASPECT, q, f"class extends aspect {target.qualified_name}", _location(decl)))
                    continue
                if decl.kind == INTERFACE:
                    violations.append(Violation(INTERFACE_EXTENDS_ASPECT, q, f"interface extends aspect {target.qualified_name}", _location(decl)))
                    continue
                if not is_abstract_aspect(target):
                    violations.append(Violation(EXTENDS_CONCRETE_ASPECT, q, f"extends concrete aspect {target.qualified_name}", _location(decl)))
                    continue
            elif decl.kind == CLASS and target.kind != CLASS:
                warnings.add(f"{_location(decl)[0]}: class {q} extends interface {target.qualified_name}; edge ignored")
                continue
            elif decl.kind == INTERFACE and target.kind != INTERFACE:
                warnings.add(f"{_location(decl)[0]}: interface {q} extends class {target.qualified_name}; edge ignored")
                continue
            extends.add((q, target.qualified_name))
        for ref in decl.implements_refs:
            res = index.resolve(ref, unit)
            if res.warning:
                warnings.add(res.warning)
            if res.external:
                graph.external_refs.add(ref)
            elif nodes[res.target].kind == INTERFACE:
                graph.implements_edges.add((q, res.target))
            else:
                warnings.add(f"{_location(decl)[0]}: {q} implements non-interface {res.target}; edge ignored")

    for comp in _strongly_connected(nodes, extends):
        members = set(comp)
        cyclic = [e for e in extends if e[0] in members and e[1] in members]
        if len(comp) > 1 or cyclic:
            subject = comp[0]
            violations.append(Violation(
                INHERITANCE_CYCLE, subject, "extends cycle through " + " -> ".join(comp), _location(nodes[subject]),
            ))
            extends.difference_update(cyclic)

    graph.extends_edges = extends
    graph.warnings = sorted(warnings)
    graph._reindex()
    violations.sort()
    return graph, violations


def dit(graph: InheritanceGraph, name: str) -> int:
    return graph.dit(name)


def noc(graph: InheritanceGraph, name: str) -> int:
    return graph.noc(name)
