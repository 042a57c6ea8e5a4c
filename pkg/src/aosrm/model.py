"""Declaration-level code model produced by the parser."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .scanner import SourceFile

CLASS = "class"
INTERFACE = "interface"
ASPECT = "aspect"

CONSTRUCTOR = "<init>"


@dataclass(frozen=True)
class MethodSig:
    name: str
    param_types: tuple[str, ...]
    return_type: str
    is_abstract: bool = False
    is_static: bool = False

    @property
    def key(self) -> tuple[str, tuple[str, ...]]:
        # return type is not part of the override key
        return (self.name, self.param_types)

    @property
    def key_text(self) -> str:
        return f"{self.name}({','.join(self.param_types)})"

    def signature_text(self) -> str:
        return f"{self.key_text}:{self.return_type}"


@dataclass(frozen=True)
class FieldSig:
    name: str
    declared_type: str
    is_static: bool = False

    def signature_text(self) -> str:
        return f"{self.name}:{self.declared_type}"


@dataclass(frozen=True)
class PointcutDecl:
    name: str
    param_types: tuple[str, ...]
    is_abstract: bool
    expression_text: str = ""

    def signature_text(self) -> str:
        text = f"{self.name}({','.join(self.param_types)})"
        return text + "[abstract]" if self.is_abstract else text


@dataclass(frozen=True)
class AdviceDecl:
    ordinal: int
    kind: str  # before | after | around
    bound_pointcut_name: str | None
    called_method_names: frozenset[str] = frozenset()

    def signature_text(self) -> str:
        return f"#{self.ordinal} {self.kind}({self.bound_pointcut_name or 'inline'})"


@dataclass
class TypeDecl:
    qualified_name: str
    kind: str
    is_abstract: bool = False
    extends_refs: list[str] = field(default_factory=list)
    implements_refs: list[str] = field(default_factory=list)
    methods: list[MethodSig] = field(default_factory=list)
    fields: list[FieldSig] = field(default_factory=list)
    pointcuts: list[PointcutDecl] = field(default_factory=list)
    advices: list[AdviceDecl] = field(default_factory=list)
    source: tuple[Path | None, int] = (None, 0)

    @property
    def simple_name(self) -> str:
        return self.qualified_name.rsplit(".", 1)[-1]

    @property
    def has_abstract_members(self) -> bool:
        return any(p.is_abstract for p in self.pointcuts) or any(m.is_abstract for m in self.methods)

    def structure(self) -> tuple:
        """Everything except the source location; used for equality checks."""
        return (
            self.qualified_name, self.kind, self.is_abstract,
            tuple(self.extends_refs), tuple(self.implements_refs),
            tuple(self.methods), tuple(self.fields),
            tuple(self.pointcuts), tuple(self.advices),
        )


@dataclass
class SourceUnit:
    file: SourceFile
    package_name: str = ""
    imports: list[str] = field(default_factory=list)
    types: list[TypeDecl] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def structure(self) -> tuple:
        return (self.package_name, tuple(self.imports), tuple(t.structure() for t in self.types))
