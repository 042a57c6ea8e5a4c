"""The ``[SIGNATURES]`` section of the run log."""

from __future__ import annotations

from .model import ASPECT, INTERFACE, SourceUnit, TypeDecl
from .redefinition import RedefinitionMarks

SIGNATURE_KINDS = (
    "CLASS", "CLASS_EXT", "ASPECT", "ASPECT_CONCRETE",
    "METHOD", "METHOD_RD", "FIELD", "FIELD_RD",
    "POINTCUT", "POINTCUT_RD", "ADVICE", "ADVICE_RD",
)


def type_header(decl: TypeDecl) -> str:
    keyword = {ASPECT: "aspect", INTERFACE: "interface"}.get(decl.kind, "class")
    text = f"{'abstract ' if decl.is_abstract and decl.kind != INTERFACE else ''}{keyword} {decl.qualified_name}"
    if decl.extends_refs:
        text += " extends " + ",".join(decl.extends_refs)
    if decl.implements_refs:
        text += " implements " + ",".join(decl.implements_refs)
    return text


def signature_lines(units: list[SourceUnit], marks: RedefinitionMarks) -> list[str]:
    """One ``KIND|owner|signature`` line per extracted signature, sorted."""
    rows: set[tuple[str, str, str]] = set()
    for unit in units:
        for decl in unit.types:
            owner = decl.qualified_name
            header = type_header(decl)
            if decl.kind == ASPECT:
                rows.add((owner, "ASPECT", header))
                if owner in marks.concrete_aspects:
                    rows.add((owner, "ASPECT_CONCRETE", header))
            else:
                rows.add((owner, "CLASS", header))
                if owner in marks.extended_classes:
                    rows.add((owner, "CLASS_EXT", header))
            for m in decl.methods:
                rows.add((owner, "METHOD", m.signature_text()))
                if (owner, m.key_text) in marks.redefined_methods:
                    rows.add((owner, "METHOD_RD", m.signature_text()))
            for f in decl.fields:
                rows.add((owner, "FIELD", f.signature_text()))
                if (owner, f.name) in marks.redefined_fields:
                    rows.add((owner, "FIELD_RD", f.signature_text()))
            for p in decl.pointcuts:
                rows.add((owner, "POINTCUT", p.signature_text()))
                if (owner, p.name) in marks.redefined_pointcuts:
                    rows.add((owner, "POINTCUT_RD", p.signature_text()))
            for a in decl.advices:
                rows.add((owner, "ADVICE", a.signature_text()))
                if (owner, a.ordinal) in marks.redefined_advices:
                    rows.add((owner, "ADVICE_RD", a.signature_text()))
    return [f"{kind}|{owner}|{text}" for owner, kind, text in sorted(rows)]


def append_signature_section(log, units: list[SourceUnit], redefinitions: RedefinitionMarks):
    log.write_section("[SIGNATURES]", signature_lines(units, redefinitions))
    return log
