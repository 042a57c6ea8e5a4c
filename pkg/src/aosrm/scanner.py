"""Locate Java and AspectJ source files under a version directory."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from .errors import RootNotFound

EXTENSIONS = {".java": "java", ".aj": "aspectj"}

LANG_FILTERS = {
    "auto": {"java", "aspectj"},
    "java-only": {"java"},
    "aspectj-only": {"aspectj"},
}
# short CLI spellings
LANG_FILTERS["java"] = LANG_FILTERS["java-only"]
LANG_FILTERS["aspectj"] = LANG_FILTERS["aspectj-only"]


@dataclass(frozen=True)
class SourceFile:
    absolute_path: Path
    language_hint: str
    byte_length: int


@dataclass
class ScanResult:
    root: Path
    files: list[SourceFile] = field(default_factory=list)
    skipped: list[tuple[Path, str]] = field(default_factory=list)


def language_of(name: str) -> str | None:
    return EXTENSIONS.get(os.path.splitext(name)[1].lower())


def _sort_key(path: Path) -> bytes:
    return os.fsencode(str(path))


def scan_tree(root: str | os.PathLike, lang_filter: str = "auto") -> ScanResult:
    """Recursively collect matching source files below ``root``.

    Hidden directories are pruned and symlinked directories are never
    entered. Matching entries that cannot be stat'ed or read end up in
    ``skipped`` together with the reason.
    """
    if lang_filter not in LANG_FILTERS:
        raise ValueError(f"unknown language filter {lang_filter!r}")
    wanted = LANG_FILTERS[lang_filter]
    root_path = Path(os.path.abspath(root))
    if not root_path.is_dir():
        raise RootNotFound(f"{root}: not an existing directory")

    files: list[SourceFile] = []
    skipped: list[tuple[Path, str]] = []
    seen: set[Path] = set()

    def on_error(err: OSError) -> None:
        if err.filename and os.path.abspath(err.filename) != str(root_path):
            skipped.append((Path(os.path.abspath(err.filename)), f"unreadable directory: {err.strerror}"))

    for dirpath, dirnames, filenames in os.walk(root_path, onerror=on_error, followlinks=False):
        dirnames[:] = [d for d in dirnames if not d.startswith(".")]
        for name in filenames:
            lang = language_of(name)
            if lang is None or lang not in wanted:
                continue
            path = Path(dirpath) / name
            if path in seen:
                continue
            seen.add(path)
            try:
                st = path.stat()
            except OSError as exc:
                skipped.append((path, f"stat failed: {exc.strerror or exc}"))
                continue
            if not path.is_file():
                skipped.append((path, "not a regular file"))
                continue
            if not os.access(path, os.R_OK):
                skipped.append((path, "permission denied"))
                continue
            files.append(SourceFile(path, lang, st.st_size))

    files.sort(key=lambda f: _sort_key(f.absolute_path))
    skipped.sort(key=lambda s: _sort_key(s[0]))
    return ScanResult(root_path, files, skipped)
