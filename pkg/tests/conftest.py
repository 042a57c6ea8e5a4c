from __future__ import annotations

from pathlib import Path

import pytest

from aosrm.parser import parse_source
from aosrm.scanner import SourceFile

FIXTURES = Path(__file__).parent / "fixtures"
AJ_FIXTURES = [FIXTURES / f"uas-mini-aj-1.{i}" for i in range(5)]
J_FIXTURES = [FIXTURES / f"uas-mini-j-1.{i}" for i in range(5)]
LEGALITY = FIXTURES / "legality"


def source_file(name: str) -> SourceFile:
    path = Path("/virtual") / name
    hint = "aspectj" if name.lower().endswith(".aj") else "java"
    return SourceFile(path, hint, 0)


def parse(text: str, name: str = "Unit.java"):
    return parse_source(text, source_file(name))


def units(files: dict[str, str]):
    """Parse an in-memory corpus given as {relative path: text}."""
    return [parse(text, name) for name, text in sorted(files.items())]


def write_tree(root: Path, files: dict[str, str]) -> Path:
    for name, text in files.items():
        path = root / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    return root


@pytest.fixture
def tree(tmp_path):
    def make(files: dict[str, str]) -> Path:
        return write_tree(tmp_path / "corpus", files)
    return make
