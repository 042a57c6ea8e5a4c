"""The three-section run log written while a version is analyzed.

Layout (UTF-8, LF endings)::

    # AOSRM RUN LOG v1
    [FILES]
    /abs/path/A.java
    [SIGNATURES]
    CLASS|A|class A
    [METRICS]
    AdIF=NA
    ...
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import TYPE_CHECKING

from .errors import IoFailure

if TYPE_CHECKING:
    from .scanner import ScanResult

HEADER = "# AOSRM RUN LOG v1"
SECTIONS = ("[FILES]", "[SIGNATURES]", "[METRICS]")


class RunLog:
    """Append-only handle on a run log. Not shareable across threads."""

    def __init__(self, path: Path, stream):
        self.path = path
        self._stream = stream
        self.sections: list[str] = []

    def write_section(self, name: str, lines) -> None:
        try:
            self._stream.write(name + "\n")
            for line in lines:
                self._stream.write(line + "\n")
            self._stream.flush()
        except OSError as exc:
            raise IoFailure(f"cannot write run log {self.path}", exc) from exc
        self.sections.append(name)

    def close(self) -> None:
        if not self._stream.closed:
            self._stream.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def open_run_log(log_path: str | os.PathLike, scan: ScanResult) -> RunLog:
    path = Path(log_path)
    try:
        stream = open(path, "w", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise IoFailure(f"cannot open run log {path}: {exc.strerror or exc}", exc) from exc
    log = RunLog(path, stream)
    try:
        stream.write(HEADER + "\n")
    except OSError as exc:
        stream.close()
        raise IoFailure(f"cannot write run log {path}", exc) from exc
    log.write_section("[FILES]", (str(f.absolute_path) for f in scan.files))
    return log


def read_run_log(log_path: str | os.PathLike) -> dict[str, list[str]]:
    """Split a run log back into its sections (name -> lines)."""
    try:
        text = Path(log_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IoFailure(f"cannot read run log {log_path}", exc) from exc
    lines = text.split("\n")
    if not lines or lines[0] != HEADER:
        raise IoFailure(f"{log_path}: not a run log (bad header)")
    out: dict[str, list[str]] = {}
    current: list[str] | None = None
    for line in lines[1:]:
        if line in SECTIONS:
            current = out.setdefault(line, [])
        elif line and current is not None:
            current.append(line)
    return out
