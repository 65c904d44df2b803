"""Plain-text cache of a table prefix.

File layout (ASCII, LF line endings)::

    OVERP1
    <count>
    0<TAB>1
    1<TAB>2
    ...

Records are gap-free from index 0 and hold decimal values.
"""
from __future__ import annotations

import os
import tempfile
from pathlib import Path

from .errors import FormatError
from .table import OverpartitionTable

MAGIC = "OVERP1"


def dumps(table: OverpartitionTable) -> str:
    lines = [MAGIC, str(len(table))]
    lines.extend(f"{i}\t{v}" for i, v in enumerate(table.values))
    return "\n".join(lines) + "\n"


def loads(text: str, source: str = "<string>") -> OverpartitionTable:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != MAGIC:
        raise FormatError(f"{source}: bad magic, expected {MAGIC!r}")
    if len(lines) < 2 or not lines[1].isdigit():
        raise FormatError(f"{source}: missing or malformed record count")
    count = int(lines[1])
    records = lines[2:]
    if len(records) != count:
        raise FormatError(f"{source}: header says {count} records, found {len(records)}")
    if count == 0:
        raise FormatError(f"{source}: empty table, record 0 is required")
    values = []
    for expected, line in enumerate(records):
        fields = line.split("\t")
        if len(fields) != 2 or not (fields[0].isascii() and fields[0].isdigit()):
            raise FormatError(f"{source}: malformed record {line!r}")
        index, raw = fields
        if int(index) != expected:
            raise FormatError(f"{source}: index gap, expected {expected}, found {index}")
        if not (raw.isascii() and raw.isdigit()):
            raise FormatError(f"{source}: value at index {index} is not a nonnegative integer")
        value = int(raw)
        if expected == 0 and value != 1:
            raise FormatError(f"{source}: record 0 must hold 1, found {value}")
        if expected > 0 and value % 2:
            raise FormatError(f"{source}: odd value at index {index}")
        values.append(value)
    return OverpartitionTable(values)


def save(table: OverpartitionTable, path: str | os.PathLike) -> None:
    """Write ``table`` to ``path`` atomically, creating parent directories."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(prefix=path.name + ".", suffix=".tmp", dir=path.parent)
    except OSError as exc:
        raise OSError(f"cannot write cache {path}: {exc}") from exc
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            fh.write(dumps(table))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load(path: str | os.PathLike) -> OverpartitionTable:
    path = Path(path)
    try:
        text = path.read_text(encoding="ascii")
    except UnicodeDecodeError as exc:
        raise FormatError(f"{path}: not ASCII") from exc
    return loads(text, source=str(path))
