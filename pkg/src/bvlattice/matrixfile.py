"""Reading and writing integer matrices.

Two formats are understood.  The text format is a header line ``k n``
followed by k lines of n decimal integers separated by single spaces.
The structured format is a JSON object ``{"rows": k, "cols": n,
"entries": [...]}`` whose entries are decimal strings in row-major order.
"""

from __future__ import annotations

import json
import re
import sys

from bvlattice.errors import DimensionError, ParseError
from bvlattice.linalg import IntMatrix

_INT = re.compile(r"[+-]?[0-9]+\Z")


def _int(tok: str, where: str) -> int:
    if not _INT.match(tok):
        raise ParseError(f"{where}: {tok!r} is not a decimal integer")
    return int(tok)


def parse_text(s: str) -> IntMatrix:
    lines = s.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty input")
    header = lines[0].split(" ")
    if len(header) != 2:
        raise ParseError(f"line 1: expected header 'k n', got {lines[0]!r}")
    k, n = (_int(t, "line 1") for t in header)
    if k < 1 or n < 1:
        raise ParseError(f"line 1: dimensions must be positive, got {k} {n}")
    if len(lines) != k + 1:
        raise ParseError(f"expected {k} matrix rows after the header, got {len(lines) - 1}")
    entries = []
    for i, line in enumerate(lines[1:], start=2):
        toks = line.split(" ")
        if len(toks) != n:
            raise ParseError(f"line {i}: expected {n} entries, got {len(toks)}")
        entries.extend(_int(t, f"line {i}") for t in toks)
    return IntMatrix(k, n, entries)


def parse_json(s: str) -> IntMatrix:
    try:
        obj = json.loads(s)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    if not isinstance(obj, dict) or not {"rows", "cols", "entries"} <= obj.keys():
        raise ParseError("JSON matrix must be an object with rows, cols and entries")
    k, n, raw = obj["rows"], obj["cols"], obj["entries"]
    for name, v in (("rows", k), ("cols", n)):
        if type(v) is not int or v < 1:
            raise ParseError(f"{name} must be a positive integer, got {v!r}")
    if not isinstance(raw, list):
        raise ParseError("entries must be an array")
    entries = []
    for idx, v in enumerate(raw):
        if isinstance(v, str):
            entries.append(_int(v, f"entries[{idx}]"))
        elif type(v) is int:
            entries.append(v)
        else:
            raise ParseError(f"entries[{idx}]: expected a decimal string, got {v!r}")
    try:
        return IntMatrix(k, n, entries)
    except DimensionError as e:
        raise ParseError(str(e)) from None


def parse(s: str) -> IntMatrix:
    """Parse either format, chosen by whether the input starts with ``{``."""
    if s.lstrip().startswith("{"):
        return parse_json(s)
    return parse_text(s)


def to_text(M: IntMatrix) -> str:
    lines = [f"{M.rows} {M.cols}"]
    lines.extend(" ".join(map(str, M.row(i))) for i in range(M.rows))
    return "\n".join(lines) + "\n"


def to_obj(M: IntMatrix) -> dict:
    return {"rows": M.rows, "cols": M.cols, "entries": [str(v) for v in M.entries]}


def to_json(M: IntMatrix) -> str:
    return json.dumps(to_obj(M))


def read_matrix(path: str) -> IntMatrix:
    """Read from a file path, or from stdin when ``path`` is ``-``."""
    if path == "-":
        return parse(sys.stdin.read())
    try:
        with open(path, encoding="utf-8") as fh:
            return parse(fh.read())
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e.strerror}") from None
