"""Plain-text matrix format: one row per line, symbols ``0 k t z`` separated by spaces.

The (u|v) split of a length-2n row is implicit at the column midpoint.
"""

from __future__ import annotations

from pathlib import Path

from ehull.errors import MatrixFormatError
from ehull.ring import EMatrix, from_symbol


def parse_matrix(text: str) -> EMatrix:
    rows = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append(tuple(from_symbol(tok) for tok in line.split()))
        except MatrixFormatError as exc:
            raise MatrixFormatError(f"line {lineno}: {exc}") from None
    if not rows:
        raise MatrixFormatError("matrix has no rows")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise MatrixFormatError("ragged rows")
    if width % 2:
        raise MatrixFormatError(f"odd column count {width}; code length must be 2n")
    return tuple(rows)


def format_matrix(m: EMatrix) -> str:
    return "\n".join(" ".join(e.symbol for e in row) for row in m)


def read_matrix(path: str | Path) -> EMatrix:
    return parse_matrix(Path(path).read_text())
