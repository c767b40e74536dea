"""Bit-exact text format for quaternary and real matrices.

Header ``QHM n`` or ``RHM n`` followed by n lines of n cells, one
character each: '1' -> 1, '-' -> -1, 'i' -> i, 'j' -> -i, '0' -> 0.
('j' denoting -i follows the printed convention of the source tables.)
Real bodies are restricted to {'1', '-', '0'}.
"""

from __future__ import annotations

import numpy as np

from .qmatrix import QMatrix, SignMatrix

CHAR_TO_VALUE = {"1": 1 + 0j, "-": -1 + 0j, "i": 1j, "j": -1j, "0": 0j}
VALUE_TO_CHAR = {v: k for k, v in CHAR_TO_VALUE.items()}


class ParseError(ValueError):
    """Malformed matrix file; carries the 1-based line and column."""

    def __init__(self, message: str, line: int, col: int | None = None):
        at = f"line {line}" if col is None else f"line {line} col {col}"
        super().__init__(f"{message} ({at})")
        self.line = line
        self.col = col


def serialize(m: QMatrix | SignMatrix) -> str:
    if isinstance(m, SignMatrix):
        kind = "RHM"
        data = m.data.astype(np.complex128)
    else:
        kind = "QHM"
        data = m.data
    lines = [f"{kind} {m.n}"]
    for row in data:
        lines.append("".join(VALUE_TO_CHAR[complex(x)] for x in row))
    return "\n".join(lines) + "\n"


def parse(text: str) -> QMatrix | SignMatrix:
    lines = text.replace("\r\n", "\n").split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ParseError("empty input", 1)
    header = lines[0].split()
    if len(header) != 2 or header[0] not in ("QHM", "RHM"):
        raise ParseError("header must be 'QHM n' or 'RHM n'", 1)
    try:
        n = int(header[1])
    except ValueError:
        raise ParseError(f"bad order {header[1]!r}", 1) from None
    if n < 1:
        raise ParseError(f"bad order {n}", 1)
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} body rows, got {len(lines) - 1}", len(lines))
    real = header[0] == "RHM"
    data = np.zeros((n, n), dtype=np.complex128)
    for r, line in enumerate(lines[1:], start=2):
        if len(line) != n:
            raise ParseError(f"expected {n} cells, got {len(line)}", r)
        for c, ch in enumerate(line):
            if ch not in CHAR_TO_VALUE or (real and ch in ("i", "j")):
                raise ParseError(f"bad cell {ch!r}", r, c + 1)
            data[r - 2, c] = CHAR_TO_VALUE[ch]
    if real:
        return SignMatrix(data.real.astype(np.int64))
    return QMatrix(data)


def serialize_phase_vector(v) -> str:
    return "".join(VALUE_TO_CHAR[complex(x)] + "\n" for x in np.asarray(v))


def parse_phase_vector(text: str) -> np.ndarray:
    chars = text.replace("\r\n", "\n").split()
    values = []
    for r, ch in enumerate(chars, start=1):
        if ch not in CHAR_TO_VALUE or ch == "0":
            raise ParseError(f"bad phase {ch!r}", r)
        values.append(CHAR_TO_VALUE[ch])
    return np.asarray(values, dtype=np.complex128)
