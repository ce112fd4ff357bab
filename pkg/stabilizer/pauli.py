"""
Pauli strings and check-matrix serialization.

Text format: one generator per line over IXYZ (phases dropped); blank lines
and '#' comments are ignored, spaces inside a line are allowed.
JSON format: {"n": n, "rows": [hex, ...]} with the hex-row encoding of
gf2.bitmatrix.
"""

from typing import List, Sequence, Union

import numpy as np

from errors import PauliFormatError
from gf2.bitmatrix import BitMatrix
from stabilizer.check_matrix import CheckMatrix
from stabilizer.code import StabilizerCode

PAULI_SYMBOLS = "IXYZ"
# index = x + 2 z
_BY_BITS = np.array(list("IXZY"))
_TO_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}


def row_to_pauli(x_bits: Sequence[int], z_bits: Sequence[int]) -> str:
    idx = np.asarray(x_bits, dtype=np.int64) + 2 * np.asarray(z_bits, dtype=np.int64)
    return "".join(_BY_BITS[idx])


def to_pauli(obj: Union[StabilizerCode, CheckMatrix]) -> List[str]:
    c = obj.gens if isinstance(obj, StabilizerCode) else obj
    dense = c.m.to_dense().astype(np.int64)
    idx = dense[:, :c.n] + 2 * dense[:, c.n:]
    return ["".join(_BY_BITS[row]) for row in idx]


def from_pauli(strings: Sequence[str]) -> CheckMatrix:
    cleaned = [s.replace(" ", "").strip().upper() for s in strings]
    if not cleaned:
        raise PauliFormatError("no Pauli strings given")
    n = len(cleaned[0])
    dense = np.zeros((len(cleaned), 2 * n), dtype=np.uint8)
    for i, s in enumerate(cleaned):
        if len(s) != n:
            raise PauliFormatError(f"line {i + 1}: length {len(s)}, expected {n}")
        for j, ch in enumerate(s):
            if ch not in _TO_BITS:
                raise PauliFormatError(f"line {i + 1}: symbol {ch!r} is not one of {PAULI_SYMBOLS}")
            dense[i, j], dense[i, n + j] = _TO_BITS[ch]
    return CheckMatrix(n, BitMatrix.from_dense(dense))


def parse_pauli_text(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def format_pauli_block(strings: Sequence[str]) -> str:
    return "\n".join(strings)


def check_matrix_to_json(c: CheckMatrix) -> dict:
    return {"n": c.n, "rows": c.m.to_hex_rows()}


def check_matrix_from_json(payload: dict) -> CheckMatrix:
    try:
        n = int(payload["n"])
        rows = list(payload["rows"])
    except (KeyError, TypeError, ValueError) as exc:
        raise PauliFormatError(f"check-matrix JSON needs 'n' and 'rows': {exc}") from exc
    try:
        return CheckMatrix(n, BitMatrix.from_hex_rows(2 * n, rows))
    except ValueError as exc:
        raise PauliFormatError(str(exc)) from exc
