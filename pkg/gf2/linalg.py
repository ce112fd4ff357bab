"""
GF(2) linear algebra on BitMatrix - 二元域线性代数
=====================================
功能:
1. add / mul / transpose / kron / hstack / matrix_power over GF(2)
2. mul_int: integer-valued product of 0/1 matrices (intersection numbers)
3. rank, independent_rows, kernel_basis, in_rowspace
4. echelon_form: reduced row echelon form, cached per matrix
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

import numpy as np

from errors import ShapeError
from gf2.bitmatrix import WORD, WORD_BITS, BitMatrix, BitVector, unpack_bits


@dataclass(frozen=True)
class EchelonForm:
    """Reduced row echelon form: nonzero rows and their pivot columns."""
    rows: np.ndarray          # (rank, words), packed
    pivots: Tuple[int, ...]
    cols: int

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _same_shape(a: BitMatrix, b: BitMatrix, op: str):
    if a.shape != b.shape:
        raise ShapeError(f"{op}: shape mismatch {a.shape} vs {b.shape}")


def add(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    _same_shape(a, b, "add")
    return BitMatrix(a.rows, a.cols, a.data ^ b.data)


def mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """GF(2) product: row i of the result is the XOR of the rows of b selected by row i of a."""
    if a.cols != b.rows:
        raise ShapeError(f"mul: {a.shape} x {b.shape}")
    out = np.zeros((a.rows, b.words), dtype=WORD)
    if a.rows == 0 or b.words == 0:
        return BitMatrix(a.rows, b.cols, out)
    selector = a.to_dense().astype(bool)
    for k in range(a.cols):
        hit = selector[:, k]
        if hit.any():
            out[hit] ^= b.data[k]
    return BitMatrix(a.rows, b.cols, out)


def mul_int(a: BitMatrix, b: BitMatrix) -> np.ndarray:
    """Integer product of two 0/1 matrices, as an int64 array."""
    if a.cols != b.rows:
        raise ShapeError(f"mul_int: {a.shape} x {b.shape}")
    return a.to_dense().astype(np.int64) @ b.to_dense().astype(np.int64)


def transpose(a: BitMatrix) -> BitMatrix:
    return BitMatrix.from_dense(a.to_dense().T)


def kron(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    return BitMatrix.from_dense(np.kron(a.to_dense(), b.to_dense()))


def kron_all(factors: Sequence[BitMatrix]) -> BitMatrix:
    if not factors:
        return BitMatrix.identity(1)
    out = factors[0]
    for f in factors[1:]:
        out = kron(out, f)
    return out


def hstack(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.rows != b.rows:
        raise ShapeError(f"hstack: row counts {a.rows} vs {b.rows}")
    return BitMatrix.from_dense(np.hstack([a.to_dense(), b.to_dense()]))


def vstack(blocks: Sequence[BitMatrix]) -> BitMatrix:
    if not blocks:
        return BitMatrix.zeros(0, 0)
    cols = {m.cols for m in blocks}
    if len(cols) != 1:
        raise ShapeError(f"vstack: column counts {sorted(cols)}")
    return BitMatrix(sum(m.rows for m in blocks), blocks[0].cols, np.vstack([m.data for m in blocks]))


def block_matrix(grid: Sequence[Sequence[BitMatrix]]) -> BitMatrix:
    return BitMatrix.from_dense(np.block([[m.to_dense() for m in row] for row in grid]))


def matrix_power(a: BitMatrix, exponent: int) -> BitMatrix:
    if a.rows != a.cols:
        raise ShapeError(f"matrix_power needs a square matrix, got {a.shape}")
    if exponent < 0:
        raise ValueError("negative exponent")
    result = BitMatrix.identity(a.rows)
    base = a
    while exponent:
        if exponent & 1:
            result = mul(result, base)
        base = mul(base, base)
        exponent >>= 1
    return result


def xor_sum(matrices: Sequence[BitMatrix], rows: int, cols: int) -> BitMatrix:
    out = np.zeros((rows, (cols + WORD_BITS - 1) // WORD_BITS), dtype=WORD)
    for m in matrices:
        if m.shape != (rows, cols):
            raise ShapeError(f"xor_sum: {m.shape} vs {(rows, cols)}")
        out ^= m.data
    return BitMatrix(rows, cols, out)


# ============================================================================
# Elimination
# ============================================================================

def _reduce(a: BitMatrix) -> EchelonForm:
    m = np.array(a.data, dtype=WORD, copy=True)
    pivots = []
    r = 0
    for c in range(a.cols):
        if r == a.rows:
            break
        w, bit = divmod(c, WORD_BITS)
        mask = np.uint64(1 << bit)
        below = np.flatnonzero(m[r:, w] & mask)
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        hit = (m[:, w] & mask) != 0
        hit[r] = False
        if hit.any():
            m[hit] ^= m[r]
        pivots.append(c)
        r += 1
    return EchelonForm(rows=m[:r].copy(), pivots=tuple(pivots), cols=a.cols)


def echelon_form(a: BitMatrix) -> EchelonForm:
    """Reduced row echelon form of ``a``, computed once and cached on the matrix."""
    cached = a._echelon
    if cached is None:
        cached = _reduce(a)
        a._echelon = cached
    return cached


def rank(a: BitMatrix) -> int:
    return echelon_form(a).rank


def independent_rows(a: BitMatrix) -> List[int]:
    """Greedy top-down: keep a row iff it is independent of the rows kept above it."""
    basis = {}
    keep = []
    for i, v in enumerate(a.row_ints()):
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                keep.append(i)
                break
    return keep


def kernel_basis(a: BitMatrix) -> List[BitVector]:
    """Basis of {v : a v = 0}, one vector per free column in ascending order."""
    ech = echelon_form(a)
    dense = unpack_bits(ech.rows, a.cols) if ech.rank else np.zeros((0, a.cols), dtype=np.uint8)
    pivot_set = set(ech.pivots)
    basis = []
    for f in range(a.cols):
        if f in pivot_set:
            continue
        v = np.zeros(a.cols, dtype=np.uint8)
        v[f] = 1
        for idx, p in enumerate(ech.pivots):
            v[p] = dense[idx, f]
        basis.append(BitVector.from_bits(v))
    return basis


def in_rowspace(a: BitMatrix, v: BitVector) -> bool:
    if v.length != a.cols:
        raise ShapeError(f"in_rowspace: vector length {v.length} vs {a.cols} columns")
    ech = echelon_form(a)
    work = np.array(v.data, dtype=WORD, copy=True)
    for row, p in zip(ech.rows, ech.pivots):
        if (int(work[p // WORD_BITS]) >> (p % WORD_BITS)) & 1:
            work ^= row
    return not work.any()


def rowspace_key(a: BitMatrix) -> str:
    """Canonical text key of the row space (hex rows of the reduced echelon form)."""
    ech = echelon_form(a)
    reduced = BitMatrix(ech.rank, a.cols, ech.rows)
    return f"{a.cols}:" + ",".join(reduced.to_hex_rows())
