"""
Bit-packed GF(2) containers - 位压缩矩阵
=====================================
BitMatrix and BitVector store bits row-major in little-endian 64-bit words,
least-significant bit first: column j of a row lives in word j // 64, bit
j % 64. Bits past the last column are always zero so that popcounts over
whole words stay exact.

Hex rows (export / JSON format): the row is read as a bit string with column
0 first, right-padded with zeros to a multiple of 4 and written as hex, e.g.
01001|00110 -> "0100100110" -> "498".
"""

from typing import Iterable, List, Optional, Sequence

import numpy as np

WORD_BITS = 64
WORD = np.dtype("<u8")

_POPCOUNT8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)


def words_for(cols: int) -> int:
    return (cols + WORD_BITS - 1) // WORD_BITS


def tail_mask(cols: int) -> int:
    """Mask of valid bits in the last word of a row (all ones if aligned)."""
    rem = cols % WORD_BITS
    return (1 << rem) - 1 if rem else (1 << WORD_BITS) - 1


def popcount(words: np.ndarray) -> np.ndarray:
    """Elementwise popcount of a uint64 array."""
    words = np.ascontiguousarray(words, dtype=WORD)
    if hasattr(np, "bitwise_count"):
        return np.bitwise_count(words).astype(np.int64)
    per_byte = _POPCOUNT8[words.view(np.uint8)]
    return per_byte.reshape(words.shape + (8,)).sum(axis=-1, dtype=np.int64)


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """(rows, cols) 0/1 array -> (rows, words) packed array."""
    bits = np.asarray(bits)
    if bits.ndim != 2:
        raise ValueError(f"expected a 2-D bit array, got shape {bits.shape}")
    rows, cols = bits.shape
    nwords = words_for(cols)
    if rows == 0 or nwords == 0:
        return np.zeros((rows, nwords), dtype=WORD)
    padded = np.zeros((rows, nwords * WORD_BITS), dtype=np.uint8)
    padded[:, :cols] = np.mod(bits, 2).astype(np.uint8)
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view(WORD).reshape(rows, nwords)


def unpack_bits(data: np.ndarray, cols: int) -> np.ndarray:
    """(rows, words) packed array -> (rows, cols) uint8 array."""
    rows = data.shape[0]
    if rows == 0 or cols == 0:
        return np.zeros((rows, cols), dtype=np.uint8)
    raw = np.ascontiguousarray(data, dtype=WORD).view(np.uint8).reshape(rows, -1)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :cols]


def _bits_to_hex(bits: Sequence[int]) -> str:
    text = "".join("1" if b else "0" for b in bits)
    if not text:
        return ""
    text += "0" * (-len(text) % 4)
    return format(int(text, 2), f"0{len(text) // 4}x")


def _hex_to_bits(value: str, length: int) -> np.ndarray:
    value = value.strip().lower()
    ndigits = (length + 3) // 4
    if len(value) != ndigits:
        raise ValueError(f"hex row {value!r} has {len(value)} digits, expected {ndigits}")
    if ndigits == 0:
        return np.zeros(0, dtype=np.uint8)
    text = format(int(value, 16), f"0{ndigits * 4}b")
    if "1" in text[length:]:
        raise ValueError(f"hex row {value!r} sets bits beyond length {length}")
    return np.array([int(c) for c in text[:length]], dtype=np.uint8)


class BitVector:
    """Bit-packed GF(2) vector."""

    __slots__ = ("length", "data")

    def __init__(self, length: int, data: np.ndarray):
        if length < 0:
            raise ValueError("length must be non-negative")
        words = np.array(data, dtype=WORD).reshape(words_for(length))
        if length % WORD_BITS and words.size:
            words[-1] &= np.uint64(tail_mask(length))
        words.flags.writeable = False
        self.length = length
        self.data = words

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> "BitVector":
        arr = np.asarray(list(bits), dtype=np.int64).reshape(1, -1)
        return cls(arr.shape[1], pack_bits(arr)[0])

    @classmethod
    def from_int(cls, value: int, length: int) -> "BitVector":
        """Bit j of ``value`` becomes position j."""
        if value < 0 or value >> length:
            raise ValueError(f"value does not fit in {length} bits")
        words = [(value >> (WORD_BITS * w)) & ((1 << WORD_BITS) - 1) for w in range(words_for(length))]
        return cls(length, np.array(words, dtype=WORD))

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, np.zeros(words_for(length), dtype=WORD))

    @classmethod
    def from_hex(cls, value: str, length: int) -> "BitVector":
        return cls.from_bits(_hex_to_bits(value, length))

    def to_bits(self) -> np.ndarray:
        return unpack_bits(self.data.reshape(1, -1), self.length)[0]

    def to_int(self) -> int:
        value = 0
        for w, word in enumerate(self.data.tolist()):
            value |= int(word) << (WORD_BITS * w)
        return value

    def to_hex(self) -> str:
        return _bits_to_hex(self.to_bits())

    def weight(self) -> int:
        return int(popcount(self.data).sum())

    def is_zero(self) -> bool:
        return not self.data.any()

    def _check(self, other: "BitVector"):
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")

    def __xor__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.data ^ other.data)

    def __or__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.data | other.data)

    def __and__(self, other: "BitVector") -> "BitVector":
        self._check(other)
        return BitVector(self.length, self.data & other.data)

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return int((int(self.data[j // WORD_BITS]) >> (j % WORD_BITS)) & 1)

    def __len__(self) -> int:
        return self.length

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self.length == other.length and np.array_equal(self.data, other.data)

    def __hash__(self) -> int:
        return hash((self.length, self.data.tobytes()))

    def __repr__(self) -> str:
        return f"BitVector({''.join(map(str, self.to_bits()))})"


class BitMatrix:
    """
    Immutable bit-packed GF(2) matrix.

    Construct through the classmethods; the raw constructor takes an already
    packed (rows, words) array and clears any stray trailing bits. The row
    echelon form used by rank/in_rowspace queries is cached on the instance
    the first time it is requested (see gf2.linalg.echelon_form).
    """

    def __init__(self, rows: int, cols: int, data: np.ndarray):
        if rows < 0 or cols < 0:
            raise ValueError("rows and cols must be non-negative")
        nwords = words_for(cols)
        words = np.array(data, dtype=WORD).reshape(rows, nwords)
        if cols % WORD_BITS and rows and nwords:
            words[:, -1] &= np.uint64(tail_mask(cols))
        words.flags.writeable = False
        self.rows = rows
        self.cols = cols
        self.data = words
        self._echelon = None

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def from_dense(cls, bits) -> "BitMatrix":
        arr = np.asarray(bits)
        if arr.ndim == 1 and arr.size == 0:
            arr = arr.reshape(0, 0)
        if arr.ndim != 2:
            raise ValueError(f"expected a 2-D array, got shape {arr.shape}")
        return cls(arr.shape[0], arr.shape[1], pack_bits(arr))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BitMatrix":
        """Rows written as '0101...' strings; '|' and spaces are ignored."""
        cleaned = [r.replace("|", "").replace(" ", "") for r in rows]
        if not cleaned:
            return cls.zeros(0, 0)
        return cls.from_dense([[int(c) for c in r] for r in cleaned])

    @classmethod
    def from_hex_rows(cls, cols: int, rows: Sequence[str]) -> "BitMatrix":
        dense = np.zeros((len(rows), cols), dtype=np.uint8)
        for i, value in enumerate(rows):
            dense[i] = _hex_to_bits(value, cols)
        return cls.from_dense(dense)

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector], cols: Optional[int] = None) -> "BitMatrix":
        if not vectors:
            return cls.zeros(0, cols or 0)
        width = vectors[0].length
        return cls(len(vectors), width, np.stack([v.data for v in vectors]))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, np.zeros((rows, words_for(cols)), dtype=WORD))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def ones(cls, rows: int, cols: int) -> "BitMatrix":
        return cls.from_dense(np.ones((rows, cols), dtype=np.uint8))

    # ------------------------------------------------------------------
    # views
    # ------------------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def words(self) -> int:
        return self.data.shape[1]

    def to_dense(self) -> np.ndarray:
        return unpack_bits(self.data, self.cols)

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i])

    def row_ints(self) -> List[int]:
        """Rows as Python ints (bit j = column j)."""
        out = []
        for row in self.data.tolist():
            value = 0
            for w, word in enumerate(row):
                value |= int(word) << (WORD_BITS * w)
            out.append(value)
        return out

    def take_rows(self, indices: Sequence[int]) -> "BitMatrix":
        idx = np.asarray(list(indices), dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= self.rows):
            raise IndexError(f"row index out of range for {self.rows} rows")
        return BitMatrix(len(idx), self.cols, self.data[idx] if idx.size else np.zeros((0, self.words), WORD))

    def column_slice(self, start: int, stop: int) -> "BitMatrix":
        return BitMatrix.from_dense(self.to_dense()[:, start:stop])

    def row_weights(self) -> np.ndarray:
        if self.rows == 0:
            return np.zeros(0, dtype=np.int64)
        return popcount(self.data).sum(axis=1)

    def to_hex_rows(self) -> List[str]:
        return [_bits_to_hex(r) for r in self.to_dense()]

    def to_strings(self) -> List[str]:
        return ["".join(map(str, r)) for r in self.to_dense()]

    def is_zero(self) -> bool:
        return not self.data.any()

    # ------------------------------------------------------------------
    # operators (thin wrappers over gf2.linalg)
    # ------------------------------------------------------------------

    def __xor__(self, other: "BitMatrix") -> "BitMatrix":
        from gf2.linalg import add
        return add(self, other)

    __add__ = __xor__

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        from gf2.linalg import mul
        return mul(self, other)

    @property
    def T(self) -> "BitMatrix":
        from gf2.linalg import transpose
        return transpose(self)

    def __getitem__(self, ij) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return int((int(self.data[i, j // WORD_BITS]) >> (j % WORD_BITS)) & 1)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.data, other.data)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __repr__(self) -> str:
        if self.rows * self.cols <= 256:
            body = "; ".join(self.to_strings())
            return f"BitMatrix({self.rows}x{self.cols}: {body})"
        return f"BitMatrix({self.rows}x{self.cols})"
