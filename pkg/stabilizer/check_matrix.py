"""
Check matrices - 校验矩阵
=====================================
A check matrix is r x 2n over GF(2), (B1 | B2): column j < n flags an X on
qubit j, column n + j flags a Z, both set means Y.

Rows g = (x|z), g' = (x'|z') commute iff x·z' + z·x' = 0 (mod 2); the whole
matrix commutes iff B1 B2^T + B2 B1^T = 0.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from errors import CheckMatrixError, ShapeError
from gf2.bitmatrix import BitMatrix, popcount
from gf2.linalg import add, hstack, mul, transpose, xor_sum
from schemes.formula import evaluate_formula, formula_from_indices
from schemes.scheme import AssociationScheme


@dataclass(frozen=True)
class Origin:
    """Where a check matrix came from"""
    scheme: str = ""                       # label, e.g. "C_12"
    spec: str = ""                         # parseable scheme spec
    sel1: Optional[Tuple[int, ...]] = None
    sel2: Optional[Tuple[int, ...]] = None
    b1_formula: str = ""
    b2_formula: str = ""

    def to_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "spec": self.spec,
            "sel1": list(self.sel1) if self.sel1 is not None else None,
            "sel2": list(self.sel2) if self.sel2 is not None else None,
            "b1": self.b1_formula,
            "b2": self.b2_formula,
        }


@dataclass(frozen=True)
class CheckMatrix:
    """r x 2n matrix (B1 | B2) over GF(2)"""
    n: int
    m: BitMatrix
    origin: Origin = field(default_factory=Origin)

    def __post_init__(self):
        if self.m.cols != 2 * self.n:
            raise ShapeError(f"check matrix width {self.m.cols} is not 2n = {2 * self.n}")

    @property
    def rows(self) -> int:
        return self.m.rows

    def x_part(self) -> BitMatrix:
        return self.m.column_slice(0, self.n)

    def z_part(self) -> BitMatrix:
        return self.m.column_slice(self.n, 2 * self.n)

    def take_rows(self, indices: Sequence[int]) -> "CheckMatrix":
        return CheckMatrix(self.n, self.m.take_rows(indices), self.origin)


def mask_to_indices(mask: int) -> Tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if (mask >> i) & 1)


def indices_to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def check_matrix_from_blocks(b1: BitMatrix, b2: BitMatrix, origin: Origin = None) -> CheckMatrix:
    if b1.shape != b2.shape or b1.rows != b1.cols:
        raise ShapeError(f"B1 {b1.shape} and B2 {b2.shape} must be equal square matrices")
    return CheckMatrix(b1.cols, hstack(b1, b2), origin or Origin())


def build_check_matrix(s: AssociationScheme, sel1: Iterable[int], sel2: Iterable[int]) -> CheckMatrix:
    """B1 = XOR of the selected A_i for sel1, B2 likewise; one row per vertex."""
    sel1 = tuple(sorted(set(sel1)))
    sel2 = tuple(sorted(set(sel2)))
    if not sel1 and not sel2:
        raise CheckMatrixError("both subsets are empty")
    size = len(s.adjacency)
    for i in sel1 + sel2:
        if not 0 <= i < size:
            raise CheckMatrixError(f"A_{i} out of range for {s.label} (indices 0..{size - 1})")
    b1 = xor_sum([s.adjacency[i] for i in sel1], s.nu, s.nu)
    b2 = xor_sum([s.adjacency[i] for i in sel2], s.nu, s.nu)
    origin = Origin(
        scheme=s.label, spec=s.spec, sel1=sel1, sel2=sel2,
        b1_formula=formula_from_indices(sel1), b2_formula=formula_from_indices(sel2),
    )
    return check_matrix_from_blocks(b1, b2, origin)


def build_check_matrix_from_formulas(s: AssociationScheme, b1: str, b2: str) -> CheckMatrix:
    origin = Origin(scheme=s.label, spec=s.spec, b1_formula=b1, b2_formula=b2)
    return check_matrix_from_blocks(evaluate_formula(s, b1), evaluate_formula(s, b2), origin)


def commutes(c: CheckMatrix) -> bool:
    b1, b2 = c.x_part(), c.z_part()
    return add(mul(b1, transpose(b2)), mul(b2, transpose(b1))).is_zero()


def symplectic_product(c: CheckMatrix, i: int, j: int) -> int:
    """popcount(x_i & z_j) + popcount(z_i & x_j) mod 2"""
    x, z = _halves(c)
    total = popcount(x[i] & z[j]).sum() + popcount(z[i] & x[j]).sum()
    return int(total % 2)


def non_commuting_pairs(c: CheckMatrix) -> List[Tuple[int, int]]:
    x, z = _halves(c)
    pairs = []
    for i in range(c.rows):
        prod = popcount(x[i] & z).sum(axis=1) + popcount(z[i] & x).sum(axis=1)
        for j in np.flatnonzero(prod % 2):
            if j > i:
                pairs.append((i, int(j)))
    return pairs


def _halves(c: CheckMatrix):
    return c.x_part().data, c.z_part().data
