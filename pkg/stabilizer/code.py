"""
Stabilizer codes - 稳定子码
=====================================
功能:
1. select_generators: drop trailing rows, then dependent rows (top-down)
2. select_generators_subset: explicit row choice
3. StabilizerCode: n, k, independent commuting generators, provenance
"""

from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Iterable, Optional, Tuple

from errors import CheckMatrixError, DependentRowsError, NonCommutingError
from gf2.linalg import independent_rows, rowspace_key
from stabilizer.check_matrix import CheckMatrix, Origin, commutes, non_commuting_pairs


@dataclass(frozen=True)
class Provenance:
    """Scheme, subset selection and surviving rows of a code"""
    origin: Origin = field(default_factory=Origin)
    drop_last: Optional[int] = None
    keep: Tuple[int, ...] = ()            # rows of the full check matrix that survive

    def to_dict(self) -> dict:
        out = self.origin.to_dict()
        out["drop_last"] = self.drop_last
        out["keep"] = list(self.keep)
        return out


@dataclass(frozen=True)
class StabilizerCode:
    """[[n, k]] stabilizer code with n - k independent commuting generators"""
    n: int
    k: int
    gens: CheckMatrix
    provenance: Provenance = field(default_factory=Provenance)

    @property
    def r(self) -> int:
        return self.n - self.k

    def label(self, d=None) -> str:
        return f"[[{self.n},{self.k},{d}]]" if d is not None else f"[[{self.n},{self.k}]]"

    def rowspace_key(self) -> str:
        return rowspace_key(self.gens.m)

    @property
    def rate(self) -> float:
        return self.k / self.n if self.n else 0.0


def _require_commuting(c: CheckMatrix):
    if not commutes(c):
        pairs = non_commuting_pairs(c)
        raise NonCommutingError(f"check matrix rows do not commute, e.g. rows {pairs[0] if pairs else '?'}")


def _from_rows(c: CheckMatrix, rows: Tuple[int, ...], drop_last: Optional[int]) -> StabilizerCode:
    sub = c.m.take_rows(rows)
    indep = independent_rows(sub)
    if not indep:
        raise DependentRowsError("no independent rows remain")
    keep = tuple(rows[i] for i in indep)
    gens = c.take_rows(keep)
    r = len(keep)
    return StabilizerCode(n=c.n, k=c.n - r, gens=gens,
                          provenance=Provenance(origin=c.origin, drop_last=drop_last, keep=keep))


def select_generators(c: CheckMatrix, drop_last: int) -> StabilizerCode:
    """Remove the last ``drop_last`` rows, then every row dependent on the rows above it."""
    _require_commuting(c)
    if not 0 <= drop_last < c.rows:
        raise CheckMatrixError(f"drop_last must be in 0..{c.rows - 1}, got {drop_last}")
    return _from_rows(c, tuple(range(c.rows - drop_last)), drop_last)


def select_generators_subset(c: CheckMatrix, keep: Iterable[int]) -> StabilizerCode:
    _require_commuting(c)
    rows = tuple(sorted(set(keep)))
    if not rows:
        raise CheckMatrixError("keep-set is empty")
    if rows[0] < 0 or rows[-1] >= c.rows:
        raise CheckMatrixError(f"keep-set index out of range 0..{c.rows - 1}")
    return _from_rows(c, rows, None)


def code_from_generators(c: CheckMatrix) -> StabilizerCode:
    """Code spanned by every row of ``c`` (dependent rows dropped)."""
    return select_generators(c, 0)


def trailing_drop_ranks(c: CheckMatrix):
    """(drop_last, n - k) for every trailing-removal count, without building codes."""
    indep = independent_rows(c.m)
    return [(drop, bisect_left(indep, c.rows - drop)) for drop in range(c.rows)]
