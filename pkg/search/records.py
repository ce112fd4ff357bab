"""
Code records and search configuration - 码记录
=====================================
功能:
1. CodeRecord: one certified code with enough provenance to rebuild it
2. SearchConfig: knobs for enumerate_codes, validated on construction
3. record_from_code / rebuild_code: code <-> record
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from config import AUTO_BOUNDED_W_MAX, DEFAULT_MIN_D, DEFAULT_TIME_BUDGET, DEFAULT_WORKERS
from distance.bounds import BoundCheck, check_bounds
from distance.certificate import DistanceCertificate
from errors import CatalogError, ConfigError
from gf2.bitmatrix import BitMatrix
from schemes.registry import parse_scheme_spec
from stabilizer.check_matrix import (
    CheckMatrix,
    build_check_matrix,
    build_check_matrix_from_formulas,
    indices_to_mask,
    mask_to_indices,
)
from stabilizer.code import StabilizerCode, select_generators, select_generators_subset


# ============================================================================
# 数据类
# ============================================================================


@dataclass(frozen=True)
class CodeRecord:
    """A certified code plus its provenance"""
    scheme: str                            # label, e.g. "C_12"
    spec: str                              # parseable scheme spec
    n: int
    k: int
    certificate: DistanceCertificate
    generators: Tuple[str, ...]            # hex rows of the 2n-wide generator matrix
    sel1: Optional[Tuple[int, ...]] = None
    sel2: Optional[Tuple[int, ...]] = None
    b1: str = ""
    b2: str = ""
    drop_last: Optional[int] = None
    keep: Tuple[int, ...] = ()
    rowspace: str = ""
    bounds: Optional[BoundCheck] = None
    discovered_at: int = 0

    @property
    def d(self) -> int:
        return self.certificate.value

    @property
    def label(self) -> str:
        d = self.d if self.certificate.is_exact else f">={self.d}"
        return f"[[{self.n},{self.k},{d}]]"

    @property
    def sel1_mask(self) -> Optional[int]:
        return indices_to_mask(self.sel1) if self.sel1 is not None else None

    @property
    def sel2_mask(self) -> Optional[int]:
        return indices_to_mask(self.sel2) if self.sel2 is not None else None

    def sort_key(self):
        return (self.n, -self.k, self.d, self.sel1_mask or 0, self.sel2_mask or 0,
                self.drop_last if self.drop_last is not None else -1)

    def generator_matrix(self) -> BitMatrix:
        return BitMatrix.from_hex_rows(2 * self.n, self.generators)

    def to_json(self, include_timing: bool = False) -> dict:
        bounds = self.bounds or check_bounds(self.n, self.k, self.d)
        return {
            "scheme": self.scheme,
            "spec": self.spec,
            "sel1_mask": self.sel1_mask,
            "sel2_mask": self.sel2_mask,
            "sel1": list(self.sel1) if self.sel1 is not None else None,
            "sel2": list(self.sel2) if self.sel2 is not None else None,
            "b1": self.b1,
            "b2": self.b2,
            "drop_last": self.drop_last,
            "keep": list(self.keep),
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "certificate": self.certificate.to_json(include_timing=include_timing),
            "generators": list(self.generators),
            "rowspace": self.rowspace,
            "bounds": bounds.to_dict(),
            "discovered_at": self.discovered_at,
        }

    @classmethod
    def from_json(cls, payload: dict) -> "CodeRecord":
        n, k = int(payload["n"]), int(payload["k"])
        cert = DistanceCertificate.from_json(payload["certificate"], n)
        if "d" in payload and int(payload["d"]) != cert.value:
            raise CatalogError(f"record d={payload['d']} disagrees with certificate d={cert.value}")
        sel1 = payload.get("sel1")
        sel2 = payload.get("sel2")
        if sel1 is None and payload.get("sel1_mask") is not None:
            sel1 = mask_to_indices(int(payload["sel1_mask"]))
        if sel2 is None and payload.get("sel2_mask") is not None:
            sel2 = mask_to_indices(int(payload["sel2_mask"]))
        return cls(
            scheme=payload["scheme"],
            spec=payload.get("spec", ""),
            n=n,
            k=k,
            certificate=cert,
            generators=tuple(payload.get("generators", ())),
            sel1=tuple(sel1) if sel1 is not None else None,
            sel2=tuple(sel2) if sel2 is not None else None,
            b1=payload.get("b1", ""),
            b2=payload.get("b2", ""),
            drop_last=payload.get("drop_last"),
            keep=tuple(payload.get("keep", ())),
            rowspace=payload.get("rowspace", ""),
            # stored flags are ignored; bounds always come from (n, k, d)
            bounds=check_bounds(n, k, cert.value),
            discovered_at=int(payload.get("discovered_at", 0)),
        )


@dataclass(frozen=True)
class SearchConfig:
    """Subset-pair search settings"""
    spec: str
    max_subset_size: Optional[int] = None     # None: every nonempty subset
    drop_range: Optional[Tuple[int, int]] = None   # inclusive; None: 0..rows-1
    w_max: int = AUTO_BOUNDED_W_MAX
    min_d: int = DEFAULT_MIN_D
    time_budget: float = DEFAULT_TIME_BUDGET
    workers: int = DEFAULT_WORKERS
    include_k0: bool = False
    exact_ceiling: Optional[int] = None       # None: config.EXACT_CEILING

    def __post_init__(self):
        if not self.spec:
            raise ConfigError("search needs a scheme spec")
        if self.max_subset_size is not None and self.max_subset_size < 0:
            raise ConfigError(f"max_subset_size must be >= 0, got {self.max_subset_size}")
        if self.drop_range is not None:
            lo, hi = self.drop_range
            if lo < 0 or hi < lo:
                raise ConfigError(f"bad drop range {lo}..{hi}")
        if self.w_max < 1:
            raise ConfigError(f"w_max must be >= 1, got {self.w_max}")
        if self.min_d < 0:
            raise ConfigError(f"min_d must be >= 0, got {self.min_d}")
        if self.time_budget <= 0:
            raise ConfigError(f"time budget must be > 0, got {self.time_budget}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")

    def drops_for(self, rows: int) -> range:
        if self.drop_range is None:
            return range(0, rows)
        lo, hi = self.drop_range
        return range(lo, min(hi, rows - 1) + 1)


def record_from_code(code: StabilizerCode, cert: DistanceCertificate, discovered_at: int = 0) -> CodeRecord:
    origin = code.provenance.origin
    return CodeRecord(
        scheme=origin.scheme,
        spec=origin.spec,
        n=code.n,
        k=code.k,
        certificate=cert,
        generators=tuple(code.gens.m.to_hex_rows()),
        sel1=origin.sel1,
        sel2=origin.sel2,
        b1=origin.b1_formula,
        b2=origin.b2_formula,
        drop_last=code.provenance.drop_last,
        keep=code.provenance.keep,
        rowspace=code.rowspace_key(),
        bounds=check_bounds(code.n, code.k, cert.value),
        discovered_at=discovered_at,
    )


def rebuild_check_matrix(record: CodeRecord) -> CheckMatrix:
    scheme = parse_scheme_spec(record.spec or record.scheme)
    if record.sel1 is not None and record.sel2 is not None:
        return build_check_matrix(scheme, record.sel1, record.sel2)
    return build_check_matrix_from_formulas(scheme, record.b1, record.b2)


def rebuild_code(record: CodeRecord) -> StabilizerCode:
    """Rebuild from provenance alone: scheme spec, subsets or formulas, surviving rows."""
    c = rebuild_check_matrix(record)
    if record.drop_last is not None:
        return select_generators(c, record.drop_last)
    return select_generators_subset(c, record.keep)
