"""
Subset-pair code search - 子集对搜索
=====================================
功能:
1. enumerate_codes: every nonempty (sel1, sel2) pair over a scheme's basis,
   in ascending bitmask order, filtered by commutation; each trailing-drop
   count that changes n - k yields one candidate code
2. candidates are pruned by the Knill-Laflamme bound, screened by weight
   enumeration up to min_d - 1, then certified
3. run_search: collects the stream into a report sorted by (n, -k, d, masks)

Pairs are handed to a thread pool in batches; each batch is merged back in
submission order, so the emitted sequence does not depend on worker count.
"""

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple, Union

from termcolor import cprint

from config import EXACT_CEILING
from distance.bounded import distance_bounded
from distance.bounds import check_bounds, kl_bound_ok
from distance.certificate import DistanceCertificate
from distance.policy import certify
from errors import BoundViolationError, SchemeError
from gf2.bitmatrix import BitMatrix
from gf2.linalg import add, mul, transpose
from schemes.formula import formula_from_indices
from schemes.registry import parse_scheme_spec
from schemes.scheme import AssociationScheme, verify_scheme
from search.records import CodeRecord, SearchConfig, record_from_code
from stabilizer.check_matrix import Origin, check_matrix_from_blocks, mask_to_indices
from stabilizer.code import StabilizerCode, select_generators, trailing_drop_ranks


@dataclass(frozen=True)
class SearchTruncated:
    """Marker emitted when the time budget runs out"""
    reason: str
    pairs_done: int
    pairs_total: int

    def to_json(self) -> dict:
        return {"truncated": True, "reason": self.reason,
                "pairs_done": self.pairs_done, "pairs_total": self.pairs_total}


@dataclass
class SearchReport:
    """Sorted search output"""
    scheme: str
    records: List[CodeRecord] = field(default_factory=list)
    truncated: Optional[SearchTruncated] = None
    pairs_total: int = 0
    pairs_commuting: int = 0

    def to_json(self, include_timing: bool = False) -> dict:
        return {
            "scheme": self.scheme,
            "records": [r.to_json(include_timing) for r in self.records],
            "truncated": self.truncated.to_json() if self.truncated else None,
            "pairs_total": self.pairs_total,
            "pairs_commuting": self.pairs_commuting,
        }


@dataclass
class _PairResult:
    candidates: List[Tuple[StabilizerCode, DistanceCertificate]]
    commuting: bool
    cut_short: bool = False


class _MaskSums:
    """GF(2) sums of adjacency matrices, one per subset mask, built on demand"""

    def __init__(self, s: AssociationScheme):
        self.s = s
        self._sums: Dict[int, BitMatrix] = {0: BitMatrix.zeros(s.nu, s.nu)}
        self._transposed: Dict[int, BitMatrix] = {}

    def __call__(self, mask: int) -> BitMatrix:
        if mask not in self._sums:
            low = mask & -mask
            self._sums[mask] = add(self(mask ^ low), self.s.adjacency[low.bit_length() - 1])
        return self._sums[mask]

    def t(self, mask: int) -> BitMatrix:
        if mask not in self._transposed:
            self._transposed[mask] = transpose(self(mask))
        return self._transposed[mask]


def subset_masks(size: int, max_subset_size: Optional[int] = None) -> List[int]:
    """Nonempty subsets of range(size) as ascending bitmasks."""
    limit = size if max_subset_size is None else max_subset_size
    return [m for m in range(1, 1 << size) if bin(m).count("1") <= limit]


def _commuting(sums: _MaskSums, m1: int, m2: int) -> bool:
    return add(mul(sums(m1), sums.t(m2)), mul(sums(m2), sums.t(m1))).is_zero()


def _examine_pair(s: AssociationScheme, sums: _MaskSums, m1: int, m2: int,
                  cfg: SearchConfig, ceiling: int, deadline: float) -> _PairResult:
    if not _commuting(sums, m1, m2):
        return _PairResult([], False)
    sel1, sel2 = mask_to_indices(m1), mask_to_indices(m2)
    origin = Origin(scheme=s.label, spec=s.spec, sel1=sel1, sel2=sel2,
                    b1_formula=formula_from_indices(sel1), b2_formula=formula_from_indices(sel2))
    c = check_matrix_from_blocks(sums(m1), sums(m2), origin)

    # smallest drop for each distinct n - k; larger drops with the same rank
    # only remove dependent rows and give the same rowspace
    seen_r = set()
    drops = []
    for drop, r in trailing_drop_ranks(c):
        if drop in cfg.drops_for(c.rows) and r > 0 and r not in seen_r:
            seen_r.add(r)
            drops.append(drop)

    out = []
    for drop in drops:
        if time.monotonic() > deadline:
            return _PairResult(out, True, cut_short=True)
        code = select_generators(c, drop)
        if code.k == 0 and not cfg.include_k0:
            continue
        # n >= k + 2d - 2 caps the reachable distance
        if cfg.min_d > 1 and not kl_bound_ok(code.n, code.k, cfg.min_d):
            continue
        if cfg.min_d > 1:
            screen = distance_bounded(code, min(cfg.min_d - 1, code.n), workers=1)
            if screen.is_exact:
                continue
        cert = certify(code, "auto", workers=1, ceiling=ceiling, auto_w_max=max(cfg.w_max, cfg.min_d))
        if cert.value < cfg.min_d:
            continue
        out.append((code, cert))
    return _PairResult(out, True)


def _check_bounds(code: StabilizerCode, cert: DistanceCertificate):
    bounds = check_bounds(code.n, code.k, cert.value)
    if cert.is_exact and not bounds.kl:
        raise BoundViolationError(f"{code.label(cert.value)} violates n >= k + 2d - 2")
    if cert.is_exact and bounds.hamming_required and not bounds.hamming:
        raise BoundViolationError(f"{code.label(cert.value)} violates the quantum Hamming bound")


def enumerate_codes(s: AssociationScheme, cfg: SearchConfig,
                    stats: Optional[SearchReport] = None) -> Iterator[Union[CodeRecord, SearchTruncated]]:
    """Stream certified records for ``s``; a SearchTruncated marker ends a budget-limited run."""
    report = verify_scheme(s)
    if not report.passed:
        names = ", ".join(c.name for c in report.failures())
        raise SchemeError(f"{s.label} is not an association scheme ({names})")

    ceiling = cfg.exact_ceiling if cfg.exact_ceiling is not None else EXACT_CEILING
    sums = _MaskSums(s)
    masks = subset_masks(len(s.adjacency), cfg.max_subset_size)
    pairs = [(m1, m2) for m1 in masks for m2 in masks]
    if stats is not None:
        stats.pairs_total = len(pairs)
    # warm the cache before threads read it
    for m in masks:
        sums.t(m)

    started = time.monotonic()
    deadline = started + cfg.time_budget
    seen = set()
    counter = 0
    batch = max(1, cfg.workers * 8)

    def run(pair):
        return _examine_pair(s, sums, pair[0], pair[1], cfg, ceiling, deadline)

    pool = ThreadPoolExecutor(max_workers=cfg.workers) if cfg.workers > 1 else None
    try:
        for lo in range(0, len(pairs), batch):
            if time.monotonic() > deadline:
                yield SearchTruncated(f"time budget {cfg.time_budget:g}s exhausted", lo, len(pairs))
                return
            chunk = pairs[lo:lo + batch]
            results = list(pool.map(run, chunk)) if pool else [run(p) for p in chunk]
            for offset, result in enumerate(results):
                if stats is not None and result.commuting:
                    stats.pairs_commuting += 1
                for code, cert in result.candidates:
                    _check_bounds(code, cert)
                    key = (code.n, code.k, cert.value, code.rowspace_key())
                    if key in seen:
                        continue
                    seen.add(key)
                    counter += 1
                    yield record_from_code(code, cert, discovered_at=counter)
                if result.cut_short:
                    yield SearchTruncated(f"time budget {cfg.time_budget:g}s exhausted", lo + offset, len(pairs))
                    return
    finally:
        if pool is not None:
            pool.shutdown(wait=True)


def run_search(cfg: SearchConfig, scheme: AssociationScheme = None, verbose: bool = False) -> SearchReport:
    s = scheme or parse_scheme_spec(cfg.spec)
    report = SearchReport(scheme=s.label)
    for item in enumerate_codes(s, cfg, stats=report):
        if isinstance(item, SearchTruncated):
            report.truncated = item
            if verbose:
                cprint(f"⚠️ search truncated: {item.reason} ({item.pairs_done}/{item.pairs_total} pairs)", "yellow")
            continue
        report.records.append(item)
        if verbose:
            cprint(f"  🔍 {item.label}  sel1={list(item.sel1)} sel2={list(item.sel2)} drop={item.drop_last}", "white")
    report.records.sort(key=CodeRecord.sort_key)
    return report
