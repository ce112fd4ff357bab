"""
Table reproduction - 码表复现
=====================================
功能:
1. reproduce_table: rebuild every row of a code table from its B1/B2
   formulas, find the trailing-drop counts that give the printed n - k,
   certify d and assign a status
2. check_generator_listing: compare emitted generators against a printed
   generator list
3. ReproductionReport: DataFrame / markdown / JSON views

Status per row:
    reproduced                        printed n - k from a trailing drop, d certified
    parameters-met-by-alternate-rows  n - k only reached by another row choice
    bound-only                        no error lighter than d exists; weight-d
                                      witness not found
    discrepant                        commutation, rank or distance disagrees

Distance policy per row:
    n + k <= ceiling              exact coset enumeration
    d <= 5 or n <= 24             weight enumeration up to d
    otherwise                     weight enumeration up to d - 1, then random
                                  kernel sampling for a weight-d witness
"""

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import pandas as pd
from termcolor import cprint

from config import (
    DEFAULT_WORKERS,
    EXACT_CEILING,
    UPPER_CHECK_MAX_D,
    UPPER_CHECK_MAX_N,
    WITNESS_SAMPLES,
    WITNESS_SEED,
)
from distance.bounded import distance_bounded, sample_light_logical
from distance.bounds import check_bounds
from distance.certificate import METHOD_WEIGHT, CertificateKind, DistanceCertificate
from distance.exact import distance_exact
from distance.syndrome import verify_witness
from errors import AssocCodesError
from gf2.linalg import rank
from schemes.registry import label_to_spec, parse_scheme_spec
from search.records import CodeRecord, record_from_code
from search.tables import GENERATOR_LISTINGS, TableRow, resolve_table_id, table_rows
from stabilizer.check_matrix import CheckMatrix, build_check_matrix_from_formulas, commutes, non_commuting_pairs
from stabilizer.code import StabilizerCode, select_generators, select_generators_subset, trailing_drop_ranks
from stabilizer.pauli import to_pauli

REPRODUCED = "reproduced"
ALTERNATE_ROWS = "parameters-met-by-alternate-rows"
BOUND_ONLY = "bound-only"
DISCREPANT = "discrepant"

METHOD_SAMPLED = "weight-enumeration+sampled-witness"

# ============================================================================
# 数据类
# ============================================================================


@dataclass
class RowResult:
    """Outcome for one table row"""
    row: TableRow
    status: str
    drop_last: Optional[int] = None
    drop_hits: List[int] = field(default_factory=list)
    keep: Tuple[int, ...] = ()
    rows_note: str = ""
    certificate: Optional[DistanceCertificate] = None
    generators_match: Optional[bool] = None
    evidence: List[str] = field(default_factory=list)
    code: Optional[StabilizerCode] = None

    @property
    def found(self) -> str:
        if self.certificate is None:
            return "-"
        d = self.certificate.value if self.certificate.is_exact else f">={self.certificate.value}"
        return f"[[{self.row.n},{self.row.k},{d}]]"

    def to_record(self, discovered_at: int = 0) -> Optional[CodeRecord]:
        if self.code is None or self.certificate is None:
            return None
        return record_from_code(self.code, self.certificate, discovered_at)

    def to_json(self, include_timing: bool = False) -> dict:
        return {
            **self.row.to_dict(),
            "status": self.status,
            "drop_last": self.drop_last,
            "drop_hits": self.drop_hits,
            "keep": list(self.keep),
            "rows_note": self.rows_note,
            "certificate": self.certificate.to_json(include_timing) if self.certificate else None,
            "generators_match": self.generators_match,
            "evidence": self.evidence,
        }


@dataclass
class ReproductionReport:
    """All row results for one table"""
    table: int
    rows: List[RowResult] = field(default_factory=list)

    def counts(self) -> dict:
        out = {REPRODUCED: 0, ALTERNATE_ROWS: 0, BOUND_ONLY: 0, DISCREPANT: 0}
        for r in self.rows:
            out[r.status] += 1
        return out

    def to_dataframe(self) -> pd.DataFrame:
        return pd.DataFrame([
            {
                "group": r.row.group,
                "B_i (i=1,2)": f"B1={r.row.b1}, B2={r.row.b2}",
                "n": r.row.n,
                "n-k": r.row.n_minus_k,
                "[[n,k,d]]": r.row.label + ("".join(f" ({m})" for m in r.row.markers)),
                "drops": ",".join(str(d) for d in r.drop_hits) or "-",
                "found": r.found,
                "status": r.status,
            }
            for r in self.rows
        ])

    def to_markdown(self) -> str:
        if not self.rows:
            return "(no rows)"
        return self.to_dataframe().to_markdown(index=False)

    def to_json(self, include_timing: bool = False) -> dict:
        return {
            "table": self.table,
            "rows": [r.to_json(include_timing) for r in self.rows],
            "counts": self.counts(),
        }


@dataclass
class ListingCheck:
    """Emitted vs printed generator list"""
    name: str
    emitted: List[str]
    printed: List[str]
    missing: Tuple[int, ...]
    matches: bool
    mismatched_rows: List[int] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "emitted": self.emitted,
            "printed": self.printed,
            "missing": list(self.missing),
            "matches": self.matches,
            "mismatched_rows": self.mismatched_rows,
        }


# ============================================================================
# Helpers
# ============================================================================

def _alternate_row_sets(c: CheckMatrix, target: int) -> List[Tuple[str, Tuple[int, ...]]]:
    """Leading-row removals, then cyclic windows of ``target`` consecutive rows."""
    out = []
    for drop in range(1, c.rows):
        out.append((f"first {drop} rows removed", tuple(range(drop, c.rows))))
    for start in range(1, c.rows):
        window = tuple(sorted((start + i) % c.rows for i in range(target)))
        out.append((f"rows {start}..{(start + target - 1) % c.rows} (cyclic window)", window))
    return out


def _find_alternate(c: CheckMatrix, target: int) -> Optional[Tuple[str, StabilizerCode]]:
    for note, keep in _alternate_row_sets(c, target):
        if rank(c.m.take_rows(keep)) != target:
            continue
        return note, select_generators_subset(c, keep)
    return None


def certify_stated(code: StabilizerCode, d: int, ceiling: int = EXACT_CEILING,
                   workers: int = DEFAULT_WORKERS) -> Tuple[DistanceCertificate, List[str]]:
    """Certificate aimed at a stated distance ``d``, plus notes for the report."""
    notes = []
    if code.n + code.k <= ceiling:
        return distance_exact(code, ceiling=ceiling, workers=workers), notes
    if d <= UPPER_CHECK_MAX_D or code.n <= UPPER_CHECK_MAX_N:
        return distance_bounded(code, d, workers=workers), notes

    cert = distance_bounded(code, d - 1, workers=workers)
    if cert.is_exact:
        return cert, notes
    witness = sample_light_logical(code, WITNESS_SAMPLES, WITNESS_SEED)
    if witness is not None and witness.weight() == d and verify_witness(code, witness, d):
        # lower bound d plus a weight-d witness pins d exactly
        notes.append(f"weight-{d} logical operator found by kernel sampling")
        return DistanceCertificate(
            kind=CertificateKind.EXACT,
            value=d,
            method=METHOD_SAMPLED,
            witness=witness,
            elapsed_ms=cert.elapsed_ms,
            notes=cert.notes + ("degeneracy not classified",),
        ), notes
    lightest = witness.weight() if witness is not None else None
    notes.append(f"upper-bound side unverified (lightest sampled logical weight {lightest})")
    return cert, notes


def _judge(row: TableRow, cert: DistanceCertificate) -> Tuple[bool, bool, str]:
    """(distance agrees, only a bound, evidence)"""
    if cert.is_exact:
        if cert.value == row.d:
            return True, False, ""
        return False, False, f"certified d = {cert.value}, table states {row.d}"
    if cert.value == row.d:
        return True, True, ""
    if cert.method == METHOD_WEIGHT and cert.value > row.d:
        return False, False, f"no logical operator up to weight {cert.value - 1}, table states d = {row.d}"
    return False, False, f"{cert.describe()} against stated d = {row.d}"


def _listing_for(row: TableRow, spec: str):
    for listing in GENERATOR_LISTINGS.values():
        if (listing.name == row.label and listing.scheme == spec
                and listing.b1 == row.b1 and listing.b2 == row.b2):
            return listing
    return None


# ============================================================================
# Operations
# ============================================================================

def reproduce_row(row: TableRow, ceiling: int = EXACT_CEILING, workers: int = DEFAULT_WORKERS) -> RowResult:
    try:
        spec = label_to_spec(row.group)
        scheme = parse_scheme_spec(spec)
        c = build_check_matrix_from_formulas(scheme, row.b1, row.b2)
    except AssocCodesError as exc:
        return RowResult(row, DISCREPANT, evidence=[f"construction failed: {exc}"])

    if c.n != row.n:
        return RowResult(row, DISCREPANT, evidence=[f"scheme has {c.n} vertices, table states n = {row.n}"])
    if not commutes(c):
        pairs = non_commuting_pairs(c)
        return RowResult(row, DISCREPANT, evidence=[f"B1 B2^T + B2 B1^T != 0, e.g. rows {pairs[0]}"])

    ranks = trailing_drop_ranks(c)
    hits = [drop for drop, r in ranks if r == row.n_minus_k]
    result = RowResult(row, DISCREPANT, drop_hits=hits)

    if hits:
        code = select_generators(c, hits[0])
        result.drop_last = hits[0]
    else:
        full_rank = ranks[0][1]
        alternate = _find_alternate(c, row.n_minus_k) if row.n_minus_k <= full_rank else None
        if alternate is None:
            result.evidence.append(
                f"no row choice reaches n - k = {row.n_minus_k}; trailing drops give "
                f"{sorted({r for _, r in ranks})}, full rank {full_rank}")
            return result
        result.rows_note, code = alternate
        result.keep = code.provenance.keep

    result.code = code
    cert, notes = certify_stated(code, row.d, ceiling=ceiling, workers=workers)
    result.certificate = cert
    result.evidence.extend(notes)
    agrees, bound_only, evidence = _judge(row, cert)
    if evidence:
        result.evidence.append(evidence)

    bounds = check_bounds(row.n, row.k, row.d)
    if not bounds.kl:
        result.evidence.append("stated parameters violate n >= k + 2d - 2")

    listing = _listing_for(row, spec)
    if listing is not None:
        check = compare_listing(code, listing.rows, listing.missing, listing.name)
        result.generators_match = check.matches
        if listing.missing:
            result.evidence.append(
                "printed generator list omits row(s) " + ", ".join(f"g_{i + 1}" for i in listing.missing))

    if not agrees:
        result.status = DISCREPANT
    elif bound_only:
        result.status = BOUND_ONLY
    elif result.keep:
        result.status = ALTERNATE_ROWS
    else:
        result.status = REPRODUCED
    return result


def reproduce_table(table_id: Union[int, str], rows_filter: Optional[Sequence[str]] = None,
                    ceiling: int = EXACT_CEILING, workers: int = DEFAULT_WORKERS,
                    max_n: Optional[int] = None, verbose: bool = False) -> ReproductionReport:
    table = resolve_table_id(table_id)
    report = ReproductionReport(table=table)
    for row in table_rows(table, rows_filter):
        if max_n is not None and row.n > max_n:
            continue
        if verbose:
            cprint(f"  🔍 {row.key()} ...", "white")
        result = reproduce_row(row, ceiling=ceiling, workers=workers)
        if verbose:
            color = "green" if result.status in (REPRODUCED, ALTERNATE_ROWS) else "yellow"
            if result.status == DISCREPANT:
                color = "red"
            cprint(f"     {result.status}  {result.found}", color)
        report.rows.append(result)
    return report


def compare_listing(code: StabilizerCode, printed: Sequence[str], missing: Sequence[int] = (),
                    name: str = "") -> ListingCheck:
    """Emitted rows with ``missing`` indices skipped must equal the printed rows in order."""
    emitted = to_pauli(code)
    skipped = [p for i, p in enumerate(emitted) if i not in set(missing)]
    mismatched = [i for i, (a, b) in enumerate(zip(skipped, printed)) if a != b]
    matches = len(skipped) == len(printed) and not mismatched
    return ListingCheck(name, emitted, list(printed), tuple(missing), matches, mismatched)


def check_generator_listing(name: str) -> ListingCheck:
    listing = GENERATOR_LISTINGS[name]
    scheme = parse_scheme_spec(listing.scheme)
    c = build_check_matrix_from_formulas(scheme, listing.b1, listing.b2)
    code = select_generators(c, listing.drop_last)
    return compare_listing(code, listing.rows, listing.missing, listing.name)
