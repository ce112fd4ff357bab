"""
Weight-limited distance search - 有界距离搜索
=====================================
Walks OR-weights w = 1..w_max. Every weight-w error is split at its sorted
support into a low part on the first w // 2 sites and a high part on the
rest; the error lies in N(S) iff both parts have equal syndromes, and it is
outside S iff its symplectic products with the logical representatives are
not all zero. High parts are generated per leading site (their smallest
support index) and joined against the low parts by syndrome, so each
weight-w error is examined exactly once without materializing all
C(n, w) 3^w candidates.

Leading sites are independent chunks; a weight is finished across all
chunks before the next one starts, and the first weight with a hit gives
Exact(w) with the smallest (a, b) witness at that weight.
"""

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from config import DEFAULT_WORKERS, JOIN_BATCH_PAIRS, WITNESS_SAMPLES, WITNESS_SEED
from distance.certificate import METHOD_WEIGHT, CertificateKind, DistanceCertificate, ErrorVector
from distance.syndrome import NormalizerSplit, normalizer_split
from errors import DistanceInputError
from gf2.bitmatrix import WORD, popcount
from stabilizer.code import StabilizerCode

# single-site Paulis X, Y, Z as (a bit, b bit)
_SINGLE = ((1, 0), (1, 1), (0, 1))


@dataclass
class _SiteTables:
    """Per (site, Pauli) contributions, shape (n, 3) each"""
    syn: np.ndarray
    lsig0: np.ndarray
    lsig1: np.ndarray
    a: np.ndarray
    b: np.ndarray


@dataclass
class _Errors:
    syn: np.ndarray
    lsig0: np.ndarray
    lsig1: np.ndarray
    a: np.ndarray
    b: np.ndarray
    edge: np.ndarray        # largest support site (low parts) / smallest (high parts)


def _site_tables(split: NormalizerSplit) -> _SiteTables:
    n = split.n
    shape = (n, 3)
    syn = np.zeros(shape, dtype=WORD)
    lsig0 = np.zeros(shape, dtype=WORD)
    lsig1 = np.zeros(shape, dtype=WORD)
    a_tab = np.zeros(shape, dtype=WORD)
    b_tab = np.zeros(shape, dtype=WORD)
    for q in range(n):
        for p, (ea, eb) in enumerate(_SINGLE):
            a_tab[q, p] = ea << q
            b_tab[q, p] = eb << q
            s = 0
            for g, (x, z) in enumerate(split.stabilizers):
                if ((x >> q) & 1) * eb ^ ((z >> q) & 1) * ea:
                    s |= 1 << g
            syn[q, p] = s
            lo = hi = 0
            for j, (la, lb) in enumerate(split.logicals):
                if ((la >> q) & 1) * eb ^ ((lb >> q) & 1) * ea:
                    if j < 64:
                        lo |= 1 << j
                    else:
                        hi |= 1 << (j - 64)
            lsig0[q, p] = lo
            lsig1[q, p] = hi
    return _SiteTables(syn, lsig0, lsig1, a_tab, b_tab)


def _errors_on(supports: np.ndarray, tables: _SiteTables, edge: np.ndarray) -> _Errors:
    """All 3^w Pauli patterns on each support row."""
    count, w = supports.shape
    patterns = np.array(list(itertools.product(range(3), repeat=w)), dtype=np.int64).reshape(-1, w)
    shape = (count, len(patterns))
    acc = {name: np.zeros(shape, dtype=WORD) for name in ("syn", "lsig0", "lsig1", "a", "b")}
    for t in range(w):
        sites = supports[:, t][:, None]
        paulis = patterns[:, t][None, :]
        for name in acc:
            acc[name] ^= getattr(tables, name)[sites, paulis]
    edges = np.repeat(edge, len(patterns))
    return _Errors(**{k: v.ravel() for k, v in acc.items()}, edge=edges)


def _low_parts(n: int, w: int, tables: _SiteTables) -> _Errors:
    if w == 0:
        zero = np.zeros(1, dtype=WORD)
        return _Errors(zero, zero.copy(), zero.copy(), zero.copy(), zero.copy(), np.array([-1]))
    supports = np.array(list(itertools.combinations(range(n), w)), dtype=np.int64).reshape(-1, w)
    return _errors_on(supports, tables, supports[:, -1])


def _high_parts(n: int, w: int, lead: int, tables: _SiteTables) -> Optional[_Errors]:
    rest = list(itertools.combinations(range(lead + 1, n), w - 1))
    if not rest:
        return None
    supports = np.array([(lead,) + r for r in rest], dtype=np.int64).reshape(-1, w)
    return _errors_on(supports, tables, np.full(len(supports), lead))


def _join(low: _Errors, low_order: np.ndarray, low_sorted: np.ndarray, high: _Errors,
          lead: int, stabilizer_state: bool) -> Optional[Tuple[int, int]]:
    """Smallest (a, b) over qualifying low/high pairs, or None."""
    left = np.searchsorted(low_sorted, high.syn, side="left")
    right = np.searchsorted(low_sorted, high.syn, side="right")
    counts = right - left
    best = None
    start = 0
    total = len(counts)
    while start < total:
        csum = np.cumsum(counts[start:])
        stop = start + max(1, int(np.searchsorted(csum, JOIN_BATCH_PAIRS, side="right")))
        sl = slice(start, stop)
        c = counts[sl]
        npairs = int(c.sum())
        if npairs:
            hi_idx = np.repeat(np.arange(start, stop), c)
            offsets = np.arange(npairs) - np.repeat(np.cumsum(c) - c, c)
            lo_idx = low_order[left[hi_idx] + offsets]
            ok = low.edge[lo_idx] < lead
            if not stabilizer_state:
                ok &= ((low.lsig0[lo_idx] ^ high.lsig0[hi_idx]) | (low.lsig1[lo_idx] ^ high.lsig1[hi_idx])) != 0
            if ok.any():
                a = low.a[lo_idx[ok]] ^ high.a[hi_idx[ok]]
                b = low.b[lo_idx[ok]] ^ high.b[hi_idx[ok]]
                j = np.lexsort((b, a))[0]
                cand = (int(a[j]), int(b[j]))
                if best is None or cand < best:
                    best = cand
        start = stop
    return best


def _search_weight(n: int, w: int, tables: _SiteTables, stabilizer_state: bool,
                   workers: int) -> Optional[Tuple[int, int]]:
    wl = w // 2
    wh = w - wl
    low = _low_parts(n, wl, tables)
    order = np.argsort(low.syn, kind="stable")
    low_sorted = low.syn[order]

    def run(lead: int):
        high = _high_parts(n, wh, lead, tables)
        if high is None:
            return None
        return _join(low, order, low_sorted, high, lead, stabilizer_state)

    leads = range(wl, n - wh + 1)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = list(pool.map(run, leads))
    else:
        hits = [run(lead) for lead in leads]
    hits = [h for h in hits if h is not None]
    return min(hits) if hits else None


def distance_bounded(code: StabilizerCode, w_max: int, workers: int = DEFAULT_WORKERS) -> DistanceCertificate:
    if w_max < 1:
        raise DistanceInputError(f"w_max must be >= 1, got {w_max}")
    started = time.perf_counter()
    split = normalizer_split(code)
    tables = _site_tables(split)
    stabilizer_state = code.k == 0
    for w in range(1, min(w_max, code.n) + 1):
        hit = _search_weight(code.n, w, tables, stabilizer_state, workers)
        if hit is not None:
            return DistanceCertificate(
                kind=CertificateKind.EXACT,
                value=w,
                method=METHOD_WEIGHT,
                witness=ErrorVector.from_ints(hit[0], hit[1], code.n),
                elapsed_ms=(time.perf_counter() - started) * 1000.0,
                notes=("degeneracy not classified",),
            )
    notes = ()
    if w_max >= code.n:
        notes = ("every weight up to n examined",)
    return DistanceCertificate(
        kind=CertificateKind.LOWER_BOUND,
        value=w_max + 1,
        method=METHOD_WEIGHT,
        elapsed_ms=(time.perf_counter() - started) * 1000.0,
        notes=notes,
    )


def sample_light_logical(code: StabilizerCode, samples: int = WITNESS_SAMPLES,
                         seed: int = WITNESS_SEED) -> Optional[ErrorVector]:
    """
    Lightest element of N(S) \\ S among random kernel combinations. Used only
    to look for an upper-bound witness; it certifies nothing about lighter
    errors.
    """
    split = normalizer_split(code)
    if not split.logicals:
        return None
    basis = split.stabilizers + split.logicals
    n_stab = len(split.stabilizers)
    rng = np.random.default_rng(seed)
    coeffs = rng.integers(0, 2, size=(samples, len(basis)), dtype=np.uint8)
    # force a nonzero logical part
    empty = ~coeffs[:, n_stab:].any(axis=1)
    coeffs[empty, n_stab] = 1
    a = np.zeros(samples, dtype=WORD)
    b = np.zeros(samples, dtype=WORD)
    for col, (va, vb) in enumerate(basis):
        hit = coeffs[:, col].astype(bool)
        a[hit] ^= np.uint64(va)
        b[hit] ^= np.uint64(vb)
    weights = popcount(a | b)
    j = int(np.argmin(weights))
    return ErrorVector.from_ints(int(a[j]), int(b[j]), code.n)
