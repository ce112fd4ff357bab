"""Brute-force distance over all 4^n phase-free Pauli operators (test oracle, n <= 8)."""

import time

import numpy as np

from config import ORACLE_MAX_N
from distance.certificate import METHOD_ORACLE, CertificateKind, DistanceCertificate, ErrorVector
from errors import DistanceInputError
from gf2.bitmatrix import WORD, popcount
from stabilizer.code import StabilizerCode


def distance_oracle(code: StabilizerCode) -> DistanceCertificate:
    n = code.n
    if n > ORACLE_MAX_N:
        raise DistanceInputError(f"oracle supports n <= {ORACLE_MAX_N}, got {n}")
    started = time.perf_counter()
    side = 1 << n
    a = np.repeat(np.arange(side, dtype=WORD), side)
    b = np.tile(np.arange(side, dtype=WORD), side)

    # commutes with every generator
    commuting = np.ones(a.shape, dtype=bool)
    group = [0]
    mask = (1 << n) - 1
    for row in code.gens.m.row_ints():
        x, z = row & mask, row >> n
        parity = (popcount(a & np.uint64(z)) + popcount(b & np.uint64(x))) % 2
        commuting &= parity == 0
        group = group + [g ^ row for g in group]

    # membership in S, keyed as a | b << n
    keys = a | (b << np.uint64(n))
    in_s = np.isin(keys, np.array(sorted(set(group)), dtype=WORD))
    if code.k == 0:
        candidates = in_s & (keys != 0)
    else:
        candidates = commuting & ~in_s

    weights = popcount(a | b)
    weights[~candidates] = n + 1
    w = int(weights.min())
    idx = np.flatnonzero(weights == w)
    j = idx[np.lexsort((b[idx], a[idx]))[0]]
    return DistanceCertificate(
        kind=CertificateKind.EXACT,
        value=w,
        method=METHOD_ORACLE,
        witness=ErrorVector.from_ints(int(a[j]), int(b[j]), n),
        elapsed_ms=(time.perf_counter() - started) * 1000.0,
        notes=("degeneracy not classified",),
    )
