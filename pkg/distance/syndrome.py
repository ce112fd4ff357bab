"""
Syndrome system and the normalizer split.

syndrome_matrix(code) applies each generator's symplectic form to an error
(a | b): row g = (z_g | x_g), so H (a; b) = 0 says "B1 b + B2 a = 0". Its
kernel is N(S); the kernel is split as S ⊕ L where L holds 2k logical
representatives, so a kernel vector lies outside S iff its L-part is nonzero.
"""

from dataclasses import dataclass
from typing import List

from config import DISTANCE_MAX_N
from distance.certificate import ErrorVector
from errors import DistanceInputError
from gf2.bitmatrix import BitMatrix
from gf2.linalg import hstack, in_rowspace, kernel_basis
from stabilizer.code import StabilizerCode


@dataclass(frozen=True)
class NormalizerSplit:
    """Stabilizer rows and logical representatives as packed (a, b) int pairs"""
    n: int
    stabilizers: List[tuple]
    logicals: List[tuple]


def syndrome_matrix(code: StabilizerCode) -> BitMatrix:
    return hstack(code.gens.z_part(), code.gens.x_part())


def _halves(value: int, n: int) -> tuple:
    return value & ((1 << n) - 1), value >> n


def normalizer_split(code: StabilizerCode) -> NormalizerSplit:
    n = code.n
    if n > DISTANCE_MAX_N:
        raise DistanceInputError(f"distance search supports n <= {DISTANCE_MAX_N}, got {n}")
    stab = code.gens.m.row_ints()
    basis = {}
    for v in stab:
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                break
    logicals = []
    for vec in kernel_basis(syndrome_matrix(code)):
        v0 = v = vec.to_int()
        while v:
            top = v.bit_length() - 1
            if top in basis:
                v ^= basis[top]
            else:
                basis[top] = v
                logicals.append(v0)
                break
    return NormalizerSplit(
        n=n,
        stabilizers=[_halves(v, n) for v in stab],
        logicals=[_halves(v, n) for v in logicals],
    )


def satisfies_syndrome(code: StabilizerCode, e: ErrorVector) -> bool:
    """True iff e commutes with every generator."""
    a, b = e.a.to_int(), e.b.to_int()
    n = code.n
    for g in code.gens.m.row_ints():
        x, z = _halves(g, n)
        if (bin(x & b).count("1") + bin(z & a).count("1")) % 2:
            return False
    return True


def verify_witness(code: StabilizerCode, e: ErrorVector, d: int) -> bool:
    """Witness check independent of any search: in N(S), outside S, weight d."""
    if e.n != code.n:
        return False
    if code.k > 0 and in_rowspace(code.gens.m, e.stacked()):
        return False
    if code.k == 0 and not in_rowspace(code.gens.m, e.stacked()):
        return False
    return satisfies_syndrome(code, e) and e.weight() == d and d > 0
