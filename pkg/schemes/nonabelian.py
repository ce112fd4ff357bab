"""
Non-Abelian group schemes - 非阿贝尔群方案
=====================================
Class sums of U_6n, T_4n, V_8n and D_2n taken in their regular
representations. The generator matrices [a], [b] are assembled from
circulant and identity blocks, and each A_i is the XOR of the permutation
matrices of one conjugacy class, indexed the way the published class lists
are indexed.
"""

from functools import lru_cache
from typing import List

from errors import SchemeError
from gf2.bitmatrix import BitMatrix
from gf2.linalg import add, block_matrix, kron, matrix_power, mul, xor_sum
from schemes.cyclic import SWAP, circulant
from schemes.scheme import AssociationScheme


class _Powers:
    """Memoized powers of a fixed generator matrix."""

    def __init__(self, gen: BitMatrix):
        self.gen = gen
        self._cache = {0: BitMatrix.identity(gen.rows), 1: gen}

    def __call__(self, e: int) -> BitMatrix:
        if e not in self._cache:
            self._cache[e] = matrix_power(self.gen, e)
        return self._cache[e]


def _class_sum(elements: List[BitMatrix]) -> BitMatrix:
    size = elements[0].rows
    return xor_sum(elements, size, size)


# ============================================================================
# U_6n
# ============================================================================

@lru_cache(maxsize=None)
def u6n_scheme(n: int) -> AssociationScheme:
    """3n classes on 6n vertices, basis order a^j, b a^j, b^2 a^j."""
    if n < 1:
        raise SchemeError(f"U_6n needs n >= 1, got {n}")
    s = circulant(2 * n)
    i = BitMatrix.identity(2 * n)
    z = BitMatrix.zeros(2 * n, 2 * n)
    a = _Powers(block_matrix([[s, z, z], [z, z, s], [z, s, z]]))
    b = block_matrix([[z, i, z], [z, z, i], [i, z, z]])
    b2 = mul(b, b)

    basis = [a(2 * r) for r in range(n)]
    basis += [add(mul(b, a(2 * r)), mul(b2, a(2 * r))) for r in range(n)]
    basis += [_class_sum([a(2 * r + 1), mul(b, a(2 * r + 1)), mul(b2, a(2 * r + 1))]) for r in range(n)]
    return AssociationScheme(label=f"U_{6 * n}", adjacency=tuple(basis), spec=f"u6n:{n}")


# ============================================================================
# T_4n
# ============================================================================

@lru_cache(maxsize=None)
def t4n_scheme(n: int) -> AssociationScheme:
    """
    n+3 classes on 4n vertices.

    The two reflection-type classes are the full sums over {b a^(2j)} and
    {b a^(2j+1)}, 0 <= j < n. For even n this is the same matrix as pairing
    b a^(2j) with b^3 a^(2j) over 2j < n; for odd n the pairing would mix the
    two classes, so the class lists are summed directly.
    """
    if n < 2:
        raise SchemeError(f"T_4n needs n >= 2, got {n}")
    s = circulant(2 * n)
    s_inv = circulant(2 * n, -1)
    z2 = BitMatrix.zeros(2 * n, 2 * n)
    i1 = BitMatrix.identity(n)
    z1 = BitMatrix.zeros(n, n)
    a = _Powers(block_matrix([[s, z2], [z2, s_inv]]))
    b = block_matrix([
        [z1, z1, i1, z1],
        [z1, z1, z1, i1],
        [z1, i1, z1, z1],
        [i1, z1, z1, z1],
    ])
    b2 = mul(b, b)

    basis = [BitMatrix.identity(4 * n), a(n)]
    basis += [add(a(j), mul(b2, a(n - j))) for j in range(1, n)]
    basis.append(_class_sum([mul(b, a(2 * j)) for j in range(n)]))
    basis.append(_class_sum([mul(b, a(2 * j + 1)) for j in range(n)]))
    return AssociationScheme(label=f"T_{4 * n}", adjacency=tuple(basis), spec=f"t4n:{n}")


# ============================================================================
# V_8n
# ============================================================================

@lru_cache(maxsize=None)
def v8n_scheme(n: int) -> AssociationScheme:
    """2n+3 classes on 8n vertices; n must be odd."""
    if n < 1 or n % 2 == 0:
        raise SchemeError(f"V_8n needs odd n >= 1, got {n}")
    s = circulant(2 * n)
    s_inv = circulant(2 * n, -1)
    z = BitMatrix.zeros(2 * n, 2 * n)
    i = BitMatrix.identity(2 * n)
    a = _Powers(block_matrix([
        [s, z, z, z],
        [z, z, z, s_inv],
        [z, z, s, z],
        [z, s_inv, z, z],
    ]))
    b = block_matrix([
        [z, i, z, z],
        [z, z, i, z],
        [z, z, z, i],
        [i, z, z, z],
    ])
    b2 = mul(b, b)
    b3 = mul(b2, b)
    half = (n - 1) // 2

    basis = [BitMatrix.identity(8 * n), b2]
    basis += [add(a(2 * j + 1), mul(b2, a(2 * n - 2 * j - 1))) for j in range(n)]
    basis += [add(a(2 * j), a(2 * n - 2 * j)) for j in range(1, half + 1)]
    basis += [add(mul(b2, a(2 * j)), mul(b2, a(2 * n - 2 * j))) for j in range(1, half + 1)]
    basis.append(_class_sum([m for j in range(n) for m in (mul(b, a(2 * j)), mul(b3, a(2 * j)))]))
    basis.append(_class_sum([m for j in range(n) for m in (mul(b, a(2 * j + 1)), mul(b3, a(2 * j + 1)))]))
    return AssociationScheme(label=f"V_{8 * n}", adjacency=tuple(basis), spec=f"v8n:{n}")


# ============================================================================
# D_2n
# ============================================================================

@lru_cache(maxsize=None)
def d2n_scheme(n: int) -> AssociationScheme:
    """Dihedral group of order 2n: m+3 classes for n = 2m, m+2 for n = 2m+1."""
    if n < 2:
        raise SchemeError(f"D_2n needs n >= 2, got {n}")
    eye2 = BitMatrix.identity(2)
    m, odd = divmod(n, 2)
    basis = [BitMatrix.identity(2 * n)]
    if odd:
        for j in range(1, m + 1):
            basis.append(kron(eye2, add(circulant(n, j), circulant(n, -j))))
        basis.append(kron(SWAP, BitMatrix.ones(n, n)))
    else:
        for j in range(1, m):
            basis.append(kron(eye2, add(circulant(n, j), circulant(n, -j))))
        basis.append(kron(eye2, circulant(n, m)))
        basis.append(kron(SWAP, xor_sum([circulant(n, 2 * j) for j in range(m)], n, n)))
        basis.append(kron(SWAP, xor_sum([circulant(n, 2 * j + 1) for j in range(m)], n, n)))
    return AssociationScheme(label=f"D_{2 * n}", adjacency=tuple(basis), spec=f"d2n:{n}")
