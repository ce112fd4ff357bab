"""
Cyclic and product schemes - 循环群方案
=====================================
功能:
1. circulant(nu, k): S^k with S[i][j] = 1 iff j = i - 1 (mod nu)
2. cyclic_scheme(nu): {I, S^i + S^-i, ..., S^m} (even nu) or {I, S^i + S^-i} (odd nu)
3. product_scheme: Kronecker products of component bases, lexicographic order
4. abelian_scheme: product of cyclic schemes for a list of cyclic factors
"""

import itertools
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from errors import SchemeError
from gf2.bitmatrix import BitMatrix
from gf2.linalg import add, kron_all
from schemes.scheme import AssociationScheme

# 2x2 swap; the X / sigma_x of the product tables
SWAP = BitMatrix.from_dense([[0, 1], [1, 0]])


def circulant(nu: int, power: int = 1) -> BitMatrix:
    """S^power for the nu x nu circulant S (negative powers allowed)."""
    if nu < 1:
        raise SchemeError(f"circulant size must be positive, got {nu}")
    rows = np.arange(nu)
    dense = np.zeros((nu, nu), dtype=np.uint8)
    dense[rows, (rows - power) % nu] = 1
    return BitMatrix.from_dense(dense)


@lru_cache(maxsize=None)
def cyclic_scheme(nu: int) -> AssociationScheme:
    if nu < 2:
        raise SchemeError(f"cyclic scheme needs nu >= 2, got {nu}")
    m, odd = divmod(nu, 2)
    basis = [BitMatrix.identity(nu)]
    last = m if odd else m - 1
    for i in range(1, last + 1):
        basis.append(add(circulant(nu, i), circulant(nu, -i)))
    if not odd:
        basis.append(circulant(nu, m))
    return AssociationScheme(label=f"C_{nu}", adjacency=tuple(basis), spec=f"cyclic:{nu}")


def product_scheme(schemes: Sequence[AssociationScheme]) -> AssociationScheme:
    """A_(i1) ⊗ ... ⊗ A_(ir) over index tuples in lexicographic order."""
    schemes = list(schemes)
    if not schemes:
        raise SchemeError("product_scheme needs at least one component")
    basis = []
    for idx in itertools.product(*(range(len(s.adjacency)) for s in schemes)):
        basis.append(kron_all([s.adjacency[i] for s, i in zip(schemes, idx)]))
    # nested products flatten into their components
    factors = []
    for s in schemes:
        factors.extend(s.factors or (s,))
    return AssociationScheme(
        label="×".join(f.label for f in factors),
        adjacency=tuple(basis),
        spec="product:" + ",".join(f.spec for f in factors),
        factors=tuple(factors),
    )


def product_index(sizes: Sequence[int], index: Sequence[int]) -> int:
    """Position of a component-index tuple in the product basis."""
    if len(sizes) != len(index):
        raise SchemeError(f"index {tuple(index)} does not match {len(sizes)} components")
    flat = 0
    for size, i in zip(sizes, index):
        if not 0 <= i < size:
            raise SchemeError(f"component index {i} out of range 0..{size - 1}")
        flat = flat * size + i
    return flat


def abelian_scheme(factors: Tuple[int, ...]) -> AssociationScheme:
    """Scheme of C_f1 × ... × C_fr; a single factor gives the cyclic scheme itself."""
    if not factors:
        return AssociationScheme(label="C_1", adjacency=(BitMatrix.identity(1),), spec="abelian:")
    if len(factors) == 1:
        return cyclic_scheme(factors[0])
    return product_scheme([cyclic_scheme(f) for f in factors])
