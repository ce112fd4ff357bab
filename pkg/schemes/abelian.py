"""
Finite Abelian groups of a given order.

Every Abelian group of order n = p1^e1 ... pr^er is a product of prime-power
cyclic groups, one integer partition of e_k per prime, so there are
p(e1) ... p(er) isomorphism classes.
"""

import itertools
from typing import List, Tuple

from sympy import factorint
from sympy.utilities.iterables import partitions

from errors import SchemeError


def exponent_partitions(e: int) -> List[Tuple[int, ...]]:
    """Partitions of e as non-increasing tuples, largest part first."""
    out = []
    for part in partitions(e):
        out.append(tuple(sorted((size for size, mult in part.items() for _ in range(mult)), reverse=True)))
    return sorted(out, reverse=True)


def abelian_groups_of_order(n: int) -> List[Tuple[int, ...]]:
    """
    All Abelian groups of order n, each as a tuple of prime-power cyclic
    factors (primes ascending, powers descending within a prime).

    n = 1 gives the trivial group ``()``.
    """
    if n < 1:
        raise SchemeError(f"group order must be positive, got {n}")
    per_prime = []
    for p, e in sorted(factorint(n).items()):
        per_prime.append([tuple(p ** k for k in parts) for parts in exponent_partitions(e)])
    groups = []
    for choice in itertools.product(*per_prime):
        groups.append(tuple(f for factors in choice for f in factors))
    return groups


def group_label(factors: Tuple[int, ...]) -> str:
    return "×".join(f"C_{f}" for f in factors) if factors else "C_1"
