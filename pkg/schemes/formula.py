"""
Adjacency-sum formulas - 邻接矩阵表达式
=====================================
Evaluates the B1 / B2 entries of the code tables against a scheme.

Single-component schemes (cyclic and non-Abelian families):

    A3+A4            A_3 + A_4 of the scheme's own basis
    A_0+A_2          underscores and braces are optional

Product schemes: each term is a juxtaposition of one factor per component,
read left to right and combined with the Kronecker product.

    A_i     basis matrix i of that component's cyclic scheme
    X       the 2x2 swap (component of size 2)
    S, S^k  circulant power of that component
    I_k     identity; may span several consecutive components whose sizes
            multiply to k (I_{12} covers C_3×C_4)

    I_2A_2+XA_1          on C_2×C_4
    I_3A_1+SS+S^2S^2     on C_3×C_3

Terms are summed over GF(2).
"""

import re
from typing import List, Sequence, Tuple

from errors import SchemeSpecError
from gf2.bitmatrix import BitMatrix
from gf2.linalg import kron_all, xor_sum
from schemes.cyclic import SWAP, circulant
from schemes.scheme import AssociationScheme

_TOKEN = re.compile(r"I_\{(\d+)\}|I_?(\d+)|A_\{(\d+)\}|A_?(\d+)|S\^\{?(-?\d+)\}?|S|X")


def _tokens(term: str, formula: str) -> List[Tuple[str, int]]:
    pos = 0
    out = []
    while pos < len(term):
        m = _TOKEN.match(term, pos)
        if not m:
            raise SchemeSpecError(f"cannot parse {term[pos:]!r} in formula {formula!r}")
        if m.group(1) or m.group(2):
            out.append(("I", int(m.group(1) or m.group(2))))
        elif m.group(3) or m.group(4):
            out.append(("A", int(m.group(3) or m.group(4))))
        elif m.group(5) is not None:
            out.append(("S", int(m.group(5))))
        elif m.group(0) == "S":
            out.append(("S", 1))
        else:
            out.append(("X", 1))
        pos = m.end()
    return out


def _split_terms(formula: str) -> List[str]:
    text = formula.replace(" ", "")
    terms = [t for t in text.split("+")]
    if not text or any(not t for t in terms):
        raise SchemeSpecError(f"empty term in formula {formula!r}")
    return terms


def _single_term(scheme: AssociationScheme, term: str, formula: str) -> BitMatrix:
    toks = _tokens(term, formula)
    if len(toks) != 1 or toks[0][0] not in ("A", "I"):
        raise SchemeSpecError(f"term {term!r} of {formula!r} must be a single A_i on {scheme.label}")
    kind, value = toks[0]
    if kind == "I":
        if value != scheme.nu:
            raise SchemeSpecError(f"I_{value} does not match {scheme.nu} vertices")
        return BitMatrix.identity(value)
    if not 0 <= value < len(scheme.adjacency):
        raise SchemeSpecError(f"A_{value} out of range for {scheme.label} (d={scheme.classes})")
    return scheme.adjacency[value]


def _product_term(scheme: AssociationScheme, term: str, formula: str) -> BitMatrix:
    factors = scheme.factors
    pieces = []
    pos = 0
    for kind, value in _tokens(term, formula):
        if pos >= len(factors):
            raise SchemeSpecError(f"term {term!r} has more factors than {scheme.label}")
        comp = factors[pos]
        if kind == "I":
            size, span = 1, 0
            while size < value and pos + span < len(factors):
                size *= factors[pos + span].nu
                span += 1
            if size != value or span == 0:
                raise SchemeSpecError(f"I_{value} in {term!r} does not cover whole components of {scheme.label}")
            pieces.append(BitMatrix.identity(value))
            pos += span
            continue
        if kind == "A":
            if not 0 <= value < len(comp.adjacency):
                raise SchemeSpecError(f"A_{value} out of range for component {comp.label} in {term!r}")
            pieces.append(comp.adjacency[value])
        elif kind == "X":
            if comp.nu != 2:
                raise SchemeSpecError(f"X used on component {comp.label} of size {comp.nu}")
            pieces.append(SWAP)
        else:
            pieces.append(circulant(comp.nu, value))
        pos += 1
    if pos != len(factors):
        raise SchemeSpecError(f"term {term!r} covers {pos} of {len(factors)} components of {scheme.label}")
    return kron_all(pieces)


def evaluate_formula(scheme: AssociationScheme, formula: str) -> BitMatrix:
    """GF(2) sum of the formula's terms as a nu x nu matrix."""
    terms = _split_terms(formula)
    if scheme.factors:
        mats = [_product_term(scheme, t, formula) for t in terms]
    else:
        mats = [_single_term(scheme, t, formula) for t in terms]
    return xor_sum(mats, scheme.nu, scheme.nu)


def formula_from_indices(indices: Sequence[int]) -> str:
    """(1, 4, 5) -> 'A1+A4+A5'"""
    return "+".join(f"A{i}" for i in sorted(indices))


def indices_from_formula(formula: str) -> Tuple[int, ...]:
    """Inverse of formula_from_indices for plain single-component sums."""
    out = []
    for term in _split_terms(formula):
        toks = _tokens(term, formula)
        if len(toks) != 1 or toks[0][0] != "A":
            raise SchemeSpecError(f"{formula!r} is not a plain sum of basis matrices")
        out.append(toks[0][1])
    return tuple(sorted(out))
