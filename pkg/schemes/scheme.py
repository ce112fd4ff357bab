"""
Association schemes - 结合方案
=====================================
功能:
1. AssociationScheme: vertex count plus ordered adjacency basis A_0..A_d
2. verify_scheme: identity, partition, valency, transpose closure and
   product closure, each reported with a witness on failure; commutativity
   is recorded separately
3. intersection_numbers: p^l_ij read off the integer products A_i A_j
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from errors import SchemeError
from gf2.bitmatrix import BitMatrix

# ============================================================================
# 数据类
# ============================================================================


@dataclass(frozen=True)
class AssociationScheme:
    """Ordered adjacency basis A_0..A_d on nu vertices."""
    label: str                                   # e.g. "C_12", "C_2×C_4", "U_12"
    adjacency: Tuple[BitMatrix, ...]
    spec: str = ""                               # parseable spec, e.g. "cyclic:12"
    factors: Tuple["AssociationScheme", ...] = ()  # components of a product scheme

    @property
    def nu(self) -> int:
        return self.adjacency[0].rows if self.adjacency else 0

    @property
    def classes(self) -> int:
        return len(self.adjacency) - 1

    def valencies(self) -> List[int]:
        return [int(a.row_weights()[0]) if a.rows else 0 for a in self.adjacency]

    def dense_stack(self) -> np.ndarray:
        """(d+1, nu, nu) int64 array of the adjacency matrices."""
        return np.stack([a.to_dense().astype(np.int64) for a in self.adjacency])

    def __getitem__(self, i: int) -> BitMatrix:
        return self.adjacency[i]

    def __len__(self) -> int:
        return len(self.adjacency)


@dataclass(frozen=True)
class IntersectionTensor:
    """p[l, i, j] with A_i A_j = sum_l p[l, i, j] A_l."""
    p: np.ndarray

    def __getitem__(self, lij):
        l, i, j = lij
        return int(self.p[l, i, j])

    @property
    def size(self) -> int:
        return self.p.shape[0]

    def reconstruct(self, scheme: AssociationScheme, i: int, j: int) -> np.ndarray:
        stack = scheme.dense_stack()
        return np.tensordot(self.p[:, i, j], stack, axes=1)


@dataclass
class AxiomCheck:
    """One verified axiom"""
    name: str
    passed: bool
    witness: str = ""


@dataclass
class VerificationReport:
    """Result of verify_scheme"""
    label: str
    nu: int
    classes: int
    checks: List[AxiomCheck] = field(default_factory=list)
    symmetric: bool = False
    commutative: bool = False
    valencies: List[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "nu": self.nu,
            "classes": self.classes,
            "passed": self.passed,
            "symmetric": self.symmetric,
            "commutative": self.commutative,
            "valencies": self.valencies,
            "checks": [{"axiom": c.name, "passed": c.passed, "witness": c.witness} for c in self.checks],
        }


# ============================================================================
# 公理检查
# ============================================================================

def _relation_labels(stack: np.ndarray) -> Optional[np.ndarray]:
    """Cell -> index of the relation containing it, or None when the basis is not a partition."""
    if (stack.sum(axis=0) != 1).any():
        return None
    return np.argmax(stack, axis=0)


def _expand_products(stack: np.ndarray, labels: np.ndarray):
    """
    Read p^l_ij from one representative cell per relation and compare the
    reconstruction against every integer product.

    Returns (tensor, witness); tensor is None when some product does not
    close, and witness names the first offending (i, j, cell).
    """
    size, nu, _ = stack.shape
    flat = labels.ravel()
    reps = np.array([int(np.flatnonzero(flat == l)[0]) for l in range(size)])
    rep_x, rep_y = np.unravel_index(reps, (nu, nu))
    p = np.zeros((size, size, size), dtype=np.int64)
    for i in range(size):
        products = np.matmul(stack[i], stack)          # (j, x, y)
        coeff = products[:, rep_x, rep_y]              # (j, l)
        rebuilt = coeff[:, labels]                     # (j, x, y)
        bad = np.argwhere(rebuilt != products)
        if bad.size:
            j, x, y = (int(v) for v in bad[0])
            return None, (f"A_{i}·A_{j} is not constant on relation A_{int(labels[x, y])}: "
                          f"cell ({x},{y}) = {int(products[j, x, y])}, "
                          f"expected {int(rebuilt[j, x, y])}")
        p[:, i, :] = coeff.T
    return p, ""


def verify_scheme(s: AssociationScheme) -> VerificationReport:
    """Check every scheme axiom; failures are report entries, not exceptions."""
    report = VerificationReport(label=s.label, nu=s.nu, classes=s.classes)
    if not s.adjacency:
        report.checks.append(AxiomCheck("identity", False, "empty basis"))
        return report

    shapes = {a.shape for a in s.adjacency}
    if len(shapes) != 1 or s.adjacency[0].rows != s.adjacency[0].cols:
        report.checks.append(AxiomCheck("shape", False, f"matrix shapes {sorted(shapes)}"))
        return report

    stack = s.dense_stack()
    nu = s.nu

    # A_0 = I
    eye = np.eye(nu, dtype=np.int64)
    diff = np.argwhere(stack[0] != eye)
    report.checks.append(AxiomCheck(
        "identity", diff.size == 0,
        "" if diff.size == 0 else f"A_0 differs from I at cell ({diff[0][0]},{diff[0][1]})",
    ))

    # sum A_i = J
    total = stack.sum(axis=0)
    bad = np.argwhere(total != 1)
    report.checks.append(AxiomCheck(
        "partition", bad.size == 0,
        "" if bad.size == 0 else
        f"cell ({bad[0][0]},{bad[0][1]}) covered {int(total[bad[0][0], bad[0][1]])} times",
    ))

    # constant row sums
    row_sums = stack.sum(axis=2)
    witness = ""
    for i, sums in enumerate(row_sums):
        if (sums != sums[0]).any():
            r = int(np.flatnonzero(sums != sums[0])[0])
            witness = f"A_{i} row {r} sums to {int(sums[r])}, row 0 to {int(sums[0])}"
            break
    report.checks.append(AxiomCheck("valency", witness == "", witness))
    report.valencies = [int(v) for v in row_sums[:, 0]]

    # transpose closure
    keys = {a.data.tobytes(): i for i, a in enumerate(s.adjacency)}
    witness = ""
    symmetric = True
    for i, a in enumerate(s.adjacency):
        t = a.T
        j = keys.get(t.data.tobytes())
        if j is None:
            witness = f"transpose of A_{i} is not in the basis"
            symmetric = False
            break
        if j != i:
            symmetric = False
    report.checks.append(AxiomCheck("transpose-closure", witness == "", witness))
    report.symmetric = symmetric

    # products expand in the basis with integer coefficients
    labels = _relation_labels(stack)
    if labels is None:
        report.checks.append(AxiomCheck("closure", False, "skipped: basis is not a partition of J"))
    else:
        tensor, witness = _expand_products(stack, labels)
        report.checks.append(AxiomCheck("closure", tensor is not None, witness))

    report.commutative = all(
        np.array_equal(stack[i] @ stack[j], stack[j] @ stack[i])
        for i in range(len(stack)) for j in range(i + 1, len(stack))
    )
    return report


def intersection_numbers(s: AssociationScheme) -> IntersectionTensor:
    stack = s.dense_stack()
    labels = _relation_labels(stack)
    if labels is None:
        raise SchemeError(f"{s.label}: adjacency matrices do not partition J")
    tensor, witness = _expand_products(stack, labels)
    if tensor is None:
        raise SchemeError(f"{s.label}: basis does not close ({witness})")
    return IntersectionTensor(p=tensor)
