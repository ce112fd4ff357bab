"""
Distance certificates - 距离证书
=====================================
An Exact certificate carries a witness error (a, b) in N(S) \\ S of OR-weight
d; a LowerBound certificate states that no such error lighter than d exists.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Tuple

from gf2.bitmatrix import BitVector
from stabilizer.pauli import row_to_pauli

METHOD_COSET = "coset-enumeration"
METHOD_WEIGHT = "weight-enumeration"
METHOD_ORACLE = "oracle"


class CertificateKind(str, Enum):
    EXACT = "exact"
    LOWER_BOUND = "lower-bound"


@dataclass(frozen=True)
class ErrorVector:
    """X-part a and Z-part b of a phase-free Pauli error"""
    a: BitVector
    b: BitVector

    @classmethod
    def from_ints(cls, a: int, b: int, n: int) -> "ErrorVector":
        return cls(BitVector.from_int(a, n), BitVector.from_int(b, n))

    @property
    def n(self) -> int:
        return self.a.length

    def weight(self) -> int:
        return (self.a | self.b).weight()

    def stacked(self) -> BitVector:
        """(a | b) as one 2n vector, the check-matrix column layout."""
        return BitVector.from_bits(list(self.a.to_bits()) + list(self.b.to_bits()))

    def to_pauli(self) -> str:
        return row_to_pauli(self.a.to_bits(), self.b.to_bits())


@dataclass(frozen=True)
class DistanceCertificate:
    """Minimum distance, exact or as a lower bound"""
    kind: CertificateKind
    value: int
    method: str
    witness: Optional[ErrorVector] = None
    elapsed_ms: float = 0.0
    notes: Tuple[str, ...] = field(default_factory=tuple)

    @property
    def is_exact(self) -> bool:
        return self.kind == CertificateKind.EXACT

    def describe(self) -> str:
        if self.is_exact:
            return f"Exact({self.value})"
        return f"LowerBound({self.value})"

    def to_json(self, include_timing: bool = True) -> dict:
        out = {
            "kind": self.kind.value,
            "d": self.value,
            "method": self.method,
            "witness_a_hex": self.witness.a.to_hex() if self.witness else None,
            "witness_b_hex": self.witness.b.to_hex() if self.witness else None,
        }
        if self.witness is not None:
            out["witness_pauli"] = self.witness.to_pauli()
        if self.notes:
            out["notes"] = list(self.notes)
        if include_timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    @classmethod
    def from_json(cls, payload: dict, n: int) -> "DistanceCertificate":
        witness = None
        if payload.get("witness_a_hex") is not None:
            witness = ErrorVector(
                BitVector.from_hex(payload["witness_a_hex"], n),
                BitVector.from_hex(payload["witness_b_hex"], n),
            )
        return cls(
            kind=CertificateKind(payload["kind"]),
            value=int(payload["d"]),
            method=payload["method"],
            witness=witness,
            elapsed_ms=float(payload.get("elapsed_ms", 0.0)),
            notes=tuple(payload.get("notes", ())),
        )
