"""
Method selection for distance certification.

    auto        oracle if n <= 8, exact if n + k <= ceiling, else bounded:7
    exact       coset enumeration
    oracle      all 4^n Paulis
    bounded:W   weight enumeration up to W
"""

from dataclasses import dataclass
from typing import Optional

from config import AUTO_BOUNDED_W_MAX, DEFAULT_WORKERS, EXACT_CEILING, ORACLE_MAX_N
from distance.bounded import distance_bounded
from distance.certificate import DistanceCertificate
from distance.exact import distance_exact
from distance.oracle import distance_oracle
from errors import DistanceInputError
from stabilizer.code import StabilizerCode


@dataclass(frozen=True)
class MethodSpec:
    name: str                  # auto | exact | oracle | bounded
    w_max: Optional[int] = None

    def __str__(self) -> str:
        return f"bounded:{self.w_max}" if self.name == "bounded" else self.name


def parse_method(text: str) -> MethodSpec:
    text = text.strip().lower()
    if text in ("auto", "exact", "oracle"):
        return MethodSpec(text)
    if text.startswith("bounded"):
        _, _, w = text.partition(":")
        try:
            w_max = int(w) if w else AUTO_BOUNDED_W_MAX
        except ValueError:
            raise DistanceInputError(f"bad weight in method {text!r}") from None
        if w_max < 1:
            raise DistanceInputError(f"bounded weight must be >= 1, got {w_max}")
        return MethodSpec("bounded", w_max)
    raise DistanceInputError(f"unknown method {text!r} (auto, exact, oracle, bounded:W)")


def resolve_method(code: StabilizerCode, method: MethodSpec, ceiling: int = EXACT_CEILING,
                   auto_w_max: int = AUTO_BOUNDED_W_MAX) -> MethodSpec:
    if method.name != "auto":
        return method
    if code.n <= ORACLE_MAX_N:
        return MethodSpec("oracle")
    if code.n + code.k <= ceiling:
        return MethodSpec("exact")
    return MethodSpec("bounded", auto_w_max)


def certify(code: StabilizerCode, method="auto", workers: int = DEFAULT_WORKERS,
            ceiling: int = EXACT_CEILING, auto_w_max: int = AUTO_BOUNDED_W_MAX) -> DistanceCertificate:
    spec = parse_method(method) if isinstance(method, str) else method
    spec = resolve_method(code, spec, ceiling, auto_w_max)
    if spec.name == "oracle":
        return distance_oracle(code)
    if spec.name == "exact":
        return distance_exact(code, ceiling=ceiling, workers=workers)
    return distance_bounded(code, spec.w_max, workers=workers)
