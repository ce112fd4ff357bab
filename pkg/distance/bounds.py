"""
Parameter bounds for [[n, k, d]] codes.

hamming_bound_ok: sum_{j <= (d-1)//2} C(n, j) 3^j 2^k <= 2^n, exact integers.
kl_bound_ok:      n >= k + 2d - 2.
"""

from dataclasses import dataclass
from math import comb


def hamming_volume(n: int, k: int, d: int) -> int:
    t = max(0, (d - 1) // 2)
    return sum(comb(n, j) * 3 ** j for j in range(t + 1)) << k


def hamming_bound_ok(n: int, k: int, d: int) -> bool:
    return hamming_volume(n, k, d) <= 1 << n


def hamming_d3_closed_form(n: int, k: int) -> bool:
    """n - k >= ceil(log2(3n + 1))"""
    return n - k >= (3 * n).bit_length()


def kl_bound_ok(n: int, k: int, d: int) -> bool:
    return n >= k + 2 * d - 2


def is_perfect(n: int, k: int, d: int) -> bool:
    return d % 2 == 1 and hamming_volume(n, k, d) == 1 << n


@dataclass(frozen=True)
class BoundCheck:
    """Bound results for one parameter triple"""
    hamming: bool
    kl: bool
    perfect: bool
    hamming_required: bool     # d in {3, 5}: a violation is an error

    def to_dict(self) -> dict:
        return {"hamming": self.hamming, "kl": self.kl, "perfect": self.perfect}


def check_bounds(n: int, k: int, d: int) -> BoundCheck:
    return BoundCheck(
        hamming=hamming_bound_ok(n, k, d),
        kl=kl_bound_ok(n, k, d),
        perfect=is_perfect(n, k, d),
        hamming_required=d in (3, 5),
    )
