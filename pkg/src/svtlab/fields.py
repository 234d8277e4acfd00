"""Coefficient field selection for the exact linear algebra kernels.

The default field is the rationals (ranks computed by fraction-free
integer elimination, so no floating point anywhere).  Finite prime
fields are available for speed and for characteristic experiments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """characteristic 0 means the rationals; otherwise a prime p gives GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(
                f"field characteristic must be 0 or a prime, got {self.characteristic}"
            )

    @property
    def is_rationals(self) -> bool:
        return self.characteristic == 0

    def label(self) -> str:
        return "rationals" if self.is_rationals else f"GF({self.characteristic})"

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        if text in ("rationals", "QQ", "Q", "0"):
            return cls(0)
        return cls(int(text))

    # -- element arithmetic ------------------------------------------------
    # Elements are Fraction for characteristic 0 and plain ints in [0, p)
    # for GF(p).  The handful of helpers below is all the dense solvers need.

    def of(self, n: int):
        if self.is_rationals:
            return Fraction(n)
        return n % self.characteristic

    @property
    def zero(self):
        return self.of(0)

    @property
    def one(self):
        return self.of(1)

    def add(self, a, b):
        if self.is_rationals:
            return a + b
        return (a + b) % self.characteristic

    def sub(self, a, b):
        if self.is_rationals:
            return a - b
        return (a - b) % self.characteristic

    def mul(self, a, b):
        if self.is_rationals:
            return a * b
        return (a * b) % self.characteristic

    def neg(self, a):
        if self.is_rationals:
            return -a
        return (-a) % self.characteristic

    def inv(self, a):
        if self.is_rationals:
            return 1 / a
        return pow(a, self.characteristic - 2, self.characteristic)


RATIONALS = FieldSpec(0)
