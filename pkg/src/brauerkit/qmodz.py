"""The group Q/Z with canonical representatives in [0, 1)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .field import WORD_MAX


@dataclass(frozen=True, order=True)
class QmodZ:
    a: int
    n: int

    def __init__(self, a: int, n: int = 1):
        if n == 0:
            raise ZeroDivisionError("zero denominator")
        if n < 0:
            a, n = -a, -n
        if n > WORD_MAX:
            raise OverflowError(f"denominator {n} exceeds machine-word range")
        a %= n
        g = gcd(a, n)
        if a == 0:
            a, n = 0, 1
        else:
            a, n = a // g, n // g
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "n", n)

    @classmethod
    def zero(cls):
        return cls(0, 1)

    @classmethod
    def parse(cls, text: str) -> QmodZ:
        num, _, den = text.strip().partition("/")
        return cls(int(num), int(den) if den else 1)

    @classmethod
    def from_fraction(cls, x: Fraction) -> QmodZ:
        return cls(x.numerator, x.denominator)

    def __add__(self, other: QmodZ) -> QmodZ:
        m = lcm(self.n, other.n)
        return QmodZ(self.a * (m // self.n) + other.a * (m // other.n), m)

    def __neg__(self) -> QmodZ:
        return QmodZ(-self.a, self.n)

    def __sub__(self, other: QmodZ) -> QmodZ:
        return self + (-other)

    def __rmul__(self, k: int) -> QmodZ:
        return scale(k, self)

    def is_zero(self) -> bool:
        return self.a == 0

    def __bool__(self):
        return self.a != 0

    def order(self) -> int:
        return self.n

    def __str__(self):
        return f"{self.a}/{self.n}"

    def __repr__(self):
        return f"QmodZ({self.a}/{self.n})"


def add(x: QmodZ, y: QmodZ) -> QmodZ:
    return x + y


def scale(k: int, x: QmodZ) -> QmodZ:
    # reduce k first so huge multipliers cannot overflow the numerator
    return QmodZ((k % x.n) * x.a, x.n)


def order(x: QmodZ) -> int:
    return x.n


def total(values) -> QmodZ:
    acc = QmodZ.zero()
    for x in values:
        acc = acc + x
    return acc
