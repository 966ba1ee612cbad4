"""Cyclic characters of F_p(t): constant extensions and Kummer extensions.

Only tame (prime-to-p) characters exist here.  Each character knows how a
place of F_p(t) decomposes in the cyclic cover it cuts out.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from sympy import isprime, multiplicity

from .field import (
    Place,
    RationalFunction,
    parse_rational_function,
    places_of_degree,
    residue_field_order_of,
    unit_part,
    valuation,
)
from .qmodz import QmodZ, scale


class InsufficientPlacesError(LookupError):
    """Raised when a place search exhausts its degree bound."""


@dataclass(frozen=True)
class SplittingData:
    e: int
    f: int
    g: int

    @property
    def local_degree(self) -> int:
        return self.e * self.f

    def as_tuple(self):
        return (self.e, self.f, self.g)


def _order_mod_powers(c: int, p: int, n: int) -> int:
    """Order of c in F_p^x / (F_p^x)^n (requires n | p - 1)."""
    h = pow(c, (p - 1) // n, p)
    j, x = 1, h
    while x != 1:
        x = x * h % p
        j += 1
    return j


def kummer_order(rad: RationalFunction, n: int) -> int:
    """Order of the radicand in F_p(t)^x modulo n-th powers."""
    p = rad.p
    o = 1
    for v, k in rad.divisor.items():
        if not v.is_infinite:
            o = lcm(o, n // gcd(n, k))
    c = rad.num.lc * pow(rad.den.lc, -1, p) % p
    return lcm(o, _order_mod_powers(c, p, n))


@dataclass(frozen=True)
class CyclicCharacter:
    """A character of order n; ``frob`` for the constant kind, ``radicand`` for Kummer."""

    kind: str
    p: int
    order: int
    frob: QmodZ | None = None
    radicand: RationalFunction | None = None

    def __post_init__(self):
        n, p = self.order, self.p
        if n < 1:
            raise ValueError("character order must be positive")
        if gcd(n, p) != 1:
            raise ValueError(f"order {n} is not prime to p={p}")
        if self.kind == "constant":
            if self.frob is None or self.frob.order() != n:
                raise ValueError("frobenius image must have exact order n")
        elif self.kind == "kummer":
            if (p - 1) % n:
                raise ValueError(f"Kummer order {n} must divide p-1={p - 1}")
            if self.radicand is None or self.radicand.is_zero():
                raise ValueError("Kummer radicand must be nonzero")
            if self.radicand.p != p:
                raise ValueError("radicand over the wrong field")
            if kummer_order(self.radicand, n) != n:
                raise ValueError(f"radicand {self.radicand} is a proper power modulo {n}-th powers")
        else:
            raise ValueError(f"unknown character kind {self.kind!r}")

    @classmethod
    def constant(cls, p: int, n: int, frob: QmodZ | None = None) -> CyclicCharacter:
        return cls("constant", p, n, frob=frob if frob is not None else QmodZ(1, n))

    @classmethod
    def kummer(cls, p: int, n: int, radicand: RationalFunction) -> CyclicCharacter:
        if n == 1:
            return cls.trivial(p)
        return cls("kummer", p, n, radicand=radicand)

    @classmethod
    def trivial(cls, p: int) -> CyclicCharacter:
        return cls.constant(p, 1, QmodZ.zero())

    def is_trivial(self):
        return self.order == 1

    def __rmul__(self, k: int) -> CyclicCharacter:
        return scale_character(k, self)

    def to_json(self):
        if self.kind == "constant":
            return {"kind": "constant", "order": self.order, "frob": str(self.frob)}
        return {"kind": "kummer", "order": self.order, "radicand": str(self.radicand)}

    def __str__(self):
        if self.kind == "constant":
            return f"const[{self.frob}]"
        return f"kummer[{self.order}; {self.radicand}]"


def character_from_json(data: dict, p: int) -> CyclicCharacter:
    n = int(data["order"])
    if data["kind"] == "constant":
        frob = QmodZ.parse(data["frob"]) if "frob" in data else QmodZ(1, n)
        return CyclicCharacter.constant(p, n, frob)
    if data["kind"] == "kummer":
        return CyclicCharacter.kummer(p, n, parse_rational_function(data["radicand"], p))
    raise ValueError(f"unknown character kind {data['kind']!r}")


def scale_character(k: int, chi: CyclicCharacter) -> CyclicCharacter:
    n = chi.order
    if chi.kind == "constant":
        c = scale(k, chi.frob)
        return CyclicCharacter.constant(chi.p, c.order(), c)
    k %= n
    if k == 0:
        return CyclicCharacter.trivial(chi.p)
    # k.chi_{a,n} = chi_{a^k,n} = chi_{a^(k/d), n/d} with d = gcd(n, k)
    d = gcd(n, k)
    return CyclicCharacter.kummer(chi.p, n // d, chi.radicand ** (k // d))


def splitting_at(chi: CyclicCharacter, v: Place) -> SplittingData:
    """(e, f, g) of v in the cyclic cover cut out by chi."""
    n = chi.order
    if chi.kind == "constant":
        g = gcd(n, v.degree)
        return SplittingData(1, n // g, g)
    rad = chi.radicand
    k = valuation(rad, v)
    e = n // gcd(n, k)
    # after taking e-th roots the unit part only matters modulo (n/e)-th powers
    f = residue_field_order_of(v, unit_part(rad, v), n // e)
    return SplittingData(e, f, n // (e * f))


def local_order(chi: CyclicCharacter, v: Place) -> int:
    return splitting_at(chi, v).local_degree


def ramification_locus(chi: CyclicCharacter, search_degree: int | None = None) -> list[Place]:
    """Places with e > 1; for Kummer characters exactly where n does not divide v(radicand)."""
    if chi.kind == "constant":
        return []
    n = chi.order
    support = chi.radicand.divisor
    if search_degree is not None and any(v.degree > search_degree for v in support):
        raise InsufficientPlacesError(
            f"radicand has places of degree above the search bound {search_degree}"
        )
    return [v for v, k in support.items() if k % n]


def grunwald_constant_witnesses(p: int, q: int, e: int, t: int, search_degree: int):
    """Constant character of order q^e plus two places where it has local order q^t.

    The places are the first two (canonical order) whose degree has q-adic
    valuation exactly e - t.
    """
    if not isprime(q):
        raise ValueError(f"q={q} is not prime")
    if q == p:
        raise ValueError("q must differ from p")
    if not 1 <= t <= e:
        raise ValueError("need 1 <= t <= e")
    theta = CyclicCharacter.constant(p, q**e)
    found: list[Place] = []
    for d in range(1, search_degree + 1):
        if multiplicity(q, d) != e - t:
            continue
        for v in places_of_degree(p, d):
            found.append(v)
            if len(found) == 2:
                return theta, found[0], found[1]
    raise InsufficientPlacesError(
        f"insufficient places below degree bound {search_degree}: "
        f"need two places of degree with {q}-adic valuation {e - t}"
    )

