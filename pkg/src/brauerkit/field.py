"""Prime fields, polynomials over F_p and the places of F_p(t).

Polynomials are stored with ascending coefficients.  Factorization and
irreducibility testing are delegated to :mod:`sympy.polys.galoistools`;
everything else here is small enough to do by hand.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from sympy import divisors, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_factor,
    gf_gcd,
    gf_irreducible_p,
    gf_pow_mod,
)

WORD_MAX = 2**63 - 1


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2 or not isprime(self.p):
            raise ValueError(f"{self.p!r} is not a prime")
        if self.p > WORD_MAX:
            raise OverflowError("prime exceeds machine-word range")

    def to_json(self):
        return {"p": self.p}


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class Poly:
    """Polynomial in t over F_p, ascending coefficients, no trailing zeros."""

    p: int
    coeffs: tuple[int, ...]

    def __init__(self, p: int, coeffs=()):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", _strip(int(c) % p for c in coeffs))

    # sympy's galoistools wants descending lists
    def _dense(self):
        return list(reversed(self.coeffs))

    @classmethod
    def _from_dense(cls, p, dense):
        return cls(p, reversed([int(c) for c in dense]))

    @classmethod
    def t(cls, p):
        return cls(p, (0, 1))

    @classmethod
    def const(cls, p, c):
        return cls(p, (c,))

    @classmethod
    def from_int(cls, p, code):
        """Inverse of :attr:`code`: base-p digits become coefficients."""
        digits = []
        while code:
            code, r = divmod(code, p)
            digits.append(r)
        return cls(p, digits)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def code(self) -> int:
        """Integer whose base-p digits are the coefficients; orders same-degree polys."""
        return sum(c * self.p**i for i, c in enumerate(self.coeffs))

    def is_zero(self):
        return not self.coeffs

    def is_monic(self):
        return self.lc == 1

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        inv = pow(self.lc, -1, self.p)
        return Poly(self.p, (c * inv for c in self.coeffs))

    def _check(self, other):
        if isinstance(other, int):
            return Poly.const(self.p, other)
        if other.p != self.p:
            raise ValueError("polynomials over different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Poly(self.p, (x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.p, (-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(self.p, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Poly.const(self.p, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quo = [0] * max(len(rem) - len(other.coeffs) + 1, 0)
        inv = pow(other.lc, -1, self.p)
        d = other.degree
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i] * inv % self.p
            if c:
                quo[i - d] = c
                for j, b in enumerate(other.coeffs):
                    rem[i - d + j] = (rem[i - d + j] - c * b) % self.p
        return Poly(self.p, quo), Poly(self.p, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def gcd(self, other) -> Poly:
        other = self._check(other)
        g = gf_gcd(self._dense(), other._dense(), self.p, ZZ)
        return Poly._from_dense(self.p, g)

    def pow_mod(self, k: int, modulus: Poly) -> Poly:
        r = gf_pow_mod(self._dense(), k, modulus._dense(), self.p, ZZ)
        return Poly._from_dense(self.p, r)

    def is_irreducible(self) -> bool:
        if self.degree < 1:
            return False
        return bool(gf_irreducible_p(self.monic()._dense(), self.p, ZZ))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({self.p}, {format_poly(self)!r})"


def format_poly(f: Poly, var: str = "t") -> str:
    """Conventional descending notation, e.g. ``t^3+2t+1``; zero is ``0``."""
    if f.is_zero():
        return "0"
    terms = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
            continue
        mono = var if i == 1 else f"{var}^{i}"
        terms.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(terms)


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(t(?:\s*\^\s*(\d+))?)?")


def parse_poly(text: str, p: int) -> Poly:
    """Parse ``t^3+t+1``, ``2t^2+t-1``, ``2*t`` and plain constants."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or not (m.group(2) or m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r}")
        if pos > 0 and not m.group(1):
            raise ValueError(f"cannot parse polynomial {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        c = int(m.group(2)) if m.group(2) else 1
        if m.group(3):
            e = int(m.group(4)) if m.group(4) else 1
        else:
            e = 0
        coeffs[e] = coeffs.get(e, 0) + sign * c
        pos = m.end()
    deg = max(coeffs)
    return Poly(p, (coeffs.get(i, 0) for i in range(deg + 1)))


def factor(f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities, ordered by (degree, code).

    The leading coefficient of ``f`` is the missing constant.
    """
    if f.is_zero():
        raise ValueError("zero has no factorization")
    _, pairs = gf_factor(f._dense(), f.p, ZZ)
    out = [(Poly._from_dense(f.p, g), int(k)) for g, k in pairs]
    out.sort(key=lambda gk: (gk[0].degree, gk[0].code))
    return out


@dataclass(frozen=True)
class Place:
    """A closed point of P^1 over F_p: a monic irreducible, or infinity (poly None)."""

    p: int
    poly: Poly | None = None

    def __post_init__(self):
        if self.poly is not None:
            if self.poly.p != self.p:
                raise ValueError("place polynomial over the wrong field")
            if not self.poly.is_monic() or not self.poly.is_irreducible():
                raise ValueError(f"{self.poly} is not monic irreducible over F_{self.p}")

    @classmethod
    def infinity(cls, p):
        return cls(p, None)

    @classmethod
    def _trusted(cls, p, poly):
        # caller has already established monic irreducibility
        v = object.__new__(cls)
        object.__setattr__(v, "p", p)
        object.__setattr__(v, "poly", poly)
        return v

    @property
    def is_infinite(self) -> bool:
        return self.poly is None

    @property
    def degree(self) -> int:
        return 1 if self.poly is None else self.poly.degree

    @property
    def sort_key(self):
        if self.poly is None:
            return (0, 0, 0)
        return (1, self.poly.degree, self.poly.code)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __str__(self):
        return "inf" if self.poly is None else format_poly(self.poly)

    def __repr__(self):
        return f"Place({self})"


def parse_place(text: str, p: int) -> Place:
    s = text.strip()
    if s in ("inf", "oo", "infinity"):
        return Place.infinity(p)
    f = parse_poly(s, p)
    if f.degree < 1 or not f.is_monic():
        raise ValueError(f"{text!r} is not a monic polynomial of positive degree")
    if not f.is_irreducible():
        raise ValueError(f"{text!r} is not irreducible over F_{p}")
    return Place(p, f)


def monic_polys(p: int, d: int) -> Iterator[Poly]:
    """All monic polynomials of degree d, in increasing code order."""
    lead = p**d
    for low in range(lead):
        yield Poly.from_int(p, lead + low)


def places_of_degree(p: int, d: int) -> Iterator[Place]:
    """Lazily enumerate the places of exact degree d in canonical order."""
    if d == 1:
        yield Place.infinity(p)
    yield from finite_places_of_degree(p, d)


def finite_places_of_degree(p: int, d: int) -> Iterator[Place]:
    for f in monic_polys(p, d):
        if f.is_irreducible():
            yield Place._trusted(p, f)


def places_up_to(p: int, d: int) -> list[Place]:
    if d < 1:
        raise ValueError("degree bound must be positive")
    out = []
    for k in range(1, d + 1):
        out.extend(places_of_degree(p, k))
    return out


@dataclass(frozen=True)
class RationalFunction:
    """num/den in lowest terms with monic denominator."""

    num: Poly
    den: Poly

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.const(num.p, 1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.p != den.p:
            raise ValueError("numerator and denominator over different fields")
        g = num.gcd(den)
        if g.degree > 0:
            num, den = num // g, den // g
        inv = pow(den.lc, -1, den.p)
        object.__setattr__(self, "num", num * inv)
        object.__setattr__(self, "den", den * inv)

    @property
    def p(self):
        return self.num.p

    def is_zero(self):
        return self.num.is_zero()

    def __mul__(self, other: RationalFunction) -> RationalFunction:
        return RationalFunction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: RationalFunction) -> RationalFunction:
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int) -> RationalFunction:
        if k < 0:
            return RationalFunction(self.den**-k, self.num**-k)
        return RationalFunction(self.num**k, self.den**k)

    @cached_property
    def divisor(self) -> dict[Place, int]:
        """Nonzero valuations at every place, infinity included."""
        if self.is_zero():
            raise ValueError("valuation of zero undefined")
        div: dict[Place, int] = {}
        for g, k in factor(self.num) if self.num.degree > 0 else []:
            div[Place._trusted(self.p, g)] = k
        for g, k in factor(self.den) if self.den.degree > 0 else []:
            div[Place._trusted(self.p, g)] = -k
        v_inf = self.den.degree - self.num.degree
        if v_inf:
            div[Place.infinity(self.p)] = v_inf
        return dict(sorted(div.items()))

    def __str__(self):
        if self.den.degree == 0:
            return format_poly(self.num)
        return f"({format_poly(self.num)})/({format_poly(self.den)})"


def parse_rational_function(text: str, p: int) -> RationalFunction:
    s = text.replace(" ", "")
    depth = 0
    split = None
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            split = i
    if split is None:
        return RationalFunction(parse_poly(s.strip("()"), p))
    num, den = s[:split], s[split + 1:]
    return RationalFunction(parse_poly(num.strip("()"), p), parse_poly(den.strip("()"), p))


def valuation(f: RationalFunction, v: Place) -> int:
    if f.is_zero():
        raise ValueError("valuation of zero undefined")
    if v.is_infinite:
        return f.den.degree - f.num.degree
    return _poly_valuation(f.num, v.poly) - _poly_valuation(f.den, v.poly)


def _poly_valuation(f: Poly, pi: Poly) -> int:
    k = 0
    while True:
        q, r = divmod(f, pi)
        if not r.is_zero():
            return k
        f, k = q, k + 1


def residue_class(f: RationalFunction, v: Place) -> Poly:
    """Image in k(v) of a v-adic unit, reduced modulo the place polynomial.

    At infinity the residue of a unit is lc(num)/lc(den), returned as a constant.
    """
    if valuation(f, v) != 0:
        raise ValueError(f"{f} is not a unit at {v}")
    p = f.p
    if v.is_infinite:
        return Poly.const(p, f.num.lc * pow(f.den.lc, -1, p))
    den = f.den % v.poly
    # den is invertible mod an irreducible: den^(Q-2) is its inverse
    q_order = p**v.degree
    den_inv = den.pow_mod(q_order - 2, v.poly)
    return (f.num * den_inv) % v.poly


def unit_part(f: RationalFunction, v: Place) -> RationalFunction:
    """f divided by uniformizer^v(f); the uniformizer is the place polynomial, 1/t at infinity."""
    k = valuation(f, v)
    p = f.p
    if v.is_infinite:
        pi = RationalFunction(Poly.const(p, 1), Poly.t(p))
    else:
        pi = RationalFunction(v.poly)
    return f / pi**k


def residue_field_order_of(v: Place, u: Poly | RationalFunction, n: int) -> int:
    """Order of u in k(v)^x / (k(v)^x)^n, for n dividing |k(v)^x|."""
    p = v.p
    q_minus_1 = p**v.degree - 1
    if n < 1 or q_minus_1 % n:
        raise ValueError(f"no n-th roots structure: {n} does not divide {q_minus_1}")
    if isinstance(u, RationalFunction):
        ubar = residue_class(u, v)
    elif v.is_infinite:
        ubar = Poly.const(p, u.lc)
    else:
        ubar = u % v.poly
    if ubar.is_zero():
        raise ValueError(f"{u} vanishes at {v}")
    # k(inf) = F_p: constants reduced modulo t
    modulus = Poly.t(p) if v.is_infinite else v.poly
    for j in divisors(n):
        if ubar.pow_mod(j * q_minus_1 // n, modulus) == Poly.const(p, 1):
            return int(j)
    raise AssertionError("unreachable: j = n always works")
