"""Brauer classes of F_p(t) and of its cyclic covers, as local invariant vectors."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .characters import (
    CyclicCharacter,
    InsufficientPlacesError,
    splitting_at,
)
from .field import Place, RationalFunction, parse_place
from .qmodz import QmodZ, scale, total


class ReciprocityError(ValueError):
    pass


@dataclass(frozen=True)
class CoverPlace:
    """The index-th place of a cyclic cover lying over ``base``."""

    base: Place
    index: int

    @property
    def sort_key(self):
        return (self.base.sort_key, self.index)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __str__(self):
        return f"{self.base}#{self.index}"


@dataclass(frozen=True)
class GlobalBrauerClass:
    """Finite-support invariant vector with zero sum.

    ``over`` is None for classes of F_p(t) itself, otherwise the character
    whose cover carries the class (places are then :class:`CoverPlace`).
    """

    p: int
    invariants: tuple[tuple[Place | CoverPlace, QmodZ], ...] = ()
    over: CyclicCharacter | None = None

    def __post_init__(self):
        places = [v for v, _ in self.invariants]
        if len(set(places)) != len(places):
            raise ValueError("duplicate place in invariant data")
        if any(x.is_zero() for _, x in self.invariants):
            raise ValueError("stored invariants must be nonzero")
        if any(gcd(x.order(), self.p) != 1 for _, x in self.invariants):
            raise ValueError(f"invariant orders must be prime to p={self.p}")
        if not total(x for _, x in self.invariants).is_zero():
            raise ReciprocityError("reciprocity violated: invariants do not sum to 0")

    @classmethod
    def zero(cls, p: int) -> GlobalBrauerClass:
        return cls(p)

    @property
    def support(self):
        return [v for v, _ in self.invariants]

    def invariant(self, v) -> QmodZ:
        for w, x in self.invariants:
            if w == v:
                return x
        return QmodZ.zero()

    def is_zero(self):
        return not self.invariants

    def __add__(self, other: GlobalBrauerClass) -> GlobalBrauerClass:
        if other.p != self.p or other.over != self.over:
            raise ValueError("classes over different fields")
        acc = dict(self.invariants)
        for v, x in other.invariants:
            acc[v] = acc.get(v, QmodZ.zero()) + x
        return _make(self.p, acc, self.over)

    def __neg__(self):
        return scale_class(-1, self)

    def period_index(self) -> tuple[int, int]:
        return period_index(self)

    def to_json(self):
        data = {
            "base": {"p": self.p},
            "invariants": [{"place": str(v), "inv": str(x)} for v, x in self.invariants],
        }
        if self.over is not None:
            data["over"] = self.over.to_json()
        return data


def _make(p, mapping, over=None) -> GlobalBrauerClass:
    items = sorted(((v, x) for v, x in mapping.items() if not x.is_zero()), key=lambda vx: vx[0].sort_key)
    return GlobalBrauerClass(p, tuple(items), over)


def from_invariants(p: int, data) -> GlobalBrauerClass:
    data = list(data)
    places = [v for v, _ in data]
    if len(set(places)) != len(places):
        raise ValueError("duplicate place in invariant data")
    if not total(x for _, x in data).is_zero():
        raise ReciprocityError("reciprocity violated: invariants do not sum to 0")
    return _make(p, dict(data))


def class_from_json(data: dict) -> GlobalBrauerClass:
    p = int(data["base"]["p"])
    if "over" in data:
        raise ValueError("only classes of F_p(t) can be read back")
    return from_invariants(
        p, [(parse_place(row["place"], p), QmodZ.parse(row["inv"])) for row in data["invariants"]]
    )


def period_index(alpha: GlobalBrauerClass) -> tuple[int, int]:
    """Over a global field the period is the lcm of local orders and equals the index."""
    per = lcm(1, *(x.order() for _, x in alpha.invariants))
    return per, per


def scale_class(k: int, alpha: GlobalBrauerClass) -> GlobalBrauerClass:
    return _make(alpha.p, {v: scale(k, x) for v, x in alpha.invariants}, alpha.over)


def restrict(alpha: GlobalBrauerClass, chi: CyclicCharacter, search_degree: int | None = None) -> GlobalBrauerClass:
    """Restriction to the cyclic cover of chi: each of the g places over v gets e*f*inv_v."""
    if alpha.over is not None:
        raise ValueError("restriction is only implemented from F_p(t)")
    if chi.p != alpha.p:
        raise ValueError("character and class over different fields")
    out = {}
    for v, x in alpha.invariants:
        if search_degree is not None and v.degree > search_degree:
            raise InsufficientPlacesError(
                f"support place {v} has degree {v.degree} above the search bound {search_degree}"
            )
        sd = splitting_at(chi, v)
        y = scale(sd.e * sd.f, x)
        for i in range(1, sd.g + 1):
            out[CoverPlace(v, i)] = y
    return _make(alpha.p, out, chi)


def _check_symbol_char(chi: CyclicCharacter):
    if chi.kind != "constant":
        raise NotImplementedError("symbol invariants implemented for constant characters only")


def symbol_residue(chi: CyclicCharacter, f: RationalFunction, v: Place) -> QmodZ:
    """Residue of (chi, f) at v: v(f) times chi restricted to k(v), i.e. v(f)*deg(v)*c."""
    _check_symbol_char(chi)
    k = f.divisor.get(v, 0)
    return scale(k * v.degree, chi.frob)


def symbol(chi: CyclicCharacter, f: RationalFunction) -> GlobalBrauerClass:
    _check_symbol_char(chi)
    if f.is_zero():
        raise ValueError("symbol with zero function")
    if chi.p != f.p:
        raise ValueError("character and function over different fields")
    return _make(chi.p, {v: scale(k * v.degree, chi.frob) for v, k in f.divisor.items()})


@dataclass(frozen=True)
class SymbolSum:
    """A formal sum of constant-character symbols (chi, f)."""

    p: int
    terms: tuple[tuple[CyclicCharacter, RationalFunction], ...] = ()

    def __post_init__(self):
        for chi, f in self.terms:
            _check_symbol_char(chi)
            if chi.p != self.p or f.p != self.p:
                raise ValueError("symbol terms over different fields")

    @classmethod
    def single(cls, chi, f):
        return cls(chi.p, ((chi, f),))

    def __add__(self, other: SymbolSum) -> SymbolSum:
        return SymbolSum(self.p, self.terms + other.terms)

    def support(self) -> list[Place]:
        places = set()
        for _, f in self.terms:
            places.update(f.divisor)
        return sorted(places)

    def residue(self, v: Place) -> QmodZ:
        return total(symbol_residue(chi, f, v) for chi, f in self.terms)

    def residue_table(self) -> list[tuple[Place, QmodZ]]:
        rows = ((v, self.residue(v)) for v in self.support())
        return [(v, x) for v, x in rows if not x.is_zero()]

    def to_class(self) -> GlobalBrauerClass:
        acc = GlobalBrauerClass.zero(self.p)
        for chi, f in self.terms:
            acc = acc + symbol(chi, f)
        return acc

    def to_json(self):
        return {
            "base": {"p": self.p},
            "symbols": [{"chi": chi.to_json(), "f": str(f)} for chi, f in self.terms],
        }


def residues(alpha: SymbolSum, v: Place) -> QmodZ:
    return alpha.residue(v)


def class_from_residues(alpha: SymbolSum) -> GlobalBrauerClass:
    """Rebuild the class from its residue table; valid on P^1 where Br(P^1_{F_p}) = 0."""
    return from_invariants(alpha.p, alpha.residue_table())


__all__ = [
    "CoverPlace",
    "GlobalBrauerClass",
    "ReciprocityError",
    "SymbolSum",
    "class_from_json",
    "class_from_residues",
    "from_invariants",
    "period_index",
    "residues",
    "restrict",
    "scale_class",
    "symbol",
    "symbol_residue",
]
