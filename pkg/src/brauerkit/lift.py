"""The splitting map s from the completed field back to K(X), for X = P^1.

A lifted class is bookkeeping: the Witt pair it came from plus the V-lifts
of the places involved.  Its index equals that of the source (the splitting
map preserves the index); ``index_report`` cross-checks this with an
explicit splitting-field bound built from constant extensions.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .brauer_complete import CompletedClass, index, period
from .brauer_global import GlobalBrauerClass
from .characters import CyclicCharacter, ramification_locus
from .field import Place, Poly, format_poly
from .qmodz import scale


@dataclass(frozen=True)
class LiftedPlace:
    """A mark on P^1 over Z_p: integer monic polynomial, or the line at infinity."""

    p: int
    coeffs: tuple[int, ...] | None

    @property
    def is_infinite(self):
        return self.coeffs is None

    @property
    def degree(self) -> int:
        return 1 if self.coeffs is None else len(self.coeffs) - 1

    def reduce(self) -> Place:
        if self.coeffs is None:
            return Place.infinity(self.p)
        return Place(self.p, Poly(self.p, self.coeffs))

    def __str__(self):
        if self.coeffs is None:
            return "inf"
        # digits lie in {0..p-1}, so the F_p notation reads the same over Z
        return format_poly(Poly(self.p, self.coeffs))


@dataclass(frozen=True)
class VLift:
    """Coefficientwise lift with digits in {0, ..., p-1}."""

    p: int

    def lift_place(self, v: Place) -> LiftedPlace:
        if v.p != self.p:
            raise ValueError("place over the wrong residue field")
        if v.is_infinite:
            return LiftedPlace(self.p, None)
        return LiftedPlace(self.p, tuple(v.poly.coeffs))


@dataclass(frozen=True)
class LiftedClass:
    source: CompletedClass
    vlift: VLift
    lifted_support: tuple[LiftedPlace, ...]

    def to_json(self):
        return {
            "source": self.source.to_json(),
            "lifted_support": [str(w) for w in self.lifted_support],
        }


def lift_class(gamma: CompletedClass, vlift: VLift | None = None) -> LiftedClass:
    vlift = vlift or VLift(gamma.p)
    places = set(gamma.alpha0.support) | set(ramification_locus(gamma.chi0))
    support = tuple(vlift.lift_place(v) for v in sorted(places))
    return LiftedClass(gamma, vlift, support)


def restrict_back(lifted: LiftedClass) -> CompletedClass:
    return lifted.source


def constant_extension_splits(alpha: GlobalBrauerClass, n: int) -> bool:
    """Whether the degree-n constant extension kills alpha (local degree n/gcd(n, deg v))."""
    return all(scale(n // gcd(n, v.degree), x).is_zero() for v, x in alpha.invariants)


def constant_splitting_bound(gamma: CompletedClass) -> int:
    """Smallest degree of a constant extension containing the field of chi0 that splits gamma."""
    step = gamma.chi0.order
    per = gamma.alpha0.period_index()[0]
    cap = per * lcm(1, *(v.degree for v in gamma.alpha0.support))
    for m in range(1, cap + 1):
        if constant_extension_splits(gamma.alpha0, step * m):
            return step * m
    raise AssertionError("a constant extension of degree |chi0|*cap always splits")


@dataclass(frozen=True)
class IndexReport:
    ind_lifted: int
    ind_completed: int
    per: int
    upper_bound: int | None
    upper_bound_check: str
    note: str = ""

    def to_json(self):
        data = {
            "ind": self.ind_lifted,
            "ind_completed": self.ind_completed,
            "per": self.per,
            "upper_bound": self.upper_bound,
            "upper_bound_check": self.upper_bound_check,
        }
        if self.note:
            data["note"] = self.note
        return data


def index_report(lifted: LiftedClass, search_degree: int | None = None,
                 xi: CyclicCharacter | None = None) -> IndexReport:
    """Index of the lifted class plus the splitting-field upper bound.

    With ``xi`` (a constant character whose field contains that of chi0)
    the bound is [L:K(t)] * |xi|/|chi0| = |xi|, valid when the constant
    extension of degree |xi| kills alpha0.  Without it, the bound is the
    smallest constant splitting extension containing L.
    """
    gamma = lifted.source
    ind = index(gamma, search_degree)
    per = period(gamma)
    chi0 = gamma.chi0
    if chi0.kind != "constant":
        return IndexReport(ind, ind, per, None, "skipped",
                           "upper bound needs a constant ramification character")
    if xi is not None:
        if xi.kind != "constant" or xi.order % chi0.order:
            return IndexReport(ind, ind, per, None, "fail",
                               "xi does not define an extension containing L")
        if not constant_extension_splits(gamma.alpha0, xi.order):
            return IndexReport(ind, ind, per, None, "fail",
                               "constant extension of xi does not split alpha0")
        bound = chi0.order * (xi.order // chi0.order)
    else:
        bound = constant_splitting_bound(gamma)
    # the lifted index equals the completed index, so the bound must match it exactly
    check = "pass" if bound == ind else "fail"
    return IndexReport(ind, ind, per, bound, check)


def lift_report(lifted: LiftedClass, report: IndexReport) -> dict:
    data = lifted.to_json()
    data.update(report.to_json())
    return data
