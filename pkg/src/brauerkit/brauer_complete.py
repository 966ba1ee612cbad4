"""Classes over the completed field as Witt pairs alpha0 + (chi0, pi).

The uniformizer is symbolic: every computation happens on the residue
function field F_p(t).
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from sympy import isprime, multiplicity

from .brauer_global import GlobalBrauerClass, class_from_json, restrict, scale_class
from .characters import CyclicCharacter, character_from_json, scale_character


@dataclass(frozen=True)
class CompletedClass:
    alpha0: GlobalBrauerClass
    chi0: CyclicCharacter
    pi: str = "pi"

    def __post_init__(self):
        if self.alpha0.over is not None:
            raise ValueError("alpha0 must be a class of F_p(t)")
        if self.alpha0.p != self.chi0.p:
            raise ValueError("alpha0 and chi0 over different fields")

    @property
    def p(self):
        return self.alpha0.p

    @classmethod
    def zero(cls, p: int) -> CompletedClass:
        return cls(GlobalBrauerClass.zero(p), CyclicCharacter.trivial(p))

    def is_zero(self):
        return self.alpha0.is_zero() and self.chi0.is_trivial()

    def to_json(self):
        return {"alpha0": self.alpha0.to_json(), "chi0": self.chi0.to_json(), "pi": self.pi}


def completed_from_json(data: dict) -> CompletedClass:
    alpha0 = class_from_json(data["alpha0"])
    chi0 = character_from_json(data["chi0"], alpha0.p)
    return CompletedClass(alpha0, chi0, data.get("pi", "pi"))


def period(gamma: CompletedClass) -> int:
    # the Witt sequence splits, so the order of a sum is the lcm of the orders
    return lcm(gamma.alpha0.period_index()[0], gamma.chi0.order)


def index(gamma: CompletedClass, search_degree: int | None = None) -> int:
    """Nakayama-Witt: |chi0| times the index of alpha0 on the cover cut out by chi0."""
    restricted = restrict(gamma.alpha0, gamma.chi0, search_degree)
    return gamma.chi0.order * restricted.period_index()[1]


def scale_completed(k: int, gamma: CompletedClass) -> CompletedClass:
    return CompletedClass(scale_class(k, gamma.alpha0), scale_character(k, gamma.chi0), gamma.pi)


@dataclass(frozen=True)
class Certificate:
    q: int
    e: int
    i: int | None
    per: int
    ind: int
    ind_q: int
    verdict: str
    branch: str

    @property
    def t(self):
        return None if self.i is None else 2 * self.e - self.i

    def to_json(self):
        return {
            "verdict": self.verdict,
            "branch": self.branch,
            "q": self.q,
            "e": self.e,
            "i": self.i,
            "t": self.t,
            "per": self.per,
            "ind": self.ind,
            "ind_q": self.ind_q,
        }


def _q_exponent(q, n):
    e = multiplicity(q, n)
    return e if q**e == n else None


def certify_indecomposable(gamma: CompletedClass, q: int, search_degree: int | None = None) -> Certificate:
    """Sufficient test for indecomposability of the underlying division algebra.

    Period equal to index (above 1) is decisive on its own.  Otherwise we
    apply Saltman's criterion ind(q.gamma) = ind(gamma)/q with the index in
    [q^e, q^(2e-1)].  Failing both gives "inconclusive", never "decomposable".
    """
    if not isprime(q):
        raise ValueError(f"q={q} is not prime")
    per = period(gamma)
    e = _q_exponent(q, per)
    if e is None:
        raise ValueError(f"period {per} is not a q-power for q={q}")
    ind = index(gamma, search_degree)
    ind_q = index(scale_completed(q, gamma), search_degree)
    i = _q_exponent(q, ind)
    if ind == per and ind > 1:
        verdict, branch = "indecomposable", "period=index"
    elif e >= 1 and ind_q * q == ind and q**e <= ind <= q ** (2 * e - 1):
        verdict, branch = "indecomposable", "saltman"
    else:
        verdict, branch = "inconclusive", "none"
    return Certificate(q, e, i, per, ind, ind_q, verdict, branch)
