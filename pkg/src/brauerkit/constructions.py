"""Generators for indecomposable classes and noncrossed-product parameters."""
from __future__ import annotations

from dataclasses import dataclass

from sympy import isprime, multiplicity, n_order

from .brauer_complete import Certificate, CompletedClass, certify_indecomposable, scale_completed, index
from .brauer_global import SymbolSum, from_invariants
from .characters import (
    CyclicCharacter,
    InsufficientPlacesError,
    grunwald_constant_witnesses,
    scale_character,
)
from .field import Place, RationalFunction, finite_places_of_degree
from .lift import IndexReport, LiftedClass, index_report, lift_class, lift_report
from .qmodz import QmodZ


class ConstraintError(ValueError):
    """An input violates a stated inequality; the message names it."""


def default_search_degree(q: int, e: int) -> int:
    return 2 * q**e * e


def check_primes(p: int, q: int):
    if not isprime(p):
        raise ConstraintError(f"p={p} must be prime")
    if not isprime(q):
        raise ConstraintError(f"q={q} must be prime")
    if q == p:
        raise ConstraintError("q must differ from p")


@dataclass(frozen=True)
class IndecomposableSpec:
    q: int
    e: int
    i: int

    def __post_init__(self):
        if not isprime(self.q):
            raise ConstraintError(f"q={self.q} must be prime")
        if self.e < 1:
            raise ConstraintError(f"1 <= e violated (e={self.e})")
        if self.i < self.e:
            raise ConstraintError(f"e <= i violated (e={self.e}, i={self.i})")
        if self.i > 2 * self.e - 1:
            raise ConstraintError(f"i <= 2e-1 violated (e={self.e}, i={self.i})")

    @property
    def t(self) -> int:
        return 2 * self.e - self.i


@dataclass(frozen=True)
class IndecomposableResult:
    p: int
    spec: IndecomposableSpec
    gamma: CompletedClass
    certificate: Certificate
    lifted: LiftedClass
    report: IndexReport
    witnesses: tuple[Place, Place]

    def to_json(self):
        return {
            "p": self.p,
            "q": self.spec.q,
            "e": self.spec.e,
            "i": self.spec.i,
            "t": self.spec.t,
            "witnesses": [str(v) for v in self.witnesses],
            "class": self.gamma.to_json(),
            "per": self.certificate.per,
            "ind": self.certificate.ind,
            "certificate": self.certificate.to_json(),
            "lift": lift_report(self.lifted, self.report),
        }


def build_indecomposable(p: int, spec: IndecomposableSpec, search_degree: int | None = None) -> IndecomposableResult:
    """alpha0 = +-1/q^e at two places where a constant theta0 of order q^e has local order q^t."""
    check_primes(p, spec.q)
    q, e, t = spec.q, spec.e, spec.t
    sd = search_degree or default_search_degree(q, e)
    theta0, v1, v2 = grunwald_constant_witnesses(p, q, e, t, sd)
    alpha0 = from_invariants(p, [(v1, QmodZ(1, q**e)), (v2, QmodZ(-1, q**e))])
    gamma = CompletedClass(alpha0, theta0)
    cert = certify_indecomposable(gamma, q, sd)
    lifted = lift_class(gamma)
    return IndecomposableResult(p, spec, gamma, cert, lifted, index_report(lifted, sd), (v1, v2))


@dataclass(frozen=True)
class RemarkResult:
    p: int
    q: int
    e: int
    t: int
    x0: Place
    xi: CyclicCharacter
    symbols: SymbolSum
    gamma: CompletedClass
    residue_table: tuple[tuple[Place, QmodZ], ...]
    ind_q: int
    certificate: Certificate
    lifted: LiftedClass
    report: IndexReport

    def to_json(self):
        return {
            "p": self.p,
            "q": self.q,
            "e": self.e,
            "t": self.t,
            "x0": str(self.x0),
            "xi": self.xi.to_json(),
            "residues": [{"place": str(v), "residue": str(x), "order": x.order()}
                         for v, x in self.residue_table],
            "class": self.gamma.to_json(),
            "ind_q": self.ind_q,
            "certificate": self.certificate.to_json(),
            "lift": lift_report(self.lifted, self.report),
        }


def first_place_of_degree(p: int, d: int, search_degree: int) -> Place:
    if d > search_degree:
        raise InsufficientPlacesError(f"no place of degree {d} below degree bound {search_degree}")
    for v in finite_places_of_degree(p, d):
        return v
    raise InsufficientPlacesError(f"no finite place of degree {d} over F_{p}")


def build_remark_p1(q: int, e: int, t: int, p: int, search_degree: int | None = None) -> RemarkResult:
    """alpha0 = (xi, pi_x0) with xi constant of order q^(2e-t), x0 of degree q^(e-t), theta0 = q^(e-t) xi."""
    check_primes(p, q)
    if not 1 <= t <= e:
        raise ConstraintError(f"1 <= t <= e violated (e={e}, t={t})")
    sd = search_degree or default_search_degree(q, e)
    x0 = first_place_of_degree(p, q ** (e - t), sd)
    xi = CyclicCharacter.constant(p, q ** (2 * e - t))
    symbols = SymbolSum.single(xi, RationalFunction(x0.poly))
    alpha0 = symbols.to_class()
    theta0 = scale_character(q ** (e - t), xi)
    gamma = CompletedClass(alpha0, theta0)
    lifted = lift_class(gamma)
    return RemarkResult(
        p, q, e, t, x0, xi, symbols, gamma,
        residue_table=tuple(symbols.residue_table()),
        ind_q=index(scale_completed(q, gamma), sd),
        certificate=certify_indecomposable(gamma, q, sd),
        lifted=lifted,
        report=index_report(lifted, sd, xi=xi),
    )


def ncp_parameters(q: int, p: int, m0: int = 1) -> tuple[int, int]:
    """(r, s): q-adic valuations of p^m0 - 1 and of p^(m0 d) - 1, d = ord of p^m0 mod q^(r+1)."""
    check_primes(p, q)
    if m0 < 1:
        raise ConstraintError(f"m0 >= 1 violated (m0={m0})")
    base = p**m0
    r = multiplicity(q, base - 1)
    d = n_order(base, q ** (r + 1))
    s = multiplicity(q, base**d - 1)
    return int(r), int(s)


@dataclass(frozen=True)
class NcpParams:
    q: int
    p: int
    m0: int
    r: int
    s: int
    n: int
    m: int
    l: int
    a: int

    @property
    def index(self) -> int:
        return self.q ** (self.l + self.a)

    @property
    def period(self) -> int:
        return self.q**self.l

    def violations(self) -> list[str]:
        allowed = lambda x: x == self.r or x >= self.s  # noqa: E731
        bad = []
        if self.n < 1:
            bad.append("n >= 1")
        if self.n < self.m:
            bad.append("n >= m")
        if not allowed(self.n):
            bad.append("n in {r} u [s, inf)")
        if not allowed(self.m):
            bad.append("m in {r} u [s, inf)")
        if self.l < self.n + self.m + 1:
            bad.append("l >= n+m+1")
        if not 0 <= self.a <= self.l - self.n:
            bad.append("0 <= a <= l-n")
        return bad

    def is_valid(self) -> bool:
        return not self.violations()

    def to_json(self):
        return {
            "n": self.n,
            "m": self.m,
            "l": self.l,
            "a": self.a,
            "index": self.index,
            "period": self.period,
            "m_zero": self.m == 0,
        }


def ncp_admissible(q: int, p: int, m0: int, l_max: int) -> list[NcpParams]:
    r, s = ncp_parameters(q, p, m0)
    out = []
    for n in range(1, l_max + 1):
        for m in range(0, n + 1):
            for l in range(n + m + 1, l_max + 1):
                for a in range(0, l - n + 1):
                    cand = NcpParams(q, p, m0, r, s, n, m, l, a)
                    if cand.is_valid():
                        out.append(cand)
    return out


def ncp_pairs(params: list[NcpParams]) -> list[tuple[int, int]]:
    """Distinct (index, period) pairs, sorted."""
    return sorted({(x.index, x.period) for x in params})
