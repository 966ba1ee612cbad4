from math import gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from brauerkit.characters import (
    CyclicCharacter,
    InsufficientPlacesError,
    character_from_json,
    grunwald_constant_witnesses,
    local_order,
    ramification_locus,
    scale_character,
    splitting_at,
)
from brauerkit.field import (
    Place,
    Poly,
    RationalFunction,
    parse_place,
    parse_poly,
    places_up_to,
    residue_field_order_of,
    valuation,
)
from brauerkit.qmodz import QmodZ
from oracles import frobenius_orbits


def place_of_degree(p, d, k=0):
    return [v for v in places_up_to(p, d) if v.degree == d and not v.is_infinite][k]


def test_constant_splitting_examples():
    chi = CyclicCharacter.constant(2, 9)
    assert splitting_at(chi, parse_place("t^3+t+1", 2)).as_tuple() == (1, 3, 3)
    assert splitting_at(chi, parse_place("t", 2)).as_tuple() == (1, 9, 1)
    assert splitting_at(chi, Place.infinity(2)).as_tuple() == (1, 9, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 9, 15, 27])
@pytest.mark.parametrize("d", [1, 2, 3, 4, 6, 9])
def test_constant_splitting_matches_orbit_count(n, d):
    p = 2 if n % 2 else 3
    v = place_of_degree(p, d)
    orbits = frobenius_orbits(d, n)
    sd = splitting_at(CyclicCharacter.constant(p, n), v)
    assert sd.g == len(orbits)
    assert {sd.f} == {n * len(o) // d for o in orbits}
    assert sd.e == 1


def test_kummer_ramified_example():
    chi = CyclicCharacter.kummer(3, 2, RationalFunction(Poly.t(3)))
    assert splitting_at(chi, parse_place("t", 3)).as_tuple() == (2, 1, 1)
    assert splitting_at(chi, Place.infinity(3)).as_tuple() == (2, 1, 1)


def _nth_powers(p, n):
    return {pow(x, n, p) for x in range(1, p)}


@pytest.mark.parametrize("p,n", [(5, 2), (5, 4), (7, 3), (7, 6), (13, 4)])
def test_kummer_unramified_degree_one_against_power_table(p, n):
    rad = RationalFunction(parse_poly("t^2+t+2", p), parse_poly("t+3", p))
    try:
        chi = CyclicCharacter.kummer(p, n, rad)
    except ValueError:
        pytest.skip("radicand is a power for this (p, n)")
    powers = _nth_powers(p, n)
    for c in range(p):
        v = Place(p, Poly(p, (-c, 1)))
        if valuation(rad, v) != 0:
            continue
        val = rad.num(c) * pow(rad.den(c), -1, p) % p
        # local degree: least j with val^j an n-th power in F_p
        j = next(j for j in range(1, n + 1) if pow(val, j, p) in powers)
        sd = splitting_at(chi, v)
        assert sd.e == 1
        assert sd.f == j
        assert sd.g == n // j


def test_local_order_examples():
    chi = CyclicCharacter.constant(2, 9)
    assert local_order(chi, parse_place("t^3+t+1", 2)) == 3
    assert local_order(chi, place_of_degree(2, 9)) == 1
    triv = CyclicCharacter.trivial(2)
    assert all(local_order(triv, v) == 1 for v in places_up_to(2, 3))


def test_ramification_locus_examples():
    assert ramification_locus(CyclicCharacter.constant(5, 4), 3) == []
    chi = CyclicCharacter.kummer(3, 2, RationalFunction(Poly.t(3)))
    assert set(ramification_locus(chi, 1)) == {parse_place("t", 3), Place.infinity(3)}
    rad = RationalFunction(parse_poly("t^3+t^2", 5))
    chi = CyclicCharacter.kummer(5, 4, rad)
    locus = ramification_locus(chi, 1)
    es = {str(v): splitting_at(chi, v).e for v in locus}
    assert es == {"t": 2, "t+1": 4, "inf": 4}


def test_ramification_locus_bound():
    rad = RationalFunction(parse_poly("t^2+2", 5))
    with pytest.raises(InsufficientPlacesError):
        ramification_locus(CyclicCharacter.kummer(5, 2, rad), 1)


def test_grunwald_witness_examples():
    theta, v1, v2 = grunwald_constant_witnesses(2, 3, 2, 1, 20)
    assert theta.order == 9
    assert (str(v1), str(v2)) == ("t^3+t+1", "t^3+t^2+1")
    assert local_order(theta, v1) == local_order(theta, v2) == 3

    theta, v1, v2 = grunwald_constant_witnesses(2, 3, 1, 1, 5)
    assert {v1, v2} <= set(places_up_to(2, 1)) and v1 != v2
    assert local_order(theta, v1) == 3

    theta, v1, v2 = grunwald_constant_witnesses(2, 3, 2, 2, 5)
    assert v1.degree == v2.degree == 1
    assert local_order(theta, v1) == 9


def test_grunwald_witness_shortage():
    with pytest.raises(InsufficientPlacesError, match="insufficient places below degree bound"):
        grunwald_constant_witnesses(2, 3, 2, 1, 2)
    with pytest.raises(ValueError):
        grunwald_constant_witnesses(3, 3, 2, 1, 20)


def test_invalid_characters():
    with pytest.raises(ValueError):
        CyclicCharacter.constant(3, 9)
    with pytest.raises(ValueError):
        CyclicCharacter.constant(2, 9, QmodZ(1, 3))
    with pytest.raises(ValueError):
        CyclicCharacter.kummer(5, 3, RationalFunction(Poly.t(5)))
    with pytest.raises(ValueError, match="proper power"):
        CyclicCharacter.kummer(5, 2, RationalFunction(Poly.t(5) ** 2))
    with pytest.raises(ValueError, match="proper power"):
        CyclicCharacter.kummer(5, 4, RationalFunction(Poly.const(5, 4)))


def test_scale_kummer():
    chi = CyclicCharacter.kummer(5, 4, RationalFunction(Poly.t(5)))
    assert scale_character(2, chi) == CyclicCharacter.kummer(5, 2, RationalFunction(Poly.t(5)))
    assert scale_character(4, chi).is_trivial()
    assert scale_character(3, chi).order == 4


def test_character_json_round_trip():
    for chi in [CyclicCharacter.constant(2, 9, QmodZ(2, 9)),
                CyclicCharacter.kummer(3, 2, RationalFunction(Poly.t(3)))]:
        assert character_from_json(chi.to_json(), chi.p) == chi
    assert CyclicCharacter.constant(2, 9).to_json() == {"kind": "constant", "order": 9, "frob": "1/9"}
    assert CyclicCharacter.kummer(3, 2, RationalFunction(Poly.t(3))).to_json() == {
        "kind": "kummer", "order": 2, "radicand": "t"}


# Kummer data over F_p with n | p - 1
KUMMER_PN = [(3, 2), (5, 2), (5, 4), (7, 2), (7, 3), (7, 6), (11, 5), (13, 12)]


@st.composite
def kummer_chars(draw):
    p, n = draw(st.sampled_from(KUMMER_PN))
    num = Poly(p, draw(st.lists(st.integers(0, p - 1), min_size=2, max_size=4)))
    den = Poly(p, draw(st.lists(st.integers(0, p - 1), min_size=1, max_size=3)))
    assume(not num.is_zero() and not den.is_zero())
    rad = RationalFunction(num, den)
    try:
        return CyclicCharacter.kummer(p, n, rad)
    except ValueError:
        assume(False)


@st.composite
def constant_chars(draw):
    p = draw(st.sampled_from([2, 3, 5]))
    n = draw(st.integers(1, 60).filter(lambda n: gcd(n, p) == 1))
    a = draw(st.integers(0, n - 1).filter(lambda a: gcd(a, n) == 1))
    return CyclicCharacter.constant(p, n, QmodZ(a, n))


@settings(max_examples=60, deadline=None)
@given(st.one_of(kummer_chars(), constant_chars()), st.integers(1, 3), st.integers(0, 10), st.integers(-50, 50))
def test_splitting_invariants(chi, d, k_idx, k):
    places = [v for v in places_up_to(chi.p, d) if v.degree == d or v.is_infinite]
    v = places[k_idx % len(places)]
    sd = splitting_at(chi, v)
    assert sd.e * sd.f * sd.g == chi.order
    assert gcd(sd.e, chi.p) == 1
    if chi.kind == "constant":
        assert sd.e == 1 and sd.g * sd.f == chi.order
    lo = local_order(chi, v)
    assert chi.order % lo == 0
    assert local_order(scale_character(k, chi), v) == lo // gcd(lo, k)


@settings(max_examples=60, deadline=None)
@given(kummer_chars(), st.integers(0, 10))
def test_inertia_independent_of_uniformizer(chi, k_idx):
    p = chi.p
    places = places_up_to(p, 2)
    v = places[k_idx % len(places)]
    sd = splitting_at(chi, v)
    k = valuation(chi.radicand, v)
    # pi' = pi * (1 + pi) is another uniformizer
    if v.is_infinite:
        alt = RationalFunction(Poly.const(p, 1), parse_poly("t+1", p))
    else:
        alt = RationalFunction(v.poly * (v.poly + 1))
    assert valuation(alt, v) == 1
    unit = chi.radicand / alt**k
    assert residue_field_order_of(v, unit, chi.order // sd.e) == sd.f
