import pytest

from brauerkit.brauer_complete import (
    CompletedClass,
    certify_indecomposable,
    completed_from_json,
    index,
    period,
    scale_completed,
)
from brauerkit.brauer_global import from_invariants
from brauerkit.characters import CyclicCharacter, InsufficientPlacesError
from brauerkit.constructions import IndecomposableSpec, build_indecomposable
from brauerkit.field import Place, parse_place
from brauerkit.qmodz import QmodZ

V1 = parse_place("t^3+t+1", 2)
V2 = parse_place("t^3+t^2+1", 2)


def cubic_pair_gamma():
    alpha0 = from_invariants(2, [(V1, QmodZ(1, 9)), (V2, QmodZ(-1, 9))])
    return CompletedClass(alpha0, CyclicCharacter.constant(2, 9))


def test_period_examples():
    assert period(cubic_pair_gamma()) == 9
    assert period(CompletedClass.zero(2)) == 1
    alpha = from_invariants(5, [(Place.infinity(5), QmodZ(1, 2)), (parse_place("t", 5), QmodZ(1, 2))])
    assert period(CompletedClass(alpha, CyclicCharacter.constant(5, 3))) == 6


def test_index_examples():
    assert index(cubic_pair_gamma(), 9) == 27
    assert index(CompletedClass.zero(2)) == 1
    alpha = cubic_pair_gamma().alpha0
    assert index(CompletedClass(alpha, CyclicCharacter.trivial(2))) == alpha.period_index()[1]


def test_index_search_bound():
    with pytest.raises(InsufficientPlacesError):
        index(cubic_pair_gamma(), 2)
    assert index(cubic_pair_gamma(), 3) == index(cubic_pair_gamma(), 30)


def test_scale_completed_examples():
    g3 = scale_completed(3, cubic_pair_gamma())
    assert dict(g3.alpha0.invariants) == {V1: QmodZ(1, 3), V2: QmodZ(2, 3)}
    assert g3.chi0.order == 3
    assert scale_completed(9, cubic_pair_gamma()).is_zero()
    assert period(scale_completed(2, cubic_pair_gamma())) == 9


def test_certificate_examples():
    cert = certify_indecomposable(cubic_pair_gamma(), 3)
    assert (cert.ind, cert.ind_q, cert.verdict, cert.branch) == (27, 9, "indecomposable", "saltman")
    assert (cert.e, cert.i, cert.t) == (2, 3, 1)

    cert = certify_indecomposable(CompletedClass.zero(2), 3)
    assert cert.verdict == "inconclusive" and cert.ind == 1

    eq = build_indecomposable(2, IndecomposableSpec(3, 2, 2)).gamma
    cert = certify_indecomposable(eq, 3)
    assert cert.verdict == "indecomposable" and cert.branch == "period=index"
    assert cert.ind == cert.per == 9


def test_certificate_inconclusive_when_criterion_fails():
    # the cubic and nonic places split completely under theta0 of order 3: ind = 3 * 27 = 81
    # while ind(3 gamma) = 9, so ind(q gamma) * q != ind(gamma)
    v9 = parse_place("t^9+t^4+1", 2)
    alpha = from_invariants(2, [(V1, QmodZ(1, 27)), (v9, QmodZ(-1, 27))])
    gamma = CompletedClass(alpha, CyclicCharacter.constant(2, 3))
    cert = certify_indecomposable(gamma, 3)
    assert (cert.per, cert.ind, cert.ind_q) == (27, 81, 9)
    assert cert.verdict == "inconclusive"


def test_certificate_rejects_non_q_power_period():
    alpha = from_invariants(5, [(Place.infinity(5), QmodZ(1, 2)), (parse_place("t", 5), QmodZ(1, 2))])
    gamma = CompletedClass(alpha, CyclicCharacter.constant(5, 3))
    with pytest.raises(ValueError, match="not a q-power"):
        certify_indecomposable(gamma, 3)


def test_completed_json_round_trip():
    gamma = cubic_pair_gamma()
    data = gamma.to_json()
    assert set(data) == {"alpha0", "chi0", "pi"} and data["pi"] == "pi"
    assert completed_from_json(data) == gamma


@pytest.mark.parametrize("p,q", [(2, 3), (5, 2), (5, 3), (3, 2), (7, 5)])
@pytest.mark.parametrize("e", [1, 2, 3])
def test_period_index_bounds_on_grid(p, q, e):
    for i in range(e, 2 * e):
        gamma = build_indecomposable(p, IndecomposableSpec(q, e, i)).gamma
        per, ind = period(gamma), index(gamma)
        assert ind % per == 0 and (per * per) % ind == 0
        ind_q = index(scale_completed(q, gamma))
        assert ind_q * q in (ind, q * ind)
        assert ind_q * q == ind
