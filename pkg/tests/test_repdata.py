import pytest
from hypothesis import given, strategies as st

from archperiod.characters import COMPLEX, REAL, SmoothCharacter
from archperiod.exact import HalfInt
from archperiod.gamma import DiscreteSeries
from archperiod.periods import eta0_chi0
from archperiod.rankin import MINUS, PM, Scenario, ScenarioError, case_classify
from archperiod.repdata import (
    INDUCED,
    CohomRep,
    Weight,
    central_character,
    central_character_blocks,
    cohomology_degrees,
    principal_params,
    shifted,
)

H = HalfInt.of


def lie_degrees(field, k):
    """(b, t, d_nn, d_nnm1) from real dimensions and ranks, independent of the closed formulas."""
    deg = 1 if field == REAL else 2
    dim_g = deg * k * k
    dim_k = k * (k - 1) // 2 if field == REAL else k * k
    d = dim_g - dim_k - 1
    rank_g = deg * k - 1  # the central R_+ is removed
    rank_k = k // 2 if field == REAL else k
    l0 = rank_g - rank_k
    km = k - 1
    dim_km = km * (km - 1) // 2 if field == REAL else km * km
    return (d - l0) // 2, (d + l0) // 2, d, deg * km * km - dim_km


def test_tilde_shifts():
    assert shifted((0, 0)) == [H("1/2"), H("-1/2")]
    assert shifted((2, 1, 0)) == [H(3), H(1), H(-1)]
    assert shifted((5,)) == [H(5)]


def test_weight_validation():
    with pytest.raises(ValueError, match="not dominant"):
        Weight(REAL, ((0, 1),))
    with pytest.raises(ValueError):
        Weight(COMPLEX, ((0, 0),))


def test_cohomology_degree_examples():
    r3 = cohomology_degrees(REAL, 3)
    assert r3["omega_count"] == 2 and (r3["b"], r3["t"]) == (2, 3)
    c3 = cohomology_degrees(COMPLEX, 3)
    assert c3["c_minus"] == 0 and c3["c_pm"] == 2
    assert cohomology_degrees(REAL, 4)["omega_count"] == 1
    assert cohomology_degrees(COMPLEX, 3)["omega_count"] == 1


@pytest.mark.parametrize("field", [REAL, COMPLEX])
@pytest.mark.parametrize("k", range(1, 11))
def test_cohomology_degrees_against_lie_dimensions(field, k):
    cd = cohomology_degrees(field, k)
    b, t, d, dm = lie_degrees(field, k)
    assert (cd["b"], cd["t"], cd["d_nn"], cd["d_nnm1"]) == (b, t, d, dm)
    assert cd["b"] <= cd["t"]
    assert cd["b"] + cd["t"] + cd["c_minus"] == cd["d_nn"]
    if k >= 2:
        assert cd["b"] + cohomology_degrees(field, k - 1)["b"] == cd["d_nnm1"]
    if field == COMPLEX:
        assert 2 * cd["b"] + cd["c_pm"] == cd["d_nn"]
    if k >= 2:
        assert 2 * cd["b"] + cd["c_plus"] > cd["d_nn"]


def test_principal_params_examples():
    z = CohomRep(Weight.zero(COMPLEX, 1))
    assert principal_params(z) == [SmoothCharacter.complex(0, 0)]
    rep = CohomRep(Weight(COMPLEX, ((1, 0), (0, -1))))
    assert principal_params(rep, INDUCED) == [
        SmoothCharacter.complex(H("3/2"), H("1/2")),
        SmoothCharacter.complex(H("-1/2"), H("-3/2")),
    ]
    rep = CohomRep(Weight(REAL, ((1, 0),)))
    assert principal_params(rep, INDUCED) == [SmoothCharacter.real(H("3/2"), 1), SmoothCharacter.real(H("-1/2"), 0)]


def test_central_character_examples():
    assert central_character(CohomRep(Weight.zero(COMPLEX, 3))) == SmoothCharacter.trivial(COMPLEX)
    assert central_character(CohomRep(Weight(COMPLEX, ((1, 0), (0, -1))))) == SmoothCharacter.complex(1, -1)
    assert central_character(CohomRep(Weight(REAL, ((1, 0),)))) == SmoothCharacter.real(1, 1)


def test_discrete_series_central_character_convention():
    assert DiscreteSeries(H("1/2"), H("-1/2")).central_character() == SmoothCharacter.real(0, 0)
    assert DiscreteSeries(1, 0).central_character() == SmoothCharacter.real(1, 0)
    assert DiscreteSeries(2, 0).central_character() == SmoothCharacter.real(2, 1)


rows = st.lists(st.integers(-4, 4), min_size=1, max_size=5).map(lambda r: tuple(sorted(r, reverse=True)))


@given(rows, st.integers(0, 1))
def test_real_central_character_routes(row, eps):
    # The principal series route is authoritative.  With the discrete series sign
    # convention sgn^(a-b+1) the block route agrees for even k and is off by
    # sgn^((k-1)/2) for odd k, coming from the sign attached to the middle block.
    rep = CohomRep(Weight(REAL, (row,)), eps)
    k = len(row)
    offset = SmoothCharacter.real(0, 0 if k % 2 == 0 else (k - 1) // 2)
    assert central_character_blocks(rep) == central_character(rep) * offset


@given(rows, rows, st.integers(0, 1))
def test_central_character_of_hat_is_inverse(r1, r2, eps):
    for field, rs in ((REAL, (r1,)), (COMPLEX, (r1, tuple(sorted(r2, reverse=True)[: len(r1)]) if len(r2) >= len(r1) else r1))):
        w = Weight(field, rs)
        rep, rep_hat = CohomRep(w, eps), CohomRep(w.hat(), eps)
        assert central_character(rep) * central_character(rep_hat) == SmoothCharacter.trivial(field)


def test_case_classify_examples():
    t = case_classify(SmoothCharacter.complex(0, 2), SmoothCharacter.trivial(COMPLEX), 2)
    assert (t.case, t.iota) == (PM, 0)
    assert case_classify(SmoothCharacter.trivial(REAL), SmoothCharacter.trivial(REAL), 3).case == MINUS
    with pytest.raises(ScenarioError, match="iota"):
        case_classify(SmoothCharacter.complex(1, 1), SmoothCharacter.trivial(COMPLEX), 3)


@given(st.integers(-8, 8), st.integers(-8, 8), st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 4))
def test_case_classify_is_swap_invariant(e1, e2, c1, c2, n):
    eta, chi = SmoothCharacter.complex(e1, e2), SmoothCharacter.complex(c1, c2)
    eta_s, chi_s = SmoothCharacter.complex(e2, e1), SmoothCharacter.complex(c2, c1)
    try:
        t = case_classify(eta, chi, n)
    except ScenarioError:
        with pytest.raises(ScenarioError):
            case_classify(eta_s, chi_s, n)
        return
    s = case_classify(eta_s, chi_s, n)
    assert t.case == s.case
    if e1 + n * c1 != e2 + n * c2:
        assert t.iota != s.iota


@given(rows, rows, st.integers(0, 1), st.integers(0, 1))
def test_sign_condition_holds_for_products_of_central_characters(r1, r2, e1, e2):
    n = 2 * ((min(len(r1), len(r2)) + 1) // 2)
    if len(r1) < n or len(r2) < n:
        return
    mu = CohomRep(Weight(REAL, (r1[:n],)), e1)
    nu = CohomRep(Weight(REAL, (r2[:n],)), e2)
    eta = central_character(mu) * central_character(nu)
    e = (eta.differential[0]).to_int()
    chi_t = -((e + n - 1) // n) if e > 0 else 0  # push into a regular range
    try:
        tag = case_classify(eta, SmoothCharacter.real(chi_t, 0), n)
    except ScenarioError:
        return
    assert tag.sign_condition is True


def test_eta0_chi0_examples():
    sc = Scenario.build(COMPLEX, [(0, 0), (0, 0)], [(0, 0), (0, 0)], [0, 0])
    e0, c0 = eta0_chi0(sc)
    assert e0 == c0 == SmoothCharacter.trivial(COMPLEX)
    sc = Scenario.build(COMPLEX, [(-1, -1), (-1, -1)], [(0, 0), (0, 0)], [1, 1])
    assert sc.eta() == SmoothCharacter.complex(-2, -2)
    e0, c0 = eta0_chi0(sc)
    assert e0.differential == (H(0), H(0)) and c0.differential == (H(0), H(0))
    sc = Scenario.build(COMPLEX, [(0, 0), (0, 0)], [(0, 0), (1, 1)], [0, 0])
    assert sc.eta() == SmoothCharacter.complex(0, 2)
    e0, c0 = eta0_chi0(sc)
    assert c0 == SmoothCharacter.complex(0, 1)
