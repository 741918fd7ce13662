import random

import pytest
from hypothesis import given, strategies as st

from archperiod.characters import COMPLEX, REAL, SmoothCharacter
from archperiod.exact import MonomialConstant
from archperiod.gamma import MeromorphicScalar, ms_order_at
from archperiod.periods import (
    c_const,
    c_eps_constants,
    cd_factors,
    eps_bookkeeping,
    eps_const,
    eps_prime,
    eps_reduced,
    g_at_zero,
    g_function,
    gamma_L_display,
    gamma_L_raw,
    lss_Gamma,
    normalizer,
    omega_main,
    rag_check,
    sgn_lss,
    sign_display_raw,
    sign_value,
    verify_period_identity,
)
from archperiod.rankin import MINUS, PM, Scenario, ScenarioError, case_of, rs_lfactor
from archperiod.repdata import INDUCED, CohomRep, Weight, principal_params
from archperiod.sweep import complex_bucket, real_minus

EI = MonomialConstant.eps_i
ONE = MonomialConstant.one()


def zero(field, n):
    return [(0,) * n] * (1 if field == REAL else 2)


def example_xi(n):
    return Scenario.build(COMPLEX, [(0,) * n, (0,) * n], [(0,) * n, (1,) * n], [0, 0])


def test_constant_examples():
    for field in (REAL, COMPLEX):
        sc = Scenario.build(field, zero(field, 2), zero(field, 2), [0] * (1 if field == REAL else 2))
        assert c_const(sc) == ONE and eps_const(sc) == ONE
        sc = Scenario.build(field, zero(field, 3), zero(field, 3), [0] * (1 if field == REAL else 2))
        assert eps_const(sc) == ONE
    sc = Scenario.build(COMPLEX, zero(COMPLEX, 2), zero(COMPLEX, 2), [-1, -1])
    assert c_const(sc) == MonomialConstant.rational(-1)
    with pytest.raises(ScenarioError):
        eps_prime(Scenario.build(REAL, [(0, 0)], [(0, 0)], [0]))
    assert "eps_prime" not in c_eps_constants(Scenario.build(REAL, [(0, 0)], [(0, 0)], [0]))


def test_g_examples():
    sc = Scenario.build(COMPLEX, zero(COMPLEX, 2), zero(COMPLEX, 2), [0, 0])
    assert g_function(sc) == MeromorphicScalar.one()
    assert g_at_zero(sc) == ONE
    sc = Scenario.build(REAL, [(1, 0)], [(0, -1)], [0])
    assert case_of(sc) == MINUS
    assert ms_order_at(g_function(sc), 0) == 0
    assert g_at_zero(Scenario.build(COMPLEX, [(0,), (0,)], [(0,), (0,)], [0, 0])) == ONE
    with pytest.raises(ScenarioError):
        g_function(example_xi(2))


def test_omega_main_examples():
    for field in (REAL, COMPLEX):
        rows = 1 if field == REAL else 2
        sc = Scenario.build(field, zero(field, 3), zero(field, 2), [0] * rows)
        assert omega_main(sc) == ONE
    assert omega_main(Scenario.build(COMPLEX, zero(COMPLEX, 2), zero(COMPLEX, 2), [0, 0])) == ONE
    w = omega_main(example_xi(2))
    assert not w.is_zero and w.q in (1, -1) and w.pi_half == 0
    with pytest.raises(ScenarioError):
        omega_main(Scenario.build(COMPLEX, zero(COMPLEX, 2), zero(COMPLEX, 2), [5, 5]))


def test_lss_sign_is_trivial_for_n_one():
    r = [SmoothCharacter.real(3, 1)]
    assert sgn_lss(r, r, SmoothCharacter.real(0, 1)) == ONE


@given(st.integers(1, 3), st.integers(-3, 3), st.integers(0, 1), st.integers(0, 1))
def test_lss_psibar_variant(n, c, d, em):
    rep = CohomRep(Weight(REAL, (tuple(range(n, 0, -1)),)), em if n % 2 else 0)
    rho = principal_params(rep, INDUCED)
    chi = SmoothCharacter.real(c, d)
    sign = 1
    for i in range(n):
        for k in range(n - 1 - i):
            sign *= (rho[i] * rho[k] * chi).at_minus_one
    lhs = lss_Gamma(rho, rho, chi, conj=True)
    assert lhs == MeromorphicScalar.constant(MonomialConstant.rational(sign)) * lss_Gamma(rho, rho, chi)


def test_cd_factor_examples():
    for n in (1, 2, 3):
        cf = cd_factors(example_xi(n))
        assert cf.parts["C1"] == MeromorphicScalar.one()
    for n in (2, 3):
        sc = example_xi(n).with_chi(SmoothCharacter.complex(0, 0))
        e_bar = sc.oriented().e_values()[1]
        assert normalizer(sc) == EI(e_bar - n) * MonomialConstant.rational((-1) ** (e_bar - n))


def test_eps_reduced_moves_signs_into_chi():
    sc = Scenario.build(REAL, [(1, 0, -1)], [(0, 0, 0)], [0], 1, 0, 0)
    red = eps_reduced(sc)
    assert red.mu.eps == 0 and red.chi.delta == 1
    assert rs_lfactor(red) == rs_lfactor(sc)
    assert eps_reduced(Scenario.build(COMPLEX, zero(COMPLEX, 2), zero(COMPLEX, 2), [0, 0])).chi == SmoothCharacter.complex(0, 0)


def test_verify_examples():
    rep = verify_period_identity(Scenario.build(REAL, [(0, 0, 0)], [(0, 0, 0)], [0]))
    assert rep.ok and rep.match
    rep = verify_period_identity(Scenario.build(COMPLEX, zero(COMPLEX, 2), zero(COMPLEX, 2), [0, 0]))
    assert rep.ok and rep.match
    rep = verify_period_identity(Scenario.build(COMPLEX, [(0,), (0,)], [(0,), (1,)], [0, 0]))
    assert rep.case == PM and rep.ok and rep.match
    rep = verify_period_identity(Scenario.build(COMPLEX, zero(COMPLEX, 2), zero(COMPLEX, 2), [5, 5]))
    assert rep.error and not rep.ok


def minus_sample(n, k=40):
    scs = real_minus(n, 1).scenarios + complex_bucket(n, 1, MINUS, 200, seed=1).scenarios
    return random.Random(n).sample(scs, min(k, len(scs)))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_minus_case_dual_path(n):
    for sc in minus_sample(n):
        rep = verify_period_identity(sc)
        assert rep.ok and rep.match, rep.to_json()
        assert rep.checks["g_regular"]


def pm_sample(n, k=25):
    return random.Random(n).sample(complex_bucket(n, 1, PM, 200, seed=1).scenarios, k)


def divergence(n):
    """(eps i)^(-n(n-1)/2) (-1)^#{i > k, i + k <= n}, the observed ratio of the two pm routes."""
    pairs = sum(1 for i in range(1, n + 1) for k in range(1, i) if i + k <= n)
    return EI(-n * (n - 1) // 2) * MonomialConstant.rational((-1) ** pairs)


def test_pm_dual_path_for_n_one():
    for sc in pm_sample(1):
        rep = verify_period_identity(sc)
        assert rep.ok and rep.match, rep.to_json()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pm_routes_differ_by_fixed_unit(n):
    # The local-factor route and the closed formula differ by a unit that depends only on n.
    # The sign, LC, Rag and epsilon subchecks hold; the gamma/L display is off by (eps i)^(n(n-1)/2).
    for sc in pm_sample(n, 12 if n == 4 else 25):
        rep = verify_period_identity(sc)
        assert rep.error is None
        assert rep.omega_prime_inverse / rep.omega_main == divergence(n)
        assert gamma_L_raw(sc) / gamma_L_display(sc) == EI(n * (n - 1) // 2)
        assert set(rep.failed_checks()) == {"dual_path", "gamma_L"}


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pm_target_twist_reading_matches(n):
    # evaluating the target side at chi' chi_0 chi, with the normalizer moved along, removes the unit
    for sc in pm_sample(n, 15):
        assert cd_factors(sc, True, True).omega_inverse() == omega_main(sc)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pm_intermediates(n):
    for sc in pm_sample(n, 15):
        assert sign_display_raw(sc) == sign_value(sc)
        assert not rag_check(sc)
        assert not eps_bookkeeping(sc)


def test_plus_case_rejected():
    sc = Scenario.build(COMPLEX, zero(COMPLEX, 2), zero(COMPLEX, 2), [1, 1])
    assert case_of(sc) == "plus"
    rep = verify_period_identity(sc)
    assert rep.error and "functional equation" in rep.error


def test_report_json_is_stable():
    sc = example_xi(2)
    a = verify_period_identity(sc).to_json()
    b = verify_period_identity(sc).to_json()
    assert a == b
    assert list(a["checks"]) == sorted(a["checks"])
