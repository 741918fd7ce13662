import cmath
import math
import random

import mpmath
import pytest

from archperiod.characters import SmoothCharacter
from archperiod.gamma import GAMMA_C, GAMMA_R, MeromorphicScalar, gamma_factor
from archperiod.numeric import NearPoleError, complex_gamma, gamma_C, gamma_R, ms_numeric_eval, rel_close

G = MeromorphicScalar.gamma


def test_known_values():
    assert rel_close(complex_gamma(1), 1, 1e-12)
    assert rel_close(complex_gamma(0.5), math.sqrt(math.pi), 1e-12)
    assert rel_close(complex_gamma(5), 24, 1e-12)


def test_recurrence():
    rng = random.Random(1)
    for _ in range(200):
        z = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
        assert rel_close(complex_gamma(z + 1) / (z * complex_gamma(z)), 1, 1e-10)


def test_against_mpmath():
    rng = random.Random(2)
    for _ in range(300):
        z = complex(rng.uniform(-30, 30), rng.uniform(-15, 15))
        if abs(z - round(z.real)) < 1e-3 and round(z.real) <= 0:
            continue
        ref = complex(mpmath.gamma(mpmath.mpc(z.real, z.imag)))
        assert rel_close(complex_gamma(z), ref, 1e-10), z


def test_near_pole_rejected():
    for k in (0, -1, -7):
        with pytest.raises(NearPoleError):
            complex_gamma(k)
        with pytest.raises(NearPoleError):
            complex_gamma(k + 1e-14)
    with pytest.raises(ValueError):
        complex_gamma(complex(float("nan"), 0))
    with pytest.raises(NearPoleError):
        ms_numeric_eval(G(GAMMA_C), 1e-5)
    with pytest.raises(NearPoleError):
        ms_numeric_eval(G(GAMMA_R), -2 + 1e-5)


def test_normalized_gamma_functions():
    assert rel_close(ms_numeric_eval(G(GAMMA_C), 1), 1 / math.pi, 1e-12)
    z = complex(0.3, 1.1)
    assert rel_close(gamma_R(z), complex(mpmath.pi ** (-z / 2) * mpmath.gamma(z / 2)), 1e-10)
    assert rel_close(gamma_C(z), complex(2 * (2 * mpmath.pi) ** (-z) * mpmath.gamma(z)), 1e-10)


def test_gamma_gamma_bar_numerically():
    rng = random.Random(3)
    for w in (SmoothCharacter.complex(0, 0), SmoothCharacter.complex(2, -1), SmoothCharacter.real(3, 1)):
        a = gamma_factor(w)
        b = gamma_factor(w.inverse(), conj=True)
        for _ in range(10):
            s = complex(rng.uniform(-3, 3), rng.uniform(0.1, 2))
            for eps in (1, -1):
                assert rel_close(ms_numeric_eval(a, s, eps) * ms_numeric_eval(b, 1 - s, eps), 1, 1e-9)


def test_shift_identity_at_fixed_point():
    s, l = 0.3, 3
    val = gamma_C(s + l) * gamma_C(1 - s - l) / (gamma_C(s) * gamma_C(1 - s))
    assert rel_close(val, -1, 1e-9)


def test_numeric_eval_handles_rational_factors():
    x = G(GAMMA_C, 1, 3)  # canonical form carries (s)(s+1)(s+2)/(2 pi)^3
    assert x.rational
    for s in (complex(0.25, 0.5), complex(-1.5, 0.2)):
        assert rel_close(ms_numeric_eval(x, s), gamma_C(s + 3), 1e-10)
