import pytest
from hypothesis import given

from archperiod.characters import COMPLEX, REAL, SmoothCharacter

from conftest import characters


def test_complex_product():
    assert SmoothCharacter.complex(2, 0) * SmoothCharacter.complex(-1, 1) == SmoothCharacter.complex(1, 1)


def test_real_inverse():
    assert SmoothCharacter.real(1, 1).inverse() == SmoothCharacter.real(-1, 1)


def test_abs_twist():
    assert SmoothCharacter.trivial(COMPLEX).abs_twist(1) == SmoothCharacter.complex(1, 1)
    assert SmoothCharacter.real(0, 1).abs_twist(2) == SmoothCharacter.real(2, 1)


def test_char_data_examples():
    sgn = SmoothCharacter.real(0, 1)
    assert (sgn.delta, sgn.real_part, sgn.at_minus_one) == (1, 0, -1)
    assert SmoothCharacter.complex(2, 0).at_minus_one == 1
    assert SmoothCharacter.complex(1, 0).at_minus_one == -1
    assert SmoothCharacter.real(3, 1).real_part == 3


def test_well_definedness():
    with pytest.raises(ValueError):
        SmoothCharacter.complex("1/2", 0)
    with pytest.raises(ValueError):
        SmoothCharacter.real(0, 1) * SmoothCharacter.complex(0, 0)


def test_algebraic_constructor():
    assert SmoothCharacter.algebraic(REAL, [2], 1) == SmoothCharacter.real(2, 1)
    assert SmoothCharacter.algebraic(COMPLEX, [2, -1]) == SmoothCharacter.complex(2, -1)
    with pytest.raises(ValueError):
        SmoothCharacter.algebraic(COMPLEX, [2])


@given(characters(), characters())
def test_char_data_is_multiplicative(w1, w2):
    if w1.field != w2.field:
        return
    w = w1 * w2
    assert w.delta == (w1.delta + w2.delta) % 2
    assert w.real_part == w1.real_part + w2.real_part
    assert w.at_minus_one == w1.at_minus_one * w2.at_minus_one


@given(characters())
def test_inverse_involution_and_json(w):
    assert w.inverse().inverse() == w
    assert (w * w.inverse()) == SmoothCharacter.trivial(w.field)
    assert SmoothCharacter.from_json(w.to_json()) == w
