from fractions import Fraction

from hypothesis import settings, strategies as st

from archperiod.characters import COMPLEX, REAL, SmoothCharacter
from archperiod.exact import HalfInt, MonomialConstant

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")

half_ints = st.integers(-40, 40).map(HalfInt)

nonzero_monomials = st.builds(
    MonomialConstant,
    st.fractions(min_value=-50, max_value=50, max_denominator=30).filter(lambda q: q != 0),
    st.integers(-8, 8),
    st.integers(0, 3),
    st.integers(0, 1),
)


@st.composite
def characters(draw, field=None):
    field = field or draw(st.sampled_from([REAL, COMPLEX]))
    if field == REAL:
        return SmoothCharacter.real(HalfInt(draw(st.integers(-16, 16))), draw(st.integers(0, 1)))
    a = draw(st.integers(-16, 16))
    return SmoothCharacter.complex(HalfInt(a), HalfInt(a + 2 * draw(st.integers(-6, 6))))


def frac(x) -> Fraction:
    return Fraction(x)


# one line per acceptance criterion, collected by tests/test_acceptance.py
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
