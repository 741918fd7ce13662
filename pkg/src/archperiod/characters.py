"""Characters of K^x for K = R or C.

Over R a character is x -> |x|^t sgn(x)^delta.  Over C it is z -> iota(z)^a * iotabar(z)^b
with a - b an integer; |z|_C = z*zbar corresponds to (1, 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import HalfInt, half

REAL = "R"
COMPLEX = "C"
FIELDS = (REAL, COMPLEX)


def check_field(field: str) -> str:
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}; expected 'R' or 'C'")
    return field


def embeddings(field: str) -> int:
    """Number of complex embeddings iota' of K."""
    return 1 if check_field(field) == REAL else 2


@dataclass(frozen=True)
class SmoothCharacter:
    field: str
    a: HalfInt  # t over R, exponent of iota over C
    b: HalfInt  # delta (0 or 1) over R, exponent of iotabar over C

    def __post_init__(self):
        check_field(self.field)
        a, b = half(self.a), half(self.b)
        if self.field == REAL:
            if not b.is_integer:
                raise ValueError("sign exponent must be an integer")
            b = HalfInt.of(b.to_int() % 2)
        elif not (a - b).is_integer:
            raise ValueError("iota and iotabar exponents must differ by an integer")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @classmethod
    def real(cls, t, delta: int) -> "SmoothCharacter":
        return cls(REAL, half(t), half(delta % 2))

    @classmethod
    def complex(cls, a, b) -> "SmoothCharacter":
        return cls(COMPLEX, half(a), half(b))

    @classmethod
    def trivial(cls, field: str) -> "SmoothCharacter":
        return cls(field, half(0), half(0))

    @classmethod
    def algebraic(cls, field: str, d, delta: int = 0) -> "SmoothCharacter":
        """Character with differential d (one entry per embedding).

        Over R the sign exponent is delta; over C the character is iota^d0 iotabar^d1.
        """
        d = list(d)
        if field == REAL:
            if len(d) != 1:
                raise ValueError("a real character has one differential entry")
            return cls.real(d[0], delta)
        if len(d) != 2:
            raise ValueError("a complex character has two differential entries")
        return cls.complex(d[0], d[1])

    @classmethod
    def embedding_power(cls, field: str, which: int, m) -> "SmoothCharacter":
        """(iota'|_{K^x})^m for the embedding with index `which` (0 = iota, 1 = iotabar)."""
        m = half(m)
        if field == REAL:
            if which != 0:
                raise ValueError("R has a single embedding")
            return cls.real(m, m.to_int() % 2)
        return cls.complex(m, 0) if which == 0 else cls.complex(0, m)

    @property
    def t(self) -> HalfInt:
        if self.field != REAL:
            raise AttributeError("t is defined for real characters")
        return self.a

    @property
    def sign_exp(self) -> int:
        if self.field != REAL:
            raise AttributeError("sign_exp is defined for real characters")
        return self.b.to_int()

    @property
    def delta(self) -> int:
        if self.field == REAL:
            return self.b.to_int()
        return (self.a - self.b).to_int() % 2

    @property
    def at_minus_one(self) -> int:
        return -1 if self.delta else 1

    @property
    def real_part(self) -> Fraction:
        """Re(omega) with omega = |.|_K^Re * unitary."""
        if self.field == REAL:
            return self.a.to_fraction()
        return (self.a + self.b).to_fraction() / 2

    @property
    def differential(self) -> tuple:
        if self.field == REAL:
            return (self.a,)
        return (self.a, self.b)

    def char_data(self) -> tuple:
        return (self.real_part, self.delta, self.at_minus_one)

    def _same(self, other: "SmoothCharacter") -> None:
        if self.field != other.field:
            raise ValueError("characters over different fields")

    def __mul__(self, other: "SmoothCharacter") -> "SmoothCharacter":
        self._same(other)
        if self.field == REAL:
            return SmoothCharacter.real(self.a + other.a, self.delta + other.delta)
        return SmoothCharacter.complex(self.a + other.a, self.b + other.b)

    def inverse(self) -> "SmoothCharacter":
        if self.field == REAL:
            return SmoothCharacter.real(-self.a, self.delta)
        return SmoothCharacter.complex(-self.a, -self.b)

    def __truediv__(self, other: "SmoothCharacter") -> "SmoothCharacter":
        return self * other.inverse()

    def __pow__(self, k: int) -> "SmoothCharacter":
        if self.field == REAL:
            return SmoothCharacter.real(self.a * k, self.delta * k)
        return SmoothCharacter.complex(self.a * k, self.b * k)

    def abs_twist(self, t) -> "SmoothCharacter":
        """omega * |.|_K^t."""
        t = half(t)
        if self.field == REAL:
            return SmoothCharacter.real(self.a + t, self.delta)
        return SmoothCharacter.complex(self.a + t, self.b + t)

    def to_json(self) -> dict:
        if self.field == REAL:
            return {"field": "R", "t_x2": self.a.twice, "delta": self.delta}
        return {"field": "C", "a_x2": self.a.twice, "b_x2": self.b.twice}

    @classmethod
    def from_json(cls, d: dict) -> "SmoothCharacter":
        if d["field"] == REAL:
            return cls(REAL, HalfInt(int(d["t_x2"])), half(int(d["delta"])))
        return cls(COMPLEX, HalfInt(int(d["a_x2"])), HalfInt(int(d["b_x2"])))

    def __str__(self) -> str:
        if self.field == REAL:
            return f"|·|^{self.a}·sgn^{self.delta}"
        return f"ι^{self.a}·ῑ^{self.b}"
