"""Exact scalars: half-integers and monomials in pi, i and the additive-character sign.

A MonomialConstant is q * pi^(h/2) * i^e * eps^f with q rational, h an integer,
e in {0, 1} (powers i^2 = -1 fold into q) and f mod 2.  Here eps stands for the sign eps_psi in {+1, -1} of the
additive character psi(x) = exp(eps_psi * 2*pi*i * x).  Everything stays symbolic in
eps so one computation serves both choices of psi.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

IntLike = Union[int, "HalfInt"]


@dataclass(frozen=True, eq=False)
class HalfInt:
    """An element of (1/2)Z, stored as twice its value."""

    twice: int

    @classmethod
    def of(cls, x: Union[int, "HalfInt", Fraction, str]) -> "HalfInt":
        if isinstance(x, HalfInt):
            return x
        if isinstance(x, bool):
            raise TypeError("bool is not a half-integer")
        if isinstance(x, int):
            return cls(2 * x)
        f = Fraction(x)
        t = 2 * f
        if t.denominator != 1:
            raise ValueError(f"{x!r} is not in (1/2)Z")
        return cls(int(t))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def to_int(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def floor(self) -> int:
        return self.twice // 2

    def __add__(self, other: IntLike) -> "HalfInt":
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other: IntLike) -> "HalfInt":
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other: IntLike) -> "HalfInt":
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.twice)

    def __mul__(self, k: int) -> "HalfInt":
        if not isinstance(k, int):
            return NotImplemented
        return HalfInt(self.twice * k)

    __rmul__ = __mul__

    def _cmp(self, other) -> int:
        o = HalfInt.of(other)
        return (self.twice > o.twice) - (self.twice < o.twice)

    def __eq__(self, other) -> bool:
        try:
            return self._cmp(other) == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    def __hash__(self) -> int:
        return hash(("HalfInt", self.twice))

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def half(x) -> HalfInt:
    return HalfInt.of(x)


@dataclass(frozen=True)
class MonomialConstant:
    """q * pi^(pi_half/2) * i^i_exp * eps^eps_exp, kept in canonical form.

    Zero is the single value with q == 0 and all exponents zero.
    """

    q: Fraction = Fraction(1)
    pi_half: int = 0
    i_exp: int = 0
    eps_exp: int = 0

    def __post_init__(self):
        q = Fraction(self.q)
        object.__setattr__(self, "q", q)
        if q == 0:
            object.__setattr__(self, "pi_half", 0)
            object.__setattr__(self, "i_exp", 0)
            object.__setattr__(self, "eps_exp", 0)
        else:
            # i^2 = -1 is folded into q so equal numbers have equal fields
            e = self.i_exp % 4
            if e >= 2:
                object.__setattr__(self, "q", -q)
                e -= 2
            object.__setattr__(self, "i_exp", e)
            object.__setattr__(self, "eps_exp", self.eps_exp % 2)

    @classmethod
    def one(cls) -> "MonomialConstant":
        return cls()

    @classmethod
    def zero(cls) -> "MonomialConstant":
        return cls(Fraction(0))

    @classmethod
    def rational(cls, q) -> "MonomialConstant":
        return cls(Fraction(q))

    @classmethod
    def pi_power(cls, h2: int) -> "MonomialConstant":
        """pi^(h2/2)."""
        return cls(Fraction(1), h2)

    @classmethod
    def eps_i(cls, k: int) -> "MonomialConstant":
        """(eps_psi * i)^k for integer k."""
        return cls(Fraction(1), 0, k % 4, k % 2)

    @property
    def is_zero(self) -> bool:
        return self.q == 0

    def __mul__(self, other: Union["MonomialConstant", int, Fraction]) -> "MonomialConstant":
        if isinstance(other, (int, Fraction)):
            other = MonomialConstant(Fraction(other))
        if not isinstance(other, MonomialConstant):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return MonomialConstant.zero()
        return MonomialConstant(
            self.q * other.q,
            self.pi_half + other.pi_half,
            self.i_exp + other.i_exp,
            self.eps_exp + other.eps_exp,
        )

    __rmul__ = __mul__

    def inverse(self) -> "MonomialConstant":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero monomial")
        return MonomialConstant(1 / self.q, -self.pi_half, -self.i_exp, -self.eps_exp)

    def __truediv__(self, other) -> "MonomialConstant":
        if isinstance(other, (int, Fraction)):
            other = MonomialConstant(Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other) -> "MonomialConstant":
        return MonomialConstant(Fraction(other)) * self.inverse()

    def __neg__(self) -> "MonomialConstant":
        return self * -1

    def __pow__(self, k: int) -> "MonomialConstant":
        if k < 0:
            return self.inverse() ** (-k)
        out = MonomialConstant.one()
        for _ in range(k):
            out = out * self
        return out

    def specialize(self, eps: int) -> complex:
        """Numeric value for eps_psi = eps (must be +1 or -1)."""
        import math

        if eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        val = complex(float(self.q) * math.pi ** (self.pi_half / 2))
        if self.i_exp:
            val *= 1j
        if self.eps_exp and eps == -1:
            val = -val
        return val

    def at_psi(self, eps: int) -> "MonomialConstant":
        """Substitute eps_psi = eps, keeping pi and i symbolic."""
        if eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        q = -self.q if (self.eps_exp and eps == -1) else self.q
        return MonomialConstant(q, self.pi_half, self.i_exp, 0)

    def to_json(self) -> dict:
        return {
            "q": f"{self.q.numerator}/{self.q.denominator}",
            "pi_half_x2": self.pi_half,
            "i_mod4": self.i_exp,
            "eps_mod2": self.eps_exp,
        }

    @classmethod
    def from_json(cls, d: dict) -> "MonomialConstant":
        return cls(Fraction(d["q"]), int(d["pi_half_x2"]), int(d["i_mod4"]), int(d["eps_mod2"]))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        if self.q != 1 or (self.pi_half == 0 and self.i_exp == 0 and self.eps_exp == 0):
            parts.append(str(self.q))
        if self.pi_half:
            e = Fraction(self.pi_half, 2)
            parts.append("π" if e == 1 else f"π^({e})")
        if self.i_exp:
            parts.append("i" if self.i_exp == 1 else f"i^{self.i_exp}")
        if self.eps_exp:
            parts.append("ε_ψ")
        return "·".join(parts)

    def __repr__(self) -> str:
        return f"MonomialConstant({self})"
