"""Exact calculus of products of normalized gamma functions.

Gamma_R(s) = pi^(-s/2) Gamma(s/2) and Gamma_C(s) = 2 (2 pi)^(-s) Gamma(s).  A
MeromorphicScalar is

    const * prod Gamma_f(sign*s + shift)^e * prod (s + c)^e

kept in a canonical form: every Gamma_C shift lies in [0, 1) and every Gamma_R shift
in [0, 2), using Gamma_C(u+1) = (u/2pi) Gamma_C(u) and Gamma_R(u+2) = (u/2pi) Gamma_R(u).
Two scalars are equal iff their canonical forms coincide.  No reflection or
duplication formulas are applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Union

from .characters import COMPLEX, REAL, SmoothCharacter
from .exact import HalfInt, MonomialConstant, half

GAMMA_C = "C"
GAMMA_R = "R"
_STEP = {GAMMA_C: 1, GAMMA_R: 2}
_INV_TWO_PI = MonomialConstant(Fraction(1, 2), -2)


class NotRepresentable(ValueError):
    """The exact value leaves the ring Q * pi^(Z/2) * i^Z * eps^Z."""


@dataclass(frozen=True, order=True)
class GammaAtom:
    flavor: str
    s_sign: int
    shift: HalfInt

    def __str__(self) -> str:
        var = "s" if self.s_sign == 1 else "-s"
        sh = self.shift
        if sh == 0:
            arg = var
        elif self.s_sign == 1:
            arg = f"s+{sh}" if sh > 0 else f"s-{-sh}"
        else:
            arg = f"{sh}-s"
        return f"Γ_{'ℂ' if self.flavor == GAMMA_C else 'ℝ'}({arg})"


def _add(d: dict, k, e: int) -> None:
    v = d.get(k, 0) + e
    if v:
        d[k] = v
    else:
        d.pop(k, None)


class MeromorphicScalar:
    """A canonical gamma product; immutable after construction."""

    __slots__ = ("const", "atoms", "rational", "_key")

    def __init__(self, const: MonomialConstant = MonomialConstant.one(), atoms=(), rational=()):
        c = const
        ad: dict = {}
        rd: dict = {}
        for c0, e in rational:
            _add(rd, half(c0), e)
        for atom, e in atoms:
            c = c * _reduce_atom(atom, e, ad, rd)
        self.const = c
        if c.is_zero:
            ad, rd = {}, {}
        self.atoms = tuple(sorted(ad.items()))
        self.rational = tuple(sorted(rd.items()))
        self._key = (self.const, self.atoms, self.rational)

    @classmethod
    def constant(cls, c: Union[MonomialConstant, int, Fraction]) -> "MeromorphicScalar":
        if not isinstance(c, MonomialConstant):
            c = MonomialConstant.rational(c)
        return cls(c)

    @classmethod
    def one(cls) -> "MeromorphicScalar":
        return cls()

    @classmethod
    def gamma(cls, flavor: str, s_sign: int = 1, shift=0, exp: int = 1) -> "MeromorphicScalar":
        return cls(atoms=[(GammaAtom(flavor, s_sign, half(shift)), exp)])

    @property
    def is_constant(self) -> bool:
        return not self.atoms and not self.rational

    @property
    def gamma_num(self) -> list:
        return [a for a, e in self.atoms for _ in range(e) if e > 0]

    @property
    def gamma_den(self) -> list:
        return [a for a, e in self.atoms for _ in range(-e) if e < 0]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, MonomialConstant)):
            other = MeromorphicScalar.constant(other)
        if not isinstance(other, MeromorphicScalar):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __mul__(self, other) -> "MeromorphicScalar":
        if isinstance(other, (int, Fraction, MonomialConstant)):
            other = MeromorphicScalar.constant(other)
        if not isinstance(other, MeromorphicScalar):
            return NotImplemented
        out = MeromorphicScalar.__new__(MeromorphicScalar)
        c = self.const * other.const
        ad = dict(self.atoms)
        rd = dict(self.rational)
        for k, e in other.atoms:
            _add(ad, k, e)
        for k, e in other.rational:
            _add(rd, k, e)
        if c.is_zero:
            ad, rd = {}, {}
        out.const = c
        out.atoms = tuple(sorted(ad.items()))
        out.rational = tuple(sorted(rd.items()))
        out._key = (out.const, out.atoms, out.rational)
        return out

    __rmul__ = __mul__

    def inverse(self) -> "MeromorphicScalar":
        out = MeromorphicScalar.__new__(MeromorphicScalar)
        out.const = self.const.inverse()
        out.atoms = tuple((k, -e) for k, e in self.atoms)
        out.rational = tuple((k, -e) for k, e in self.rational)
        out._key = (out.const, out.atoms, out.rational)
        return out

    def __truediv__(self, other) -> "MeromorphicScalar":
        if isinstance(other, (int, Fraction, MonomialConstant)):
            other = MeromorphicScalar.constant(other)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "MeromorphicScalar":
        return MeromorphicScalar.constant(other) * self.inverse()

    def __pow__(self, k: int) -> "MeromorphicScalar":
        if k < 0:
            return self.inverse() ** (-k)
        out = MeromorphicScalar.one()
        for _ in range(k):
            out = out * self
        return out

    def to_json(self) -> dict:
        def atom(a, e):
            return {"flavor": a.flavor, "s_sign": a.s_sign, "shift_x2": a.shift.twice, "exp": e}

        return {
            "const": self.const.to_json(),
            "gamma": [atom(a, e) for a, e in self.atoms],
            "rational": [{"root_x2": c.twice, "exp": e} for c, e in self.rational],
        }

    @classmethod
    def from_json(cls, d: dict) -> "MeromorphicScalar":
        atoms = [
            (GammaAtom(a["flavor"], int(a["s_sign"]), HalfInt(int(a["shift_x2"]))), int(a["exp"]))
            for a in d["gamma"]
        ]
        rational = [(HalfInt(int(r["root_x2"])), int(r["exp"])) for r in d["rational"]]
        return cls(MonomialConstant.from_json(d["const"]), atoms, rational)

    def __str__(self) -> str:
        num, den = [], []
        for a, e in self.atoms:
            txt = str(a) if abs(e) == 1 else f"{a}^{abs(e)}"
            (num if e > 0 else den).append(txt)
        for c, e in self.rational:
            lin = "s" if c == 0 else (f"(s+{c})" if c > 0 else f"(s-{-c})")
            txt = lin if abs(e) == 1 else f"{lin}^{abs(e)}"
            (num if e > 0 else den).append(txt)
        if num and self.const == MonomialConstant.one():
            out = "·".join(num)
        else:
            out = str(self.const)
            if num:
                out += " · " + "·".join(num)
        if den:
            out += " / " + ("·".join(den) if len(den) == 1 else "(" + "·".join(den) + ")")
        return out

    def __repr__(self) -> str:
        return f"MeromorphicScalar({self})"


def _reduce_atom(atom: GammaAtom, e: int, ad: dict, rd: dict) -> MonomialConstant:
    """Move atom^e into the canonical window; returns the constant picked up."""
    if atom.flavor not in _STEP or atom.s_sign not in (1, -1):
        raise ValueError(f"bad gamma atom {atom!r}")
    w2 = 2 * _STEP[atom.flavor]
    r2 = atom.shift.twice % w2
    j = (atom.shift.twice - r2) // w2
    sig = atom.s_sign
    _add(ad, GammaAtom(atom.flavor, sig, HalfInt(r2)), e)
    const = MonomialConstant.one()
    step2 = w2
    # Gamma(v + j*w) = Gamma(v) * prod_{l=0}^{j-1} (v + l*w)/(2 pi), with v = sig*s + r
    if j > 0:
        ls = range(0, j)
        sgn = 1
    else:
        ls = range(j, 0)
        sgn = -1
    for l in ls:
        root = HalfInt(sig * (r2 + l * step2))  # v + l*w = sig*(s + sig*(r + l*w))
        _add(rd, root, sgn * e)
        const = const * (MonomialConstant(Fraction(sig)) * _INV_TWO_PI) ** (sgn * e)
    return const


# ---------------------------------------------------------------- Laurent data


class _Lead:
    """Accumulator q * 2^(t/2) * pi^(h/2) * i^e * eps^f allowing a stray sqrt(2)."""

    def __init__(self):
        self.q = Fraction(1)
        self.two = 0
        self.pi = 0
        self.i = 0
        self.eps = 0

    def mul_mono(self, m: MonomialConstant, e: int = 1) -> None:
        if m.is_zero:
            raise ZeroDivisionError("zero constant has no Laurent expansion")
        self.q *= m.q ** e
        self.pi += m.pi_half * e
        self.i += m.i_exp * e
        self.eps += m.eps_exp * e

    def result(self) -> MonomialConstant:
        if self.two % 2:
            raise NotRepresentable("leading coefficient involves sqrt(2)")
        q = self.q * Fraction(2) ** (self.two // 2)
        return MonomialConstant(q, self.pi, self.i, self.eps)


def _as_fraction(s0) -> Fraction:
    if isinstance(s0, HalfInt):
        return s0.to_fraction()
    return Fraction(s0)


def _gamma_C_data(v: Fraction) -> tuple:
    """(order, q, two_half, pi_half) of Gamma_C at v; the value is q*2^(two/2)*pi^(pi/2)."""
    if v.denominator == 1:
        m = int(v)
        # 2 (2 pi)^(-m) * Gamma-part
        if m >= 1:
            return 0, Fraction(factorial(m - 1)), 2 * (1 - m), -2 * m
        k = -m
        return -1, Fraction((-1) ** k, factorial(k)), 2 * (1 - m), -2 * m
    if v.denominator == 2:
        # Gamma(v) = rational * sqrt(pi); (2 pi)^(-v) leaves a sqrt(2)
        q, ph = _gamma_half(v)
        two = 2 - int(2 * v)
        return 0, q, two, ph - int(2 * v)
    raise NotRepresentable(f"Gamma_C at {v}")


def _gamma_half(v: Fraction) -> tuple:
    """Gamma(v) for v in Z + 1/2 as (rational, pi_half)."""
    m = int(v - Fraction(1, 2))
    if m >= 0:
        return Fraction(factorial(2 * m), 4 ** m * factorial(m)), 1
    k = -m
    return Fraction((-4) ** k * factorial(k), factorial(2 * k)), 1


def _gamma_R_data(v: Fraction) -> tuple:
    """(order, q, pi_half) of Gamma_R at v."""
    if v.denominator != 1:
        raise NotRepresentable(f"Gamma_R at {v}")
    a = int(v)
    ph = -a  # pi^(-a/2)
    if a % 2 == 0:
        m = a // 2
        if m >= 1:
            return 0, Fraction(factorial(m - 1)), ph
        k = -m
        # residue of Gamma(u/2) at u = a is 2 (-1)^k / k!
        return -1, Fraction(2 * (-1) ** k, factorial(k)), ph
    q, p = _gamma_half(Fraction(a, 2))
    return 0, q, ph + p


def atom_order_at(atom: GammaAtom, s0) -> int:
    v = atom.s_sign * _as_fraction(s0) + atom.shift.to_fraction()
    if v.denominator != 1 or v > 0:
        return 0
    if atom.flavor == GAMMA_C:
        return -1
    return -1 if int(v) % 2 == 0 else 0


def ms_order_at(x: MeromorphicScalar, s0) -> int:
    """Order of vanishing of x at s0 (negative for a pole)."""
    if x.const.is_zero:
        raise ZeroDivisionError("zero scalar has no order")
    f = _as_fraction(s0)
    order = 0
    for atom, e in x.atoms:
        order += e * atom_order_at(atom, f)
    for c, e in x.rational:
        if f + c.to_fraction() == 0:
            order += e
    return order


def ms_value_at(x: MeromorphicScalar, s0) -> tuple:
    """(order, leading coefficient of (s - s0)^order) at s0."""
    f = _as_fraction(s0)
    acc = _Lead()
    acc.mul_mono(x.const)
    order = 0
    for atom, e in x.atoms:
        v = atom.s_sign * f + atom.shift.to_fraction()
        if atom.flavor == GAMMA_C:
            o, q, two, ph = _gamma_C_data(v)
        else:
            o, q, ph = _gamma_R_data(v)
            two = 0
        if o:
            # Gamma(v + sign*(s - s0)) ~ R / (sign*(s - s0))
            q = q * atom.s_sign
        order += o * e
        acc.q *= q ** e
        acc.two += two * e
        acc.pi += ph * e
    for c, e in x.rational:
        val = f + c.to_fraction()
        if val == 0:
            order += e
        else:
            acc.q *= val ** e
    return order, acc.result()


def ms_equal(a: MeromorphicScalar, b: MeromorphicScalar) -> bool:
    return a == b


# ---------------------------------------------------------------- local factors


@dataclass(frozen=True)
class DiscreteSeries:
    """D_{a,b} on GL_2(R), a - b a positive integer; L(s, D_{a,b}) = Gamma_C(s + max(a, b))."""

    a: HalfInt
    b: HalfInt

    def __post_init__(self):
        a, b = half(self.a), half(self.b)
        if not (a - b).is_integer or a == b:
            raise ValueError("D_{a,b} needs a - b a nonzero integer")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def twist(self, t) -> "DiscreteSeries":
        """D_{a,b} tensor |.|^t (a sign twist leaves it unchanged)."""
        return DiscreteSeries(self.a + t, self.b + t)

    def central_character(self) -> SmoothCharacter:
        return SmoothCharacter.real(self.a + self.b, (self.a - self.b + 1).to_int())


def _hmax(a: HalfInt, b: HalfInt) -> HalfInt:
    return a if a - b >= 0 else b


def lfactor_atoms(x, y=None, s_sign: int = 1, offset=0) -> list:
    """Gamma atoms whose product is L(s_sign*s + offset, x x y), before canonical reduction.

    y=None gives the L-factor of the single character x.
    """
    offset = half(offset)
    if y is None:
        if x.field == REAL:
            return [GammaAtom(GAMMA_R, s_sign, offset + x.a + x.delta)]
        return [GammaAtom(GAMMA_C, s_sign, offset + _hmax(x.a, x.b))]
    if isinstance(x, SmoothCharacter) and isinstance(y, SmoothCharacter):
        return lfactor_atoms(x * y, None, s_sign, offset)
    if isinstance(x, SmoothCharacter):
        x, y = y, x
    if isinstance(y, SmoothCharacter):
        if y.field != REAL:
            raise ValueError("discrete series pairs only with real characters")
        return [GammaAtom(GAMMA_C, s_sign, offset + y.a + _hmax(x.a, x.b))]
    return [
        GammaAtom(GAMMA_C, s_sign, offset + _hmax(x.a + y.a, x.b + y.b)),
        GammaAtom(GAMMA_C, s_sign, offset + _hmax(x.a + y.b, x.b + y.a)),
    ]


def _from_atoms(atoms: list) -> MeromorphicScalar:
    return product(MeromorphicScalar.gamma(t.flavor, t.s_sign, t.shift) for t in atoms)


def lfactor_char(w: SmoothCharacter, s_sign: int = 1, offset=0) -> MeromorphicScalar:
    """L(s_sign*s + offset, w)."""
    return _from_atoms(lfactor_atoms(w, None, s_sign, offset))


def lfactor_pair(x, y, s_sign: int = 1, offset=0) -> MeromorphicScalar:
    """L-factor of a pair of GL_1/GL_2 blocks (characters or DiscreteSeries)."""
    return _from_atoms(lfactor_atoms(x, y, s_sign, offset))


def epsilon_factor(w: SmoothCharacter, conj: bool = False) -> MonomialConstant:
    """epsilon(s, w, psi); constant in s.  conj=True uses psi-bar."""
    if w.field == REAL:
        e = MonomialConstant.eps_i(w.delta)
    else:
        e = MonomialConstant.eps_i(abs((w.a - w.b).to_int()))
    if conj and w.at_minus_one == -1:
        e = -e
    return e


def gamma_factor(w: SmoothCharacter, conj: bool = False, s_sign: int = 1, offset=0) -> MeromorphicScalar:
    """gamma(u, w, psi) = eps * L(1-u, w^-1) / L(u, w) at u = s_sign*s + offset."""
    offset = half(offset)
    num = lfactor_char(w.inverse(), -s_sign, 1 - offset)
    den = lfactor_char(w, s_sign, offset)
    return MeromorphicScalar.constant(epsilon_factor(w, conj)) * num / den


def product(xs: Iterable[MeromorphicScalar]) -> MeromorphicScalar:
    out = MeromorphicScalar.one()
    for x in xs:
        out = out * x
    return out
