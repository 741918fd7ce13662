"""Integer matrices z_k, open-orbit checks, and the Fourier map on the Weyl algebra.

Linear algebra is exact over Q (Fraction entries).  Matrices are tuples of row tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Tuple

from .exact import MonomialConstant

Matrix = Tuple[Tuple[int, ...], ...]

NN_MINUS = "nn_minus"
NN_PLUS = "nn_plus"
NNM1 = "nnm1"
VARIANTS = (NN_MINUS, NN_PLUS, NNM1)


# ---------------------------------------------------------------- exact matrices


def identity(k: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def anti_diagonal(k: int) -> Matrix:
    """w_k."""
    return tuple(tuple(1 if i + j == k - 1 else 0 for j in range(k)) for i in range(k))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return ()
    cols = list(zip(*b)) if b else []
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    p, q = len(a), len(b)
    rows = [tuple(a[i]) + (0,) * q for i in range(p)]
    rows += [(0,) * p + tuple(b[i]) for i in range(q)]
    return tuple(rows)


def determinant(a: Matrix) -> int:
    """Bareiss fraction-free elimination; exact for integer input."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def inverse(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan; entries are returned as int when integral."""
    n = len(a)
    m = [[Fraction(x) for x in a[i]] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        m[c], m[piv] = m[piv], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return tuple(tuple(_intify(x) for x in row[n:]) for row in m)


def _intify(x: Fraction):
    return int(x) if x.denominator == 1 else x


def rank(rows: Iterable[Iterable]) -> int:
    """Exact rank over Q by row reduction."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


# ---------------------------------------------------------------- z_k


_Z_CACHE: Dict[int, Matrix] = {0: (), 1: ((1,),)}


def z_matrix(k: int) -> Matrix:
    """z_k from the three-factor recursion, z_0 empty and z_1 = [1]."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k in _Z_CACHE:
        return _Z_CACHE[k]
    w = anti_diagonal(k - 1)
    z1 = z_matrix(k - 1)
    left = block_diag(w, identity(1))
    mid = block_diag(inverse(z_matrix(k - 2)), identity(2))
    core = matmul(matmul(transpose(z1), w), z1)
    right = tuple(tuple(core[i]) + (1 if i == k - 2 else 0,) for i in range(k - 1)) + ((0,) * (k - 1) + (1,),)
    out = matmul(matmul(left, mid), right)
    if any(isinstance(x, Fraction) for row in out for x in row):
        raise ArithmeticError(f"z_{k} is not integral")
    _Z_CACHE[k] = out
    return out


def transpose_inverse(a: Matrix) -> Matrix:
    """g^tau = (g^t)^-1."""
    return transpose(inverse(a))


# ---------------------------------------------------------------- open orbits


@dataclass
class OrbitResult:
    n: int
    variant: str
    unknowns: int
    equations: int
    rank: int

    @property
    def stabilizer_dim(self) -> int:
        return self.unknowns - self.rank

    @property
    def open(self) -> bool:
        return self.stabilizer_dim == 0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "variant": self.variant,
            "unknowns": self.unknowns,
            "equations": self.equations,
            "rank": self.rank,
            "stabilizer_dim": self.stabilizer_dim,
            "open": self.open,
        }


def _upper_conditions(g: Matrix, m: int, embed: int) -> list:
    """Rows expressing (g X g^-1)_{ab} = 0 for a < b, with X an m x m unknown placed in the
    top-left corner of an embed x embed matrix."""
    gi = inverse(g)
    rows = []
    for a in range(embed):
        for b in range(a + 1, embed):
            # (g X g^-1)_{ab} = sum_{p,q} g[a][p] X[p][q] gi[q][b]
            rows.append([Fraction(g[a][p]) * Fraction(gi[q][b]) for p in range(m) for q in range(m)])
    return rows


def open_orbit_check(n: int, variant: str = NN_MINUS) -> OrbitResult:
    """Exact dimension of the stabilizer Lie algebra at the distinguished point."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if variant == NNM1:
        m = n - 1
        rows = _upper_conditions(z_matrix(n), m, n) + _upper_conditions(z_matrix(n - 1), m, m)
        return OrbitResult(n, variant, m * m, len(rows), rank(rows) if rows and m else 0)
    if variant == NN_MINUS:
        g1 = z_matrix(n)
        g2 = block_diag(z_matrix(n - 1), identity(1))
        # e_n X = 0: last row of X vanishes
        vec = [[Fraction(int(p == n - 1 and q == j)) for p in range(n) for q in range(n)] for j in range(n)]
    elif variant == NN_PLUS:
        w = anti_diagonal(n)
        g1 = matmul(w, transpose_inverse(z_matrix(n)))
        g2 = matmul(w, block_diag(transpose_inverse(z_matrix(n - 1)), identity(1)))
        # X te_n = 0: last column of X vanishes
        vec = [[Fraction(int(q == n - 1 and p == j)) for p in range(n) for q in range(n)] for j in range(n)]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    rows = _upper_conditions(g1, n, n) + _upper_conditions(g2, n, n) + vec
    return OrbitResult(n, variant, n * n, len(rows), rank(rows))


# ---------------------------------------------------------------- Weyl algebra


# A coefficient is a finite sum of monomials q * pi^(h/2) * i^e * eps^f,
# stored as {(h, e, f): q}.
CoeffKey = Tuple[int, int, int]


def _key(m: MonomialConstant) -> CoeffKey:
    return (m.pi_half, m.i_exp, m.eps_exp)


class Coeff:
    """Element of the Q-span of monomial constants."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t: Dict[CoeffKey, Fraction] = {}
        for k, q in (terms or {}).items():
            if q:
                t[k] = t.get(k, Fraction(0)) + Fraction(q)
        self.terms = {k: q for k, q in t.items() if q}

    @classmethod
    def of(cls, x) -> "Coeff":
        if isinstance(x, Coeff):
            return x
        if not isinstance(x, MonomialConstant):
            x = MonomialConstant.rational(x)
        if x.is_zero:
            return cls()
        return cls({_key(x): x.q})

    @staticmethod
    def _mono(k: CoeffKey, q) -> MonomialConstant:
        return MonomialConstant(Fraction(q), k[0], k[1], k[2])

    def __add__(self, other) -> "Coeff":
        other = Coeff.of(other)
        t = dict(self.terms)
        for k, q in other.terms.items():
            t[k] = t.get(k, Fraction(0)) + q
        return Coeff(t)

    def __neg__(self) -> "Coeff":
        return Coeff({k: -q for k, q in self.terms.items()})

    def __sub__(self, other) -> "Coeff":
        return self + (-Coeff.of(other))

    def __mul__(self, other) -> "Coeff":
        other = Coeff.of(other)
        t: Dict[CoeffKey, Fraction] = {}
        for k1, q1 in self.terms.items():
            for k2, q2 in other.terms.items():
                m = self._mono(k1, q1) * self._mono(k2, q2)
                if not m.is_zero:
                    k = _key(m)
                    t[k] = t.get(k, Fraction(0)) + m.q
        return Coeff(t)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return self.terms == Coeff.of(other).terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(self._mono(k, q)) for k, q in sorted(self.terms.items()))

    __repr__ = __str__


# A monomial is x^a d^b (normal order), with a and b exponent tuples over the variables.
Mono = Tuple[Tuple[int, ...], Tuple[int, ...]]


def _falling(c: int, k: int) -> int:
    out = 1
    for j in range(k):
        out *= c - j
    return out


def _binom(b: int, k: int) -> int:
    return _falling(b, k) // _falling(k, k)


class WeylElement:
    """Normal-ordered polynomial differential operator in nvars variables.

    Variables are labelled (embedding, index); over C there are two blocks.  The
    relation d_v x_w = x_w d_v + [v = w] is applied on multiplication.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        t: Dict[Mono, Coeff] = {}
        for mono, c in (terms or {}).items():
            c = Coeff.of(c)
            t[mono] = t.get(mono, Coeff()) + c
        self.terms = {m: c for m, c in t.items() if not c.is_zero()}

    @classmethod
    def scalar(cls, nvars: int, c) -> "WeylElement":
        z = (0,) * nvars
        return cls(nvars, {(z, z): c})

    @classmethod
    def x(cls, nvars: int, v: int) -> "WeylElement":
        a = tuple(int(j == v) for j in range(nvars))
        return cls(nvars, {(a, (0,) * nvars): 1})

    @classmethod
    def d(cls, nvars: int, v: int) -> "WeylElement":
        b = tuple(int(j == v) for j in range(nvars))
        return cls(nvars, {((0,) * nvars, b): 1})

    def __add__(self, other: "WeylElement") -> "WeylElement":
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, Coeff()) + c
        return WeylElement(self.nvars, t)

    def __neg__(self) -> "WeylElement":
        return WeylElement(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        return self + (-other)

    def scale(self, c) -> "WeylElement":
        c = Coeff.of(c)
        return WeylElement(self.nvars, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        out: Dict[Mono, Coeff] = {}
        for (a, b), c1 in self.terms.items():
            for (cc, dd), c2 in other.terms.items():
                # d^b x^cc = sum_k prod_v binom(b_v, k_v) (cc_v)_(k_v) x^(cc-k) d^(b-k)
                parts = [((), (), 1)]
                for v in range(self.nvars):
                    nxt = []
                    for k in range(min(b[v], cc[v]) + 1):
                        w = _binom(b[v], k) * _falling(cc[v], k)
                        for xa, db, f in parts:
                            nxt.append((xa + (a[v] + cc[v] - k,), db + (b[v] - k + dd[v],), f * w))
                    parts = nxt
                c = c1 * c2
                for xa, db, f in parts:
                    key = (xa, db)
                    out[key] = out.get(key, Coeff()) + c * f
        return WeylElement(self.nvars, out)

    def __pow__(self, k: int) -> "WeylElement":
        out = WeylElement.scalar(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def degrees(self) -> set:
        """Set of (x-degree, d-degree) pairs occurring."""
        return {(sum(a), sum(b)) for a, b in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items()):
            gens = [f"x{v}^{e}" if e > 1 else f"x{v}" for v, e in enumerate(a) if e]
            gens += [f"d{v}^{e}" if e > 1 else f"d{v}" for v, e in enumerate(b) if e]
            parts.append(f"({c})" + ("·" + "·".join(gens) if gens else ""))
        return " + ".join(parts)

    __repr__ = __str__


def two_pi_i_eps() -> MonomialConstant:
    """eps_psi * 2 pi i."""
    return MonomialConstant(Fraction(2), 2, 1, 1)


def fourier_weyl(D: WeylElement) -> WeylElement:
    """Image under x_v -> -d_{y_v} / (eps 2 pi i), d_{x_v} -> eps 2 pi i y_v.

    The result is an element of the Weyl algebra in the y variables, again normal
    ordered.  Generators are substituted in the order of each normal-ordered monomial.
    """
    N = D.nvars
    c = two_pi_i_eps()
    x_img = [WeylElement.d(N, v).scale(-c.inverse()) for v in range(N)]
    d_img = [WeylElement.x(N, v).scale(c) for v in range(N)]
    out = WeylElement(N)
    for (a, b), coef in D.terms.items():
        term = WeylElement.scalar(N, coef)
        for v in range(N):
            if a[v]:
                term = term * x_img[v] ** a[v]
        for v in range(N):
            if b[v]:
                term = term * d_img[v] ** b[v]
        out = out + term
    return out
