"""Dominant weights, their cohomological representations and dimension numerology."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .characters import COMPLEX, REAL, SmoothCharacter, embeddings
from .exact import HalfInt, half
from .gamma import DiscreteSeries

INDUCED = "induced"
LANGLANDS = "langlands"


def is_dominant(row: Sequence[int]) -> bool:
    return all(row[i] >= row[i + 1] for i in range(len(row) - 1))


def shifted(row: Sequence[int]) -> list:
    """mu~_i = mu_i + (k + 1 - 2i)/2."""
    k = len(row)
    return [half(row[i]) + HalfInt(k - 1 - 2 * i) for i in range(k)]


def hat(row: Sequence[int]) -> tuple:
    """mu^ = (-mu_k, ..., -mu_1)."""
    return tuple(-x for x in reversed(row))


@dataclass(frozen=True)
class Weight:
    """A dominant weight: one integer row per embedding of K."""

    field: str
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if len(rows) != embeddings(self.field):
            raise ValueError(f"expected {embeddings(self.field)} rows for field {self.field}")
        if len({len(r) for r in rows}) != 1:
            raise ValueError("all rows of a weight must have the same length")
        for r in rows:
            if not is_dominant(r):
                raise ValueError(f"weight row {r} is not dominant")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def zero(cls, field: str, k: int) -> "Weight":
        return cls(field, tuple((0,) * k for _ in range(embeddings(field))))

    @property
    def k(self) -> int:
        return len(self.rows[0])

    def hat(self) -> "Weight":
        return Weight(self.field, tuple(hat(r) for r in self.rows))

    def shifted(self, emb: int = 0) -> list:
        return shifted(self.rows[emb])

    def __getitem__(self, emb: int) -> tuple:
        return self.rows[emb]


@dataclass(frozen=True)
class CohomRep:
    """pi_mu together with the sign choice eps (only relevant over R with k odd)."""

    weight: Weight
    eps: int = 0

    def __post_init__(self):
        e = self.eps % 2
        if not (self.weight.field == REAL and self.weight.k % 2 == 1):
            e = 0
        object.__setattr__(self, "eps", e)

    @property
    def field(self) -> str:
        return self.weight.field

    @property
    def k(self) -> int:
        return self.weight.k

    def zero_companion(self) -> "CohomRep":
        """The weight-zero representation with the same sign choice."""
        return CohomRep(Weight.zero(self.field, self.k), self.eps)


def omega_set_size(field: str, k: int) -> int:
    """#Omega(mu): 2 over R with k odd, else 1."""
    return 2 if field == REAL and k % 2 == 1 else 1


def eps_choices(field: str, k: int) -> tuple:
    return (0, 1) if omega_set_size(field, k) == 2 else (0,)


def principal_params(rep: CohomRep, mode: str = INDUCED) -> list:
    return list(_principal_params(rep, mode))


@lru_cache(maxsize=4096)
def _principal_params(rep: CohomRep, mode: str) -> tuple:
    """Inducing data of pi_mu.

    mode "induced": the characters rho_i of the principal series I_mu that has pi_mu
    as its unique irreducible quotient (same index on both embeddings).
    mode "langlands": the blocks whose product gives L(s, pi_mu); over R these are
    D_{mu~_i, mu~_(k+1-i)} plus a middle character, over C the characters
    iota^{mu~_i} iotabar^{mu~_(k+1-i)}.
    """
    w = rep.weight
    k = w.k
    if w.field == REAL:
        mt = w.shifted(0)
        row = w[0]
        if mode == INDUCED:
            return tuple(SmoothCharacter.real(mt[i], row[i] + rep.eps) for i in range(k))
        if mode != LANGLANDS:
            raise ValueError(f"unknown mode {mode!r}")
        blocks: list = [DiscreteSeries(mt[i], mt[k - 1 - i]) for i in range(k // 2)]
        if k % 2:
            m = k // 2
            blocks.append(SmoothCharacter.real(mt[m], row[m] + rep.eps))
        return tuple(blocks)
    a, b = w.shifted(0), w.shifted(1)
    if mode == INDUCED:
        return tuple(SmoothCharacter.complex(a[i], b[i]) for i in range(k))
    if mode != LANGLANDS:
        raise ValueError(f"unknown mode {mode!r}")
    return tuple(SmoothCharacter.complex(a[i], b[k - 1 - i]) for i in range(k))


@lru_cache(maxsize=4096)
def central_character(rep: CohomRep) -> SmoothCharacter:
    out = SmoothCharacter.trivial(rep.field)
    for ch in principal_params(rep, INDUCED):
        out = out * ch
    return out


def central_character_blocks(rep: CohomRep) -> SmoothCharacter:
    """Central character from the Langlands blocks; must agree with central_character."""
    out = SmoothCharacter.trivial(rep.field)
    for blk in principal_params(rep, LANGLANDS):
        out = out * (blk.central_character() if isinstance(blk, DiscreteSeries) else blk)
    return out


def hat_params(params: Sequence[SmoothCharacter]) -> list:
    """(rho_k^-1, ..., rho_1^-1)."""
    return [p.inverse() for p in reversed(params)]


# ---------------------------------------------------------------- numerology


def b_k(field: str, k: int) -> int:
    return k * k // 4 if field == REAL else k * (k - 1) // 2


def t_k(field: str, k: int) -> int:
    return (k + 1) ** 2 // 4 - 1 if field == REAL else k * (k + 1) // 2 - 1


def c_nK(field: str, n: int, case: str) -> int:
    deg = 1 if field == REAL else 2
    return {"minus": 0, "plus": deg * (n - 1), "pm": n - 1}[case]


def d_n_nm1(field: str, n: int) -> int:
    """dim gl_{n-1} / k_{n-1} over R."""
    return (n - 1) * n // 2 if field == REAL else (n - 1) ** 2


def d_n_n(field: str, n: int) -> int:
    """dim gl_n / (k_n + R)."""
    return n * (n + 1) // 2 - 1 if field == REAL else n * n - 1


def numerology_check(field: str, n: int) -> dict:
    """Evaluate the three dimension coincidences; each entry is (lhs, rhs)."""
    out = {
        "b_n+b_{n-1}=d_{n,n-1}": (b_k(field, n) + b_k(field, n - 1), d_n_nm1(field, n)),
        "b+t+c(minus)=d_{n,n}": (b_k(field, n) + t_k(field, n) + c_nK(field, n, "minus"), d_n_n(field, n)),
    }
    if field == COMPLEX:
        out["2b+c(pm)=d_{n,n}"] = (2 * b_k(field, n) + c_nK(field, n, "pm"), d_n_n(field, n))
    return out


def cohomology_degrees(field: str, k: int) -> dict:
    """Cohomological range and dimension counts attached to GL_k over the field."""
    if k < 1:
        raise ValueError("k must be positive")
    out = {
        "b": b_k(field, k),
        "t": t_k(field, k),
        "c_minus": c_nK(field, k, "minus"),
        "c_plus": c_nK(field, k, "plus"),
        "omega_count": omega_set_size(field, k),
        "d_nn": d_n_n(field, k),
        "d_nnm1": d_n_nm1(field, k),
    }
    if field == COMPLEX:
        out["c_pm"] = c_nK(field, k, "pm")
    return out
