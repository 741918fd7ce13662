"""Rankin-Selberg L-factors, balanced and critical characters."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Optional

from .characters import COMPLEX, REAL, SmoothCharacter, embeddings
from .exact import HalfInt, half
from .gamma import (
    DiscreteSeries,
    MeromorphicScalar,
    atom_order_at,
    lfactor_atoms,
    lfactor_char,
    lfactor_pair,
    ms_order_at,
    product,
)
from .repdata import LANGLANDS, CohomRep, Weight, central_character, principal_params

MINUS, PLUS, PM = "minus", "plus", "pm"


class ScenarioError(ValueError):
    """Inconsistent or unsupported scenario."""


@dataclass(frozen=True)
class Scenario:
    """xi = (mu, nu) with a character chi of K^x.

    Over C the first row of every weight (and the first differential entry of chi)
    belongs to the embedding iota; use `oriented()` to enforce the convention
    eta_iota + n chi_iota <= eta_iotabar + n chi_iotabar.
    """

    mu: CohomRep
    nu: CohomRep
    chi: SmoothCharacter

    def __post_init__(self):
        if self.mu.field != self.nu.field or self.mu.field != self.chi.field:
            raise ScenarioError("mu, nu and chi must live over the same field")
        if self.nprime not in (self.n, self.n - 1):
            raise ScenarioError("n' must be n or n - 1")
        if self.n < 1:
            raise ScenarioError("n must be positive")
        if not all(d.is_integer for d in self.chi.differential):
            raise ScenarioError("chi must be algebraic")

    @classmethod
    def build(cls, field: str, mu, nu, chi, eps_mu: int = 0, eps_nu: int = 0, chi_delta: int = 0) -> "Scenario":
        mu_w = Weight(field, tuple(tuple(r) for r in mu))
        nu_w = Weight(field, tuple(tuple(r) for r in nu))
        ch = chi if isinstance(chi, SmoothCharacter) else SmoothCharacter.algebraic(field, chi, chi_delta)
        return cls(CohomRep(mu_w, eps_mu), CohomRep(nu_w, eps_nu), ch)

    @property
    def field(self) -> str:
        return self.mu.field

    @property
    def n(self) -> int:
        return self.mu.k

    @property
    def nprime(self) -> int:
        return self.nu.k

    def chi_d(self, emb: int) -> int:
        return self.chi.differential[emb].to_int()

    def with_chi(self, chi: SmoothCharacter) -> "Scenario":
        return replace(self, chi=chi)

    def dual(self) -> "Scenario":
        """(mu^, nu^, chi^-1): the contragredient data."""
        return Scenario(
            CohomRep(self.mu.weight.hat(), self.mu.eps),
            CohomRep(self.nu.weight.hat(), self.nu.eps),
            self.chi.inverse(),
        )

    def swapped(self) -> "Scenario":
        """Relabel the two embeddings of C."""
        if self.field != COMPLEX:
            return self
        sw = lambda r: CohomRep(Weight(COMPLEX, (r.weight[1], r.weight[0])), r.eps)
        return Scenario(sw(self.mu), sw(self.nu), SmoothCharacter.complex(self.chi.b, self.chi.a))

    def eta(self) -> SmoothCharacter:
        return central_character(self.mu) * central_character(self.nu)

    def e_values(self) -> tuple:
        """eta_iota' + n chi_iota' for each embedding."""
        eta = self.eta()
        return tuple(
            (eta.differential[j] + self.chi.differential[j] * self.n).to_int()
            for j in range(embeddings(self.field))
        )

    def oriented(self) -> "Scenario":
        if self.field == COMPLEX and self.nprime == self.n:
            e = self.e_values()
            if e[0] > e[1]:
                return self.swapped()
        return self

    def to_json(self) -> dict:
        d = {
            "field": self.field,
            "n": self.n,
            "nprime": self.nprime,
            "mu": [list(r) for r in self.mu.weight.rows],
            "nu": [list(r) for r in self.nu.weight.rows],
            "chi": [self.chi_d(j) for j in range(embeddings(self.field))],
            "eps_mu": self.mu.eps,
            "eps_nu": self.nu.eps,
        }
        if self.field == REAL:
            d["chi_delta"] = self.chi.delta
        return d

    @classmethod
    def from_json(cls, d: dict) -> "Scenario":
        try:
            field = d["field"]
            sc = cls.build(
                field,
                d["mu"],
                d["nu"],
                d["chi"],
                int(d.get("eps_mu", 0)),
                int(d.get("eps_nu", 0)),
                int(d.get("chi_delta", 0)),
            )
        except (KeyError, TypeError) as exc:
            raise ScenarioError(f"malformed scenario record: {exc}") from exc
        if "n" in d and int(d["n"]) != sc.n:
            raise ScenarioError("n does not match the length of mu")
        if "nprime" in d and int(d["nprime"]) != sc.nprime:
            raise ScenarioError("nprime does not match the length of nu")
        return sc

    def __str__(self) -> str:
        return (
            f"{self.field} n={self.n} n'={self.nprime} mu={list(self.mu.weight.rows)} "
            f"nu={list(self.nu.weight.rows)} chi={self.chi} eps=({self.mu.eps},{self.nu.eps})"
        )


# ---------------------------------------------------------------- regularity and cases


def is_regular(sc: Scenario) -> bool:
    return all(e * (e - sc.n) >= 0 for e in sc.e_values())


@dataclass(frozen=True)
class CaseTag:
    """Case of (eta, chi); iota is the index of the embedding fixed by e_iota <= e_iotabar."""

    case: str
    iota: int = 0
    sign_condition: Optional[bool] = None  # eta(-1) = (-1)^(sum d eta), checked over R with n even


def case_classify(eta: SmoothCharacter, chi: SmoothCharacter, n: int) -> CaseTag:
    """Regularity check, choice of iota and the case trichotomy for n' = n."""
    names = ("iota", "iotabar") if eta.field == COMPLEX else ("iota",)
    e = []
    for j, name in enumerate(names):
        x = eta.differential[j] + chi.differential[j] * n
        if not x.is_integer:
            raise ScenarioError("eta and chi must be algebraic")
        x = x.to_int()
        if x * (x - n) < 0:
            raise ScenarioError(f"irregular infinitesimal character at embedding {name}: {x}*({x}-{n}) < 0")
        e.append(x)
    iota = 1 if len(e) == 2 and e[0] > e[1] else 0
    lo, hi = min(e), max(e)
    case = MINUS if hi <= 0 else PLUS if lo >= n else PM
    sign = None
    if eta.field == REAL and n % 2 == 0:
        sign = eta.at_minus_one == (-1) ** eta.differential[0].to_int()
    return CaseTag(case, iota, sign)


def case_of(sc: Scenario) -> Optional[str]:
    """Case tag for n' = n, or None when eta, chi fail the regularity condition."""
    if sc.nprime != sc.n:
        raise ScenarioError("cases are defined for n' = n")
    if not is_regular(sc):
        return None
    e = sorted(sc.e_values())
    if e[-1] <= 0:
        return MINUS
    if e[0] >= sc.n:
        return PLUS
    return PM


# ---------------------------------------------------------------- L-factors


def _twist_block(blk, chi: SmoothCharacter):
    if isinstance(blk, DiscreteSeries):
        return blk.twist(chi.a)
    return blk * chi


def rs_lfactor(sc: Scenario, s_sign: int = 1, offset=0) -> MeromorphicScalar:
    """L(s_sign*s + offset, pi_mu x pi_nu x chi), built block by block."""
    xs = principal_params(sc.mu, LANGLANDS)
    ys = [_twist_block(b, sc.chi) for b in principal_params(sc.nu, LANGLANDS)]
    return product(lfactor_pair(x, y, s_sign, offset) for x in xs for y in ys)


def rs_lfactor_order(sc: Scenario, s0, s_sign: int = 1, offset=0) -> int:
    """Order at s0 of rs_lfactor(sc, s_sign, offset), summed over the unreduced atoms."""
    xs = principal_params(sc.mu, LANGLANDS)
    ys = [_twist_block(b, sc.chi) for b in principal_params(sc.nu, LANGLANDS)]
    return sum(atom_order_at(t, s0) for x in xs for y in ys for t in lfactor_atoms(x, y, s_sign, offset))


def rs_lfactor_dual(sc: Scenario, s_sign: int = 1, offset=0) -> MeromorphicScalar:
    """L(1 - (s_sign*s + offset), pi_mu^v x pi_nu^v x chi^-1)."""
    return rs_lfactor(sc.dual(), -s_sign, 1 - half(offset))


def _tilde(sc: Scenario):
    return [sc.mu.weight.shifted(j) for j in range(embeddings(sc.field))], [
        sc.nu.weight.shifted(j) for j in range(embeddings(sc.field))
    ]


def lfactor_display_complex(sc: Scenario) -> MeromorphicScalar:
    """Closed product of Gamma_C(s + max{chi_i + mu~_i + nu~_k, chi_ib + mu~_i' + nu~_k'}) over C.

    i' = n+1-i and k' = n'+1-k index the second embedding.
    """
    if sc.field != COMPLEX:
        raise ScenarioError("closed display is for K = C")
    mt, nt = _tilde(sc)
    n, m = sc.n, sc.nprime
    c0, c1 = sc.chi_d(0), sc.chi_d(1)
    out = []
    for i in range(n):
        for k in range(m):
            x = mt[0][i] + nt[0][k] + c0
            y = mt[1][n - 1 - i] + nt[1][m - 1 - k] + c1
            out.append(MeromorphicScalar.gamma("C", 1, max(x, y)))
    return product(out)


def lfactor_display_minus(sc: Scenario, literal: bool = False) -> MeromorphicScalar:
    """L(s, pi_mu x pi_nu x chi) rewritten for a balanced chi in the minus case.

    Over C the diagonal i + k = n + 1 factor pairs mu~_i^iota + nu~_k^iota with
    mu~_k^iotabar + nu~_i^iotabar.  literal=True instead pairs it with
    mu~_i^iotabar + nu~_k^iotabar, the form printed in the source display.
    """
    if sc.nprime != sc.n:
        raise ScenarioError("display needs n' = n")
    mt, nt = _tilde(sc)
    n = sc.n
    out = []
    if sc.field == COMPLEX:
        chi = (sc.chi_d(0), sc.chi_d(1))
        for j in range(2):
            for i in range(n):
                for k in range(n - 1 - i):
                    out.append(MeromorphicScalar.gamma("C", 1, mt[j][i] + nt[j][k] + chi[j]))
        for i in range(n):
            x = mt[0][i] + nt[0][n - 1 - i] + chi[0]
            if literal:
                y = mt[1][i] + nt[1][n - 1 - i] + chi[1]
            else:
                y = mt[1][n - 1 - i] + nt[1][i] + chi[1]
            out.append(MeromorphicScalar.gamma("C", 1, max(x, y)))
        return product(out)
    c = sc.chi_d(0)
    for i in range(n):
        for k in range(n - 1 - i):
            out.append(MeromorphicScalar.gamma("C", 1, mt[0][i] + nt[0][k] + c))
    for i in range(n // 2):
        x = mt[0][i] + nt[0][n - 1 - i] + c
        y = mt[0][n - 1 - i] + nt[0][i] + c
        out.append(MeromorphicScalar.gamma("C", 1, max(x, y)))
    if n % 2:
        m = n // 2
        d = (sc.mu.weight[0][m] + sc.mu.eps + sc.nu.weight[0][m] + sc.nu.eps + sc.chi.delta) % 2
        out.append(MeromorphicScalar.gamma("R", 1, mt[0][m] + nt[0][m] + c + d))
    return product(out)


def display_checks(sc: Scenario) -> dict:
    """Compare rs_lfactor with every closed display that applies to sc.

    Returns {display name: agrees}.  The product display applies over C for all chi;
    the minus-case rewriting applies to balanced chi in case minus for both fields.
    """
    out = {}
    if sc.field == COMPLEX:
        out["complex product"] = lfactor_display_complex(sc) == rs_lfactor(sc)
    if sc.nprime == sc.n and is_balanced(sc) and case_of(sc.oriented()) == MINUS:
        osc = sc.oriented()
        out["minus rewriting"] = lfactor_display_minus(osc) == rs_lfactor(osc)
    return out


# ---------------------------------------------------------------- balanced characters


NEG_INF = None  # marker for an unbounded side of an interval


def _minus_interval(mu, nu, n):
    hi = -max(mu[i] + nu[n - 1 - i] for i in range(n))
    lows = [mu[i] + nu[n - 2 - i] for i in range(n - 1)]
    lo = -min(lows) if lows else NEG_INF
    return lo, hi


def _plus_interval(mu, nu, n):
    highs = [mu[i] + nu[n - i] for i in range(1, n)]
    hi = 1 - max(highs) if highs else None
    lo = 1 - min(mu[i] + nu[n - 1 - i] for i in range(n))
    return lo, hi


def _nm1_interval(mu, nu, n):
    hi = -max(mu[i] + nu[n - 1 - i] for i in range(1, n))
    lo = -min(mu[i] + nu[n - 2 - i] for i in range(n - 1))
    return lo, hi


def balanced_box(field: str, mu: Weight, nu: Weight, case: Optional[str] = None) -> list:
    """Per-embedding intervals (lo, hi) for chi_iota'; None marks an unbounded end.

    For n' = n the system depends on the case; for pm the first embedding carries
    the minus system and the second the plus system.
    """
    n, m = mu.k, nu.k
    out = []
    for j in range(embeddings(field)):
        if m == n - 1:
            if n < 2:
                raise ScenarioError("n' = n - 1 needs n >= 2")
            out.append(_nm1_interval(mu[j], nu[j], n))
            continue
        c = case
        if case == PM:
            if field != COMPLEX:
                raise ScenarioError("case pm only occurs over C")
            c = MINUS if j == 0 else PLUS
        if c == MINUS:
            out.append(_minus_interval(mu[j], nu[j], n))
        elif c == PLUS:
            out.append(_plus_interval(mu[j], nu[j], n))
        else:
            raise ScenarioError(f"unknown case {case!r}")
    return out


def _inside(x: int, iv) -> bool:
    lo, hi = iv
    return (lo is None or x >= lo) and (hi is None or x <= hi)


def is_balanced(sc: Scenario) -> bool:
    """chi in B(xi).  For n' = n this requires regularity and the system of its case."""
    if sc.nprime == sc.n:
        sc = sc.oriented()
        case = case_of(sc)
        if case is None:
            return False
    else:
        case = None
    box = balanced_box(sc.field, sc.mu.weight, sc.nu.weight, case)
    return all(_inside(sc.chi_d(j), box[j]) for j in range(len(box)))


# ---------------------------------------------------------------- critical characters


def _crit_point(sc: Scenario) -> Fraction:
    return Fraction(0) if sc.nprime == sc.n else Fraction(1, 2)


def crit_pole(sc: Scenario) -> bool:
    """No pole at the centre for L(s, pi x pi' x chi) nor for L(1-s, dual)."""
    s0 = _crit_point(sc)
    if rs_lfactor_order(sc, s0) != 0:
        return False
    return rs_lfactor_order(sc.dual(), s0, -1, 1) == 0


def _pair_ok(x: HalfInt, y: HalfInt, s0: Fraction) -> bool:
    # Gamma_C(s0 + max) and Gamma_C(1 - s0 - min) both finite
    hi, lo = max(x, y), min(x, y)
    return hi.to_fraction() + s0 >= 1 and 1 - s0 - lo.to_fraction() >= 1


def _gr_finite(v: Fraction) -> bool:
    return not (v.denominator == 1 and v <= 0 and int(v) % 2 == 0)


def crit_closed(sc: Scenario) -> bool:
    """Closed max/min inequalities on the shifted weights."""
    s0 = _crit_point(sc)
    mt, nt = _tilde(sc)
    n, m = sc.n, sc.nprime
    if sc.field == COMPLEX:
        c0, c1 = sc.chi_d(0), sc.chi_d(1)
        for i in range(n):
            for k in range(m):
                x = c0 + mt[0][i] + nt[0][k]
                y = c1 + mt[1][n - 1 - i] + nt[1][m - 1 - k]
                if not _pair_ok(x, y, s0):
                    return False
        return True
    t = sc.chi_d(0)
    a = mt[0]
    b = nt[0]
    pa = [(a[i], a[n - 1 - i]) for i in range(n // 2)]
    pb = [(b[k], b[m - 1 - k]) for k in range(m // 2)]
    for (a1, a2) in pa:
        for (b1, b2) in pb:
            if not (_pair_ok(a1 + b1 + t, a2 + b2 + t, s0) and _pair_ok(a1 + b2 + t, a2 + b1 + t, s0)):
                return False
    mid_a = (a[n // 2], sc.mu.weight[0][n // 2] + sc.mu.eps) if n % 2 else None
    mid_b = (b[m // 2], sc.nu.weight[0][m // 2] + sc.nu.eps) if m % 2 else None
    if mid_b is not None:
        for (a1, a2) in pa:
            if not _pair_ok(a1 + mid_b[0] + t, a2 + mid_b[0] + t, s0):
                return False
    if mid_a is not None:
        for (b1, b2) in pb:
            if not _pair_ok(b1 + mid_a[0] + t, b2 + mid_a[0] + t, s0):
                return False
    if mid_a is not None and mid_b is not None:
        tt = (mid_a[0] + mid_b[0] + t).to_fraction()
        d = (mid_a[1] + mid_b[1] + sc.chi.delta) % 2
        if not (_gr_finite(s0 + tt + d) and _gr_finite(1 - s0 - tt + d)):
            return False
    return True


def crit_predicate(sc: Scenario) -> bool:
    """chi in Crit(xi); raises if the two routes disagree."""
    a, b = crit_pole(sc), crit_closed(sc)
    if a != b:
        raise AssertionError(f"critical routes disagree on {sc}: pole={a} closed={b}")
    return a


# ---------------------------------------------------------------- window sweeps


def chi_window(field: str, lo: int, hi: int, deltas: Iterable[int] = (0, 1)) -> list:
    if field == COMPLEX:
        return [SmoothCharacter.complex(a, b) for a in range(lo, hi + 1) for b in range(lo, hi + 1)]
    return [SmoothCharacter.real(t, d) for t in range(lo, hi + 1) for d in deltas]


def balanced_characters(sc0: Scenario) -> list:
    """All chi in B(xi), read off from the finitely many points of the balanced boxes.

    Needs every box to be bounded, which holds for n >= 2.
    """
    if sc0.n < 2:
        raise ScenarioError("the balanced set is unbounded for n = 1")
    deltas = (0, 1) if sc0.field == REAL else (0,)
    if sc0.nprime == sc0.n - 1:
        cases = [None]
    elif sc0.field == COMPLEX:
        cases = [MINUS, PLUS, PM]
    else:
        cases = [MINUS, PLUS]
    flips = (False, True) if sc0.field == COMPLEX and sc0.nprime == sc0.n else (False,)
    cands = set()
    for flip in flips:
        base = sc0.swapped() if flip else sc0
        for case in cases:
            box = balanced_box(base.field, base.mu.weight, base.nu.weight, case)
            for p in itertools.product(*(range(lo, hi + 1) for lo, hi in box)):
                cands.add(tuple(reversed(p)) if flip else p)
    out = []
    for p in sorted(cands):
        for d in deltas:
            chi = SmoothCharacter.algebraic(sc0.field, p, d)
            if is_balanced(sc0.with_chi(chi)):
                out.append(chi)
    return out


def _diff(chi: SmoothCharacter) -> list:
    return [d.to_int() for d in chi.differential]


def bc_relations_check(sc0: Scenario, lo: int, hi: int, full: bool = True) -> dict:
    """Compare B(xi) and Crit(xi) for all chi with entries in [lo, hi].

    With full=False the balanced set comes from `balanced_characters` and Crit is
    only evaluated where the relations need it: on B, and on the diagonal slice
    when the diagonal part of B is nonempty.
    """
    on_diag = lambda x: sc0.field == REAL or x.a == x.b
    if full:
        window = chi_window(sc0.field, lo, hi)
        bal = [chi for chi in window if is_balanced(sc0.with_chi(chi))]
    else:
        bal = [chi for chi in balanced_characters(sc0) if all(lo <= x <= hi for x in _diff(chi))]
    bal_set = set(bal)
    crit_of = {}
    bad = []
    cases = set()
    for chi in bal:
        sc = sc0.with_chi(chi)
        c = crit_of[chi] = crit_predicate(sc)
        if sc.nprime == sc.n:
            case = case_of(sc.oriented())
            cases.add(case)
            if case in (MINUS, PLUS) and c:
                bad.append(("balanced and critical", chi))
            if case == PM and not c:
                bad.append(("balanced but not critical", chi))
        elif not c:
            bad.append(("balanced but not critical", chi))
    bal_d = {x for x in bal if on_diag(x)}
    need_diag = sc0.nprime == sc0.n - 1 or cases == {PM}
    if full:
        rest = [chi for chi in window if chi not in bal_set]
    elif need_diag and bal_d:
        rest = [chi for chi in chi_window(sc0.field, lo, hi) if on_diag(chi) and chi not in bal_set]
    else:
        rest = []
    for chi in rest:
        crit_of[chi] = crit_predicate(sc0.with_chi(chi))
    crit = sorted((chi for chi, c in crit_of.items() if c), key=lambda x: (x.a.twice, x.b.twice))
    diag_ok = True
    if need_diag and bal_d:
        diag_ok = bal_d == {x for x in crit if on_diag(x)}
    return {
        "balanced": bal,
        "critical": crit,
        "violations": bad,
        "diagonal_equal": diag_ok,
        "ok": not bad and diag_ok,
    }


# ---------------------------------------------------------------- degenerate principal series


def degenerate_ps_structure(field: str, n: int, eta: SmoothCharacter, chi: SmoothCharacter) -> dict:
    """Structure of I_{eta,chi} read off from the poles of L(s, eta chi^n) and L(s, eta^-1 chi^-n)."""
    if n < 2:
        raise ScenarioError("for n = 1 the representation is the character eta^-1")
    w = eta * chi ** n
    pole0 = ms_order_at(lfactor_char(w), 0) < 0
    pole_n = ms_order_at(lfactor_char(w.inverse()), n) < 0
    irreducible = not pole0 and not pole_n
    which = "both" if pole0 and pole_n else "at0" if pole0 else "atn" if pole_n else "none"
    return {
        "irreducible": irreducible,
        # Theta_n(eta chi^n) has length 2 as soon as one of the two poles occurs
        "length_two": not irreducible,
        # j and f are isomorphisms unless L(s, eta chi^n) has a pole at 0
        "jf_iso": not pole0,
        "which_pole": which,
    }
