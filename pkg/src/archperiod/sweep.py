"""Enumeration of balanced scenarios for batch verification.

Over R every balanced scenario with entries in [-M, M] is produced.  Over C the
balanced set is a product of per-embedding solution sets, which grows like the
square of the real count; when that product exceeds `limit` a seeded uniform
sample of `limit` pairs is drawn instead and the bucket is marked as sampled.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, List, Optional

from .characters import COMPLEX, REAL
from .rankin import (
    MINUS,
    PLUS,
    PM,
    Scenario,
    ScenarioError,
    _minus_interval,
    _plus_interval,
    balanced_characters,
    case_of,
    display_checks,
    is_balanced,
)


def dominant_weights(n: int, lo: int, hi: int) -> List[tuple]:
    """All weakly decreasing integer vectors of length n with entries in [lo, hi]."""
    return [tuple(reversed(c)) for c in itertools.combinations_with_replacement(range(lo, hi + 1), n)]


def embedding_triples(n: int, M: int, system: str) -> List[tuple]:
    """(mu_row, nu_row, chi) with entries in [-M, M] solving one embedding's system."""
    f = _minus_interval if system == MINUS else _plus_interval
    out = []
    ws = dominant_weights(n, -M, M)
    for mu in ws:
        for nu in ws:
            lo, hi = f(mu, nu, n)
            lo = -M if lo is None or lo < -M else lo
            hi = M if hi is None or hi > M else hi
            for c in range(lo, hi + 1):
                out.append((mu, nu, c))
    return out


@dataclass
class Bucket:
    """Scenarios of one (field, n, case) together with how they were produced."""

    field: str
    n: int
    case: str
    scenarios: list = field(default_factory=list)
    population: int = 0
    sampled: bool = False

    def label(self) -> str:
        how = f"sample {len(self.scenarios)}/{self.population}" if self.sampled else f"all {len(self.scenarios)}"
        return f"{self.field} n={self.n} {self.case}: {how}"


def real_minus(n: int, M: int) -> Bucket:
    b = Bucket(REAL, n, MINUS)
    eps = (0, 1) if n % 2 else (0,)
    for mu, nu, c in embedding_triples(n, M, MINUS):
        for em, en, d in itertools.product(eps, eps, (0, 1)):
            sc = Scenario.build(REAL, [mu], [nu], [c], em, en, d)
            if is_balanced(sc) and case_of(sc) == MINUS:
                b.scenarios.append(sc)
    b.population = len(b.scenarios)
    return b


def complex_bucket(n: int, M: int, case: str, limit: Optional[int] = None, seed: int = 0) -> Bucket:
    """Case minus pairs two minus triples; case pm pairs a minus triple (iota) with a plus triple."""
    b = Bucket(COMPLEX, n, case)
    first = embedding_triples(n, M, MINUS)
    second = embedding_triples(n, M, MINUS if case == MINUS else PLUS)
    b.population = len(first) * len(second)
    if limit is None or b.population <= limit:
        pairs: Iterator = itertools.product(first, second)
    else:
        b.sampled = True
        rng = random.Random(seed * 1000003 + n * 31 + (case == PM))
        idx = rng.sample(range(b.population), limit)
        pairs = ((first[i // len(second)], second[i % len(second)]) for i in sorted(idx))
    for t0, t1 in pairs:
        sc = Scenario.build(COMPLEX, [t0[0], t1[0]], [t0[1], t1[1]], [t0[2], t1[2]])
        try:
            ok = is_balanced(sc) and case_of(sc.oriented()) == case
        except ScenarioError:
            ok = False
        if ok:
            b.scenarios.append(sc)
    if not b.sampled:
        b.population = len(b.scenarios)
    return b


def period_buckets(n_max: int, M: int, complex_limit: Optional[int] = 2000, seed: int = 0) -> List[Bucket]:
    """All buckets used by the dual-path suite."""
    out = []
    for n in range(1, n_max + 1):
        out.append(real_minus(n, M))
    for n in range(1, n_max + 1):
        for case in (MINUS, PM):
            out.append(complex_bucket(n, M, case, complex_limit, seed))
    return out


def bc_xi_bucket(field: str, n: int, nprime: int, M: int, limit: Optional[int] = None, seed: int = 0) -> Bucket:
    """All xi = (mu, nu) with entries in [-M, M] (chi trivial), or a seeded sample of `limit`."""
    b = Bucket(field, n, "n'=n" if nprime == n else "n'=n-1")
    rows = 1 if field == REAL else 2
    mus = list(itertools.product(dominant_weights(n, -M, M), repeat=rows))
    nus = list(itertools.product(dominant_weights(nprime, -M, M), repeat=rows))
    em = (0, 1) if field == REAL and n % 2 else (0,)
    en = (0, 1) if field == REAL and nprime % 2 else (0,)
    combos = [(a, c) for a in em for c in en]
    b.population = len(mus) * len(nus) * len(combos)
    if limit is None or b.population <= limit:
        idx: Iterator = iter(range(b.population))
    else:
        b.sampled = True
        rng = random.Random(seed * 1000003 + n * 31 + nprime * 7 + (field == COMPLEX))
        idx = iter(sorted(rng.sample(range(b.population), limit)))
    zero = [0] * rows
    for i in idx:
        i, k = divmod(i, len(combos))
        i, j = divmod(i, len(nus))
        b.scenarios.append(Scenario.build(field, mus[i], nus[j], zero, *combos[k]))
    return b


def bc_buckets(M: int = 2, complex_limit: Optional[int] = 1500, seed: int = 0) -> List[Bucket]:
    """xi used by the balanced/critical suite: n in {2, 3}, n' in {n, n - 1}, both fields."""
    out = []
    for field in (REAL, COMPLEX):
        for n in (2, 3):
            for nprime in (n, n - 1):
                lim = None if field == REAL else complex_limit
                out.append(bc_xi_bucket(field, n, nprime, M, lim, seed))
    return out


@dataclass
class DisplayTally:
    """Outcome of comparing rs_lfactor with the closed displays on one (field, n, n') bucket."""

    field: str
    n: int
    nprime: int
    xi_count: int = 0
    xi_population: int = 0
    compared: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)

    @property
    def sampled(self) -> bool:
        return self.xi_count < self.xi_population

    def label(self) -> str:
        how = f"sample {self.xi_count}/{self.xi_population} xi" if self.sampled else f"all {self.xi_count} xi"
        counts = ", ".join(f"{k} {v}" for k, v in sorted(self.compared.items()))
        return f"{self.field} n={self.n} n'={self.nprime}: {how}; {counts}"


def _tally(t: DisplayTally, sc: Scenario) -> None:
    for name, ok in display_checks(sc).items():
        t.compared[name] = t.compared.get(name, 0) + 1
        if not ok:
            t.mismatches.append((name, sc))


def display_sweep(n_max: int = 3, M: int = 2, complex_samples: int = 400, chi_margin: int = 1, seed: int = 0) -> List[DisplayTally]:
    """rs_lfactor against the closed displays.

    chi ranges over [-W, W] with W = M + n_max + chi_margin.  Over R every xi and every
    chi in that window is used.  Over C `complex_samples` random xi per bucket are
    drawn; each gets three random chi from the window plus all of B(xi) when n' = n >= 2,
    so that the minus-case rewriting is exercised.
    """
    W = M + n_max + chi_margin
    rng = random.Random(seed)
    out = []
    for n in range(1, n_max + 1):
        for m in (n, n - 1):
            if m < 1:
                continue
            ws, vs = dominant_weights(n, -M, M), dominant_weights(m, -M, M)
            t = DisplayTally(REAL, n, m)
            em = (0, 1) if n % 2 else (0,)
            en = (0, 1) if m % 2 else (0,)
            for mu, nu, a, b in itertools.product(ws, vs, em, en):
                t.xi_count += 1
                for c, d in itertools.product(range(-W, W + 1), (0, 1)):
                    _tally(t, Scenario.build(REAL, [mu], [nu], [c], a, b, d))
            t.xi_population = t.xi_count
            out.append(t)
            t = DisplayTally(COMPLEX, n, m, xi_population=(len(ws) * len(vs)) ** 2)
            for _ in range(complex_samples):
                mu = [rng.choice(ws), rng.choice(ws)]
                nu = [rng.choice(vs), rng.choice(vs)]
                chis = [(rng.randint(-W, W), rng.randint(-W, W)) for _ in range(3)]
                if m == n >= 2:
                    chis += [tuple(d.to_int() for d in x.differential) for x in balanced_characters(Scenario.build(COMPLEX, mu, nu, [0, 0]))]
                t.xi_count += 1
                for c in chis:
                    _tally(t, Scenario.build(COMPLEX, mu, nu, list(c)))
            out.append(t)
    return out
