"""Fast consistency checks run by `archperiod selftest`."""

from __future__ import annotations

import random

from .characters import COMPLEX, REAL, SmoothCharacter
from .gamma import MeromorphicScalar, gamma_factor
from .geometry import VARIANTS, determinant, open_orbit_check, z_matrix
from .numeric import complex_gamma, ms_numeric_eval, rel_close
from .periods import verify_period_identity
from .rankin import Scenario
from .repdata import numerology_check


def _random_char(rng: random.Random, field: str) -> SmoothCharacter:
    if field == REAL:
        return SmoothCharacter.real(rng.randint(-8, 8), rng.randint(0, 1))
    a = rng.randint(-8, 8)
    return SmoothCharacter.complex(a, a + rng.randint(-5, 5))


def run_selftest(seed: int = 0) -> list:
    rng = random.Random(seed)
    rows = []

    def add(name, ok, detail=""):
        rows.append({"check": name, "ok": bool(ok), "detail": detail})

    add("gamma(1/2)^2 = pi", rel_close(complex_gamma(0.5) ** 2, 3.141592653589793, 1e-12))
    bad = 0
    for _ in range(50):
        field = rng.choice((REAL, COMPLEX))
        w = _random_char(rng, field)
        x = gamma_factor(w) * gamma_factor(w.inverse(), conj=True, s_sign=-1, offset=1)
        bad += x != MeromorphicScalar.one()
    add("gamma(s,w,psi) gamma(1-s,w^-1,psi-bar) = 1", bad == 0, f"{bad} mismatches of 50")
    x = gamma_factor(SmoothCharacter.complex(2, -1))
    s0 = complex(0.3, 0.2)
    add("numeric evaluation is finite", abs(ms_numeric_eval(x, s0, 1)) > 0)
    add("z_k in GL_k(Z), k <= 8", all(abs(determinant(z_matrix(k))) == 1 for k in range(9)))
    add("open orbits, n <= 4", all(open_orbit_check(n, v).open for n in range(1, 5) for v in VARIANTS))
    add(
        "numerology, k <= 10",
        all(a == b for F in (REAL, COMPLEX) for n in range(1, 11) for a, b in numerology_check(F, n).values()),
    )
    for sc in (
        Scenario.build(COMPLEX, [(0, 0), (0, 0)], [(0, 0), (0, 0)], [0, 0]),
        Scenario.build(REAL, [(0, 0, 0)], [(0, 0, 0)], [0]),
        Scenario.build(REAL, [(1, 0)], [(0, -1)], [0]),
        Scenario.build(COMPLEX, [(0,), (0,)], [(0,), (1,)], [0, 0]),
    ):
        rep = verify_period_identity(sc)
        add(f"dual path {sc.field} n={sc.n} {rep.case}", rep.ok and rep.match, rep.error or "")
    return rows
