"""Floating-point oracle: Lanczos complex gamma and numeric evaluation of gamma products."""

from __future__ import annotations

import cmath
import math

# Lanczos coefficients for g = 7, n = 9
_G = 7
_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


class NearPoleError(ValueError):
    """Evaluation requested too close to a pole."""


def _finite(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite input {z}")
    return z


def complex_gamma(z: complex) -> complex:
    z = _finite(z)
    k = round(z.real)
    if k <= 0 and abs(z - k) < 1e-12:
        raise NearPoleError(f"gamma has a pole at {k}")
    if z.real < 0.5:
        # reflection formula
        return math.pi / (cmath.sin(math.pi * z) * complex_gamma(1 - z))
    z -= 1
    x = _COEF[0]
    for k in range(1, len(_COEF)):
        x += _COEF[k] / (z + k)
    t = z + _G + 0.5
    return math.sqrt(2 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * x


def gamma_R(z: complex) -> complex:
    """pi^(-z/2) Gamma(z/2)."""
    z = complex(z)
    return cmath.exp(-z / 2 * math.log(math.pi)) * complex_gamma(z / 2)


def gamma_C(z: complex) -> complex:
    """2 (2 pi)^(-z) Gamma(z)."""
    z = complex(z)
    return 2 * cmath.exp(-z * math.log(2 * math.pi)) * complex_gamma(z)


def _pole_distance(flavor: str, arg: complex) -> float:
    """Distance from arg to the nearest pole of Gamma_R or Gamma_C."""
    step = 2 if flavor == "R" else 1
    k = min(0, step * round(arg.real / step))
    return abs(arg - k)


def ms_numeric_eval(x, s: complex, eps: int = 1, min_pole_distance: float = 1e-3) -> complex:
    """Evaluate a MeromorphicScalar numerically at s with eps_psi = eps.

    Raises NearPoleError if s lies within min_pole_distance of a pole of any factor.
    """
    s = _finite(s)
    val = x.const.specialize(eps)
    for atom, e in x.atoms:
        arg = atom.s_sign * s + float(atom.shift.to_fraction())
        if _pole_distance(atom.flavor, arg) < min_pole_distance:
            raise NearPoleError(f"{atom} is within {min_pole_distance} of a pole at s={s}")
        g = gamma_C(arg) if atom.flavor == "C" else gamma_R(arg)
        val *= g ** e
    for c, e in x.rational:
        lin = s + float(c.to_fraction())
        if e < 0 and abs(lin) < min_pole_distance:
            raise NearPoleError(f"rational factor vanishes near s={s}")
        val *= lin ** e
    return val


def rel_close(a: complex, b: complex, tol: float = 1e-9) -> bool:
    scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) <= tol * scale
