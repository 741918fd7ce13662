"""Exact archimedean period constants for Rankin-Selberg and Shintani-type zeta integrals."""

from .exact import HalfInt, MonomialConstant
from .characters import SmoothCharacter

__all__ = ["HalfInt", "MonomialConstant", "SmoothCharacter"]
__version__ = "0.1.0"
