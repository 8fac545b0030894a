"""Helpers shared by every scalar domain.

A scalar domain here is anything that behaves like a commutative ring with
decidable equality: ``Fraction``, ``CycNumber``, ``YPoly``, and the
composite types built on top of them.  Composite types carry a ``_rank``
class attribute so that mixed binary operations defer to the wider type.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any


def rank(x: Any) -> float:
    return getattr(type(x), "_rank", 0)


def as_fraction(x: Any) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not a rational: {x!r}")


def inverse(x: Any) -> Any:
    """Multiplicative inverse of a unit in its scalar domain."""
    if isinstance(x, (int, Fraction)):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(x)
    return x.inverse()


def coords(x: Any) -> list[Fraction]:
    """Rational coordinates of ``x`` in a fixed Q-basis of its domain."""
    if isinstance(x, (int, Fraction)):
        return [Fraction(x)]
    return x.coords()


def psi(x: Any, k: int) -> Any:
    """Adams operation on a coefficient; plain numbers are fixed."""
    if isinstance(x, (int, Fraction)):
        return x
    fn = getattr(x, "psi", None)
    return x if fn is None else fn(k)
