"""Exact JSON encoding of scalars, characters and series."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .algebra import CycNumber, LaurentPoly, QSeries, RationalFunction, YPoly


def to_json(x: Any):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if isinstance(x, CycNumber):
        return {"modulus": x.modulus, "coefficients": [str(c) for c in x.coeffs]}
    if isinstance(x, YPoly):
        return {"y_coefficients": [str(c) for c in x.coeffs], "text": str(x)}
    if isinstance(x, LaurentPoly):
        return {
            "var": x.var,
            "terms": [[e, to_json(x.terms[e])] for e in sorted(x.terms)],
        }
    if isinstance(x, RationalFunction):
        return {"numerator": to_json(x.num), "denominator": to_json(x.den), "text": str(x)}
    if isinstance(x, QSeries):
        return [to_json(c) for c in x.coeffs]
    if isinstance(x, (list, tuple)):
        return [to_json(v) for v in x]
    if isinstance(x, dict):
        return {str(k): to_json(v) for k, v in x.items()}
    raise TypeError(f"no JSON encoding for {type(x).__name__}")


def scalar_text(x: Any) -> str:
    """Flat human-readable form used by the CSV output."""
    if isinstance(x, QSeries):
        return "; ".join(scalar_text(c) for c in x.coeffs)
    return str(x)
