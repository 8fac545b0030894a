"""Polynomials in a formal parameter y, truncated above a fixed degree.

Values of chi_y-type genera of a manifold of complex dimension n are
polynomials of degree <= n, so computing in Q[y]/(y^(n+1)) is exact for
them while still allowing (1 + y) and similar units to be inverted.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import rank


class YPoly:
    __slots__ = ("coeffs", "cap")
    _rank = 0

    def __init__(self, coeffs, cap: int):
        cs = [Fraction(c) for c in list(coeffs)[: cap + 1]]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.cap = cap

    @classmethod
    def gen(cls, cap: int) -> "YPoly":
        return cls([0, 1], cap)

    def _coerce(self, other):
        if isinstance(other, YPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return YPoly([other], self.cap)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = o.coeffs + (0,) * (n - len(o.coeffs))
        return YPoly([x + y for x, y in zip(a, b)], min(self.cap, o.cap))

    __radd__ = __add__

    def __neg__(self):
        return YPoly([-c for c in self.coeffs], self.cap)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return YPoly([c * other for c in self.coeffs], self.cap)
        if not isinstance(other, YPoly) or rank(other) > self._rank:
            return NotImplemented
        cap = min(self.cap, other.cap)
        out = [Fraction(0)] * min(len(self.coeffs) + len(other.coeffs), cap + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > cap:
                    break
                out[i + j] += a * b
        return YPoly(out, cap)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = YPoly([1], self.cap)
        for _ in range(e):
            out = out * self
        return out

    def inverse(self) -> "YPoly":
        if not self.coeffs or self.coeffs[0] == 0:
            raise ZeroDivisionError(f"{self} is not a unit in Q[y]/(y^{self.cap + 1})")
        a0 = self.coeffs[0]
        inv = [1 / a0]
        for k in range(1, self.cap + 1):
            s = sum(
                self.coeffs[j] * inv[k - j]
                for j in range(1, min(k, len(self.coeffs) - 1) + 1)
            )
            inv.append(-s / a0)
        return YPoly(inv, self.cap)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def coords(self) -> list[Fraction]:
        return list(self.coeffs) + [Fraction(0)] * (self.cap + 1 - len(self.coeffs))

    def evaluate(self, y):
        out = 0
        for c in reversed(self.coeffs):
            out = out * y + c
        return out

    def __repr__(self):
        return f"YPoly({[str(c) for c in self.coeffs]}, cap={self.cap})"

    def __str__(self):
        return format_poly(self.coeffs, "y")


def format_poly(coeffs, var: str, exps=None) -> str:
    """Human-readable polynomial, lowest degree first: ``1 - y + y^2``."""
    if exps is None:
        exps = range(len(coeffs))
    parts: list[tuple[str, str]] = []
    for e, c in zip(exps, coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if e == 0:
            body = str(a)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
