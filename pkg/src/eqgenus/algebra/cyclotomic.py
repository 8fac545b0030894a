"""Exact arithmetic in cyclotomic fields Q(zeta_d) = Q[x] / Phi_d(x)."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

from .scalars import rank


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdivmod(a: list, b: list) -> tuple[list, list]:
    """Division with remainder of ascending coefficient lists over Q."""
    a = [Fraction(c) for c in a]
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return _trim(q), _trim(a[: len(b) - 1])


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> tuple[int, ...]:
    """Ascending integer coefficients of the d-th cyclotomic polynomial."""
    if d < 1:
        raise ValueError("cyclotomic index must be positive")
    p = [-1] + [0] * (d - 1) + [1]
    for k in range(1, d):
        if d % k == 0:
            p, r = _pdivmod(p, cyclotomic_poly(k))
            assert not r
    return tuple(int(c) for c in p)


def euler_phi(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


def _reduce(p: list, d: int) -> tuple[Fraction, ...]:
    phi = cyclotomic_poly(d)
    n = len(phi) - 1
    p = [Fraction(c) for c in p] + [Fraction(0)] * max(n - len(p), 0)
    for i in range(len(p) - 1, n - 1, -1):
        c = p[i]
        if c:
            for j in range(n + 1):
                p[i - n + j] -= c * phi[j]
    return tuple(p[:n])


class CycNumber:
    """Element of Q(zeta_d), stored in the power basis 1, zeta, ..., zeta^(phi(d)-1)."""

    __slots__ = ("modulus", "coeffs")
    _rank = 0

    def __init__(self, modulus: int, coeffs):
        self.modulus = modulus
        self.coeffs = _reduce(list(coeffs), modulus)

    @classmethod
    def zeta(cls, d: int, k: int = 1) -> "CycNumber":
        k %= d
        return cls(d, [0] * k + [1])

    @classmethod
    def rational(cls, d: int, r) -> "CycNumber":
        return cls(d, [Fraction(r)])

    def _coerce(self, other):
        if isinstance(other, CycNumber):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"cyclotomic modulus mismatch: {self.modulus} vs {other.modulus}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.modulus, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNumber(self.modulus, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.modulus, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.modulus, [a * other for a in self.coeffs])
        if rank(other) > self._rank or not isinstance(other, CycNumber):
            return NotImplemented
        o = self._coerce(other)
        return CycNumber(self.modulus, _pmul(list(self.coeffs), list(o.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = CycNumber(self.modulus, [1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self) -> "CycNumber":
        # extended Euclid against Phi_d
        a = _trim(list(self.coeffs))
        if not a:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        r0, r1 = list(cyclotomic_poly(self.modulus)), a
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _pdivmod(r0, r1)
            r0, r1 = r1, r
            qs = _pmul(q, s1)
            s0, s1 = s1, _trim([x - y for x, y in _zip_pad(s0, qs)])
        c = Fraction(r1[0])
        return CycNumber(self.modulus, [x / c for x in s1])

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.modulus, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def coords(self) -> list[Fraction]:
        return list(self.coeffs)

    def conjugate(self) -> "CycNumber":
        """Complex conjugate, i.e. zeta -> zeta^-1."""
        out = CycNumber(self.modulus, [])
        inv = CycNumber.zeta(self.modulus, -1)
        power = CycNumber(self.modulus, [1])
        for c in self.coeffs:
            out = out + power * c
            power = power * inv
        return out

    def __repr__(self):
        return f"CycNumber({self.modulus}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"{body} (z = zeta_{self.modulus})" if not self.is_rational() else body


def _zip_pad(a: list, b: list):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return zip(a, b)


def level_y(N: int, beta: int = 1) -> CycNumber:
    """y = -exp(2 pi i beta / N), exactly, inside modulus lcm(2, N)."""
    d = 2 * N // gcd(2, N)
    return -CycNumber.zeta(d, beta * (d // N))
