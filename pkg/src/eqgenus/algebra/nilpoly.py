"""Truncated graded-commutative rings generated by even-degree nilpotent classes."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Mapping, Optional, Sequence

from .scalars import inverse, psi, rank


@dataclass(frozen=True)
class GradedRing:
    """Generator table of Q[g_1..g_k] / (g_i^nil_i, everything above degree cap).

    ``nil[i] is None`` leaves the i-th generator bounded only by the cap;
    ``cap is None`` disables the degree truncation.
    """

    names: tuple[str, ...]
    degrees: tuple[int, ...]
    nil: tuple[Optional[int], ...]
    cap: Optional[int]

    def __post_init__(self):
        if not (len(self.names) == len(self.degrees) == len(self.nil)):
            raise ValueError("generator table columns differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator names: {self.names}")
        if any(d <= 0 or d % 2 for d in self.degrees):
            raise ValueError("generators must have positive even degree")

    @property
    def ngens(self) -> int:
        return len(self.names)

    def degree(self, mono: tuple[int, ...]) -> int:
        return sum(e * d for e, d in zip(mono, self.degrees))

    def admits(self, mono: tuple[int, ...]) -> bool:
        for e, n in zip(mono, self.nil):
            if n is not None and e >= n:
                return False
        return self.cap is None or self.degree(mono) <= self.cap

    def unit_mono(self) -> tuple[int, ...]:
        return (0,) * self.ngens

    def gen_mono(self, i: int) -> tuple[int, ...]:
        return tuple(1 if j == i else 0 for j in range(self.ngens))

    def index(self, name: str) -> int:
        return self.names.index(name)

    def depth(self) -> int:
        """Largest power of the augmentation ideal that survives truncation."""
        if self.cap is not None:
            return self.cap // 2
        if any(n is None for n in self.nil):
            raise ValueError("ring has an unbounded generator")
        return sum(n - 1 for n in self.nil)


POINT_RING = GradedRing((), (), (), 0)


class NilPoly:
    __slots__ = ("ring", "terms")
    _rank = 3

    def __init__(self, ring: GradedRing, terms: Mapping[tuple[int, ...], Any] | None = None):
        self.ring = ring
        self.terms = {
            m: Fraction(c) if type(c) is int else c for m, c in (terms or {}).items() if c
        }

    # -- constructors -----------------------------------------------------
    @classmethod
    def const(cls, ring: GradedRing, c) -> "NilPoly":
        return cls(ring, {ring.unit_mono(): c})

    @classmethod
    def one(cls, ring: GradedRing) -> "NilPoly":
        return cls.const(ring, Fraction(1))

    @classmethod
    def gen(cls, ring: GradedRing, name: str | int, c=Fraction(1)) -> "NilPoly":
        i = ring.index(name) if isinstance(name, str) else name
        mono = ring.gen_mono(i)
        return cls(ring, {mono: c} if ring.admits(mono) else {})

    @classmethod
    def linear(cls, ring: GradedRing, coeffs: Sequence) -> "NilPoly":
        """sum_i coeffs[i] * g_i."""
        out = {}
        for i, a in enumerate(coeffs):
            if a:
                m = ring.gen_mono(i)
                if ring.admits(m):
                    out[m] = Fraction(a) if isinstance(a, int) else a
        return cls(ring, out)

    # -- arithmetic ---------------------------------------------------------
    def _check(self, other: "NilPoly"):
        if other.ring != self.ring:
            raise ValueError("NilPoly operands live in different rings")

    def __add__(self, other):
        if isinstance(other, NilPoly):
            self._check(other)
            out = dict(self.terms)
            for m, c in other.terms.items():
                out[m] = out[m] + c if m in out else c
            return NilPoly(self.ring, out)
        if rank(other) < self._rank:
            return self + NilPoly.const(self.ring, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return NilPoly(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, NilPoly) or rank(other) < self._rank:
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, NilPoly):
            if rank(other) < self._rank:
                if not other:
                    return NilPoly(self.ring)
                return NilPoly(self.ring, {m: c * other for m, c in self.terms.items()})
            return NotImplemented
        self._check(other)
        ring = self.ring
        nil, cap, degs = ring.nil, ring.cap, ring.degrees
        left = [(m, c, ring.degree(m)) for m, c in self.terms.items()]
        right = [(m, c, ring.degree(m)) for m, c in other.terms.items()]
        out: dict = {}
        for m1, c1, d1 in left:
            for m2, c2, d2 in right:
                if cap is not None and d1 + d2 > cap:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                if any(n is not None and e >= n for e, n in zip(m, nil)):
                    continue
                p = c1 * c2
                out[m] = out[m] + p if m in out else p
        return NilPoly(ring, out)

    def __rmul__(self, other):
        if rank(other) < self._rank:
            if not other:
                return NilPoly(self.ring)
            return NilPoly(self.ring, {m: other * c for m, c in self.terms.items()})
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return nil_invert(self) ** (-e)
        out = NilPoly.one(self.ring)
        base = self
        while e:
            if e & 1:
                out = out * base
            e >>= 1
            if e:
                base = base * base
        return out

    def __eq__(self, other):
        if isinstance(other, NilPoly):
            if other.ring != self.ring:
                return False
            keys = self.terms.keys() | other.terms.keys()
            zero = Fraction(0)
            return all(self.terms.get(m, zero) == other.terms.get(m, zero) for m in keys)
        if rank(other) < self._rank:
            return self == NilPoly.const(self.ring, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ----------------------------------------------------------
    def constant_term(self):
        return self.terms.get(self.ring.unit_mono(), Fraction(0))

    def coefficient(self, mono: tuple[int, ...]):
        return self.terms.get(tuple(mono), Fraction(0))

    def homogeneous(self, degree: int) -> "NilPoly":
        return NilPoly(
            self.ring, {m: c for m, c in self.terms.items() if self.ring.degree(m) == degree}
        )

    def is_homogeneous(self, degree: int) -> bool:
        return all(self.ring.degree(m) == degree for m in self.terms)

    def map_scalars(self, fn) -> "NilPoly":
        return NilPoly(self.ring, {m: fn(c) for m, c in self.terms.items()})

    def scale_by_degree(self, fn) -> "NilPoly":
        """Multiply the degree-2j part by fn(j)."""
        return NilPoly(
            self.ring, {m: c * fn(self.ring.degree(m) // 2) for m, c in self.terms.items()}
        )

    def psi(self, k: int) -> "NilPoly":
        """Adams operation psi^k acting on a Chern character."""
        return NilPoly(
            self.ring,
            {m: psi(c, k) * Fraction(k) ** (self.ring.degree(m) // 2) for m, c in self.terms.items()},
        )

    def substitute(self, images: Sequence["NilPoly"], target: GradedRing) -> "NilPoly":
        """Ring map sending generator i to images[i]; scalars are kept."""
        out = NilPoly(target)
        powers: list[dict[int, NilPoly]] = [{} for _ in images]

        def power(i: int, e: int) -> NilPoly:
            cache = powers[i]
            if e not in cache:
                cache[e] = images[i] ** e
            return cache[e]

        for m, c in self.terms.items():
            term = NilPoly.const(target, c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def linear_coefficients(self) -> list:
        """Coefficients of the generators in a degree-2 class."""
        return [self.coefficient(self.ring.gen_mono(i)) for i in range(self.ring.ngens)]

    def __repr__(self):
        return f"NilPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda mc: (self.ring.degree(mc[0]), mc[0])):
            mono = "*".join(
                n if e == 1 else f"{n}^{e}" for n, e in zip(self.ring.names, m) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                cs = str(c)
                parts.append((f"({cs})" if " " in cs else cs) + "*" + mono)
        return " + ".join(parts).replace("+ -", "- ")


def nil_exp(c: NilPoly) -> NilPoly:
    """exp(c) = sum c^k / k!, a finite sum because c is nilpotent."""
    if c.constant_term():
        raise ValueError("nil_exp needs a class with vanishing degree-0 term")
    out = NilPoly.one(c.ring)
    power = NilPoly.one(c.ring)
    k = 0
    while True:
        k += 1
        power = power * c
        if not power:
            return out
        out = out + power * Fraction(1, factorial(k))


def nil_invert(c: NilPoly) -> NilPoly:
    """Inverse of a class whose degree-0 term is a unit of the scalar domain."""
    a0 = c.constant_term()
    if not a0:
        raise ZeroDivisionError("nil_invert needs an invertible degree-0 term")
    a0inv = inverse(a0)
    n = (c - NilPoly.const(c.ring, a0)) * a0inv
    # 1/(a0 (1 + n)) = a0^-1 * sum (-n)^k
    out = NilPoly.one(c.ring)
    power = NilPoly.one(c.ring)
    while True:
        power = -(power * n)
        if not power:
            break
        out = out + power
    return out * a0inv


def evaluate_series(coeffs: Sequence, c: NilPoly) -> NilPoly:
    """sum_k coeffs[k] * c^k by Horner's rule (c nilpotent, so the list may be cut)."""
    out = NilPoly(c.ring)
    for a in reversed(coeffs):
        out = out * c + NilPoly.const(c.ring, a)
    return out
