"""Laurent polynomials and reduced rational functions in one circle variable."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Any, Iterable, Optional

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_gcd

from .scalars import coords, psi, rank
from .ypoly import format_poly


class LaurentPoly:
    """Finite sum of c_e * var^e with integer (possibly negative) exponents."""

    __slots__ = ("terms", "var")
    _rank = 1

    def __init__(self, terms: dict[int, Any] | None = None, var: str = "u"):
        self.terms = {
            e: Fraction(c) if type(c) is int else c for e, c in (terms or {}).items() if c
        }
        self.var = var

    @classmethod
    def const(cls, c, var: str = "u") -> "LaurentPoly":
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, e: int, c=1, var: str = "u") -> "LaurentPoly":
        return cls({e: Fraction(c) if isinstance(c, int) else c}, var)

    def _lift(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if rank(other) < self._rank:
            return LaurentPoly({0: other}, self.var)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            out[e] = out[e] + c if e in out else c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if rank(other) < self._rank:
            if not other:
                return LaurentPoly({}, self.var)
            return LaurentPoly({e: c * other for e, c in self.terms.items()}, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        o = self._lift(other)
        out: dict[int, Any] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = e1 + e2
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return LaurentPoly(out, self.var)

    def __rmul__(self, other):
        if rank(other) < self._rank:
            if not other:
                return LaurentPoly({}, self.var)
            return LaurentPoly({e: other * c for e, c in self.terms.items()}, self.var)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = LaurentPoly({0: Fraction(1)}, self.var)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "LaurentPoly":
        if len(self.terms) != 1:
            raise ZeroDivisionError("only monomials are units among Laurent polynomials")
        (e, c), = self.terms.items()
        inv = 1 / c if isinstance(c, (int, Fraction)) else c.inverse()
        return LaurentPoly({-e: inv}, self.var)

    def __eq__(self, other):
        o = self._lift(other) if not isinstance(other, RationalFunction) else None
        if o is None:
            return NotImplemented
        if self.terms.keys() != o.terms.keys():
            return False
        return all(self.terms[e] == o.terms[e] for e in self.terms)

    def __hash__(self):
        if self.is_constant():
            return hash(self.terms.get(0, Fraction(0)))
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def constant_value(self):
        return self.terms.get(0, Fraction(0))

    def coefficient(self, e: int):
        return self.terms.get(e, Fraction(0))

    def min_exp(self) -> int:
        return min(self.terms) if self.terms else 0

    def max_exp(self) -> int:
        return max(self.terms) if self.terms else 0

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.terms.items()}, self.var)

    def psi(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e * k: psi(c, k) for e, c in self.terms.items()}, self.var)

    def map_coeffs(self, fn) -> "LaurentPoly":
        return LaurentPoly({e: fn(c) for e, c in self.terms.items()}, self.var)

    def evaluate(self, x):
        x = Fraction(x)
        total = 0
        for e, c in self.terms.items():
            total = total + c * x**e
        return total

    def is_rational(self) -> bool:
        return all(isinstance(c, (int, Fraction)) for c in self.terms.values())

    def __repr__(self):
        return f"LaurentPoly({ {e: str(c) for e, c in sorted(self.terms.items())} }, var={self.var!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        exps = sorted(self.terms)
        if self.is_rational():
            return format_poly([self.terms[e] for e in exps], self.var, exps)
        parts = []
        for e in exps:
            mono = "" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
            c = self.terms[e]
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


# -- dense rational polynomial helpers (ascending coefficient lists) --------


def _as_int_primitive(p: list[Fraction]) -> list[int]:
    den = 1
    for c in p:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def poly_gcd(polys: Iterable[list[Fraction]]) -> list[Fraction]:
    """Gcd over Q of ascending coefficient lists, normalized to constant term 1
    when that is nonzero (else leading coefficient 1)."""
    g: list | None = None
    for p in polys:
        if not any(p):
            continue
        q = [ZZ(c) for c in reversed(_as_int_primitive(p))]
        while q and q[0] == 0:
            q.pop(0)
        g = q if g is None else dup_gcd(g, q, ZZ)
        if len(g) == 1:
            break
    if g is None:
        return []
    out = [Fraction(int(c)) for c in reversed(g)]
    while out and out[-1] == 0:
        out.pop()
    norm = out[0] if out[0] != 0 else out[-1]
    return [c / norm for c in out]


def _laurent_from_dense(p: list, low: int, var: str) -> LaurentPoly:
    return LaurentPoly({low + i: c for i, c in enumerate(p) if c}, var)


def _dense(f: LaurentPoly) -> tuple[list, int]:
    """Coefficients of f / var^low as an ascending list, and low."""
    if not f.terms:
        return [], 0
    low, high = f.min_exp(), f.max_exp()
    return [f.terms.get(e, 0) for e in range(low, high + 1)], low


def _exact_divide(f: LaurentPoly, g: list[Fraction]) -> LaurentPoly:
    """f / g for a rational polynomial g with g[0] != 0, assuming exactness."""
    if len(g) == 1:
        return f * (1 / g[0]) if g[0] != 1 else f
    dense, low = _dense(f)
    n = len(dense) - len(g) + 1
    if n <= 0:
        raise ArithmeticError("inexact polynomial division")
    rem = list(dense)
    quot = []
    inv0 = 1 / g[0]
    for i in range(n):
        c = rem[i] * inv0 if rem[i] else 0
        quot.append(c)
        if c:
            for j in range(1, len(g)):
                if g[j]:
                    rem[i + j] = rem[i + j] - c * g[j]
    if any(rem[n:]):
        raise ArithmeticError("inexact polynomial division")
    return _laurent_from_dense(quot, low, f.var)


class RationalFunction:
    """Reduced quotient num/den of Laurent polynomials in one variable.

    The denominator has rational coefficients, no monomial factor, and
    constant term 1; the numerator may have coefficients in any scalar
    domain that exposes rational coordinates.  Together with reduction by the
    polynomial gcd this makes the representation canonical, so equality is
    structural.
    """

    __slots__ = ("num", "den")
    _rank = 1.5

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None, reduce: bool = True):
        var = num.var
        if den is None:
            den = LaurentPoly.const(Fraction(1), var)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not den.is_rational():
            raise TypeError("denominator must have rational coefficients")
        low = den.min_exp()
        c0 = Fraction(den.terms[low])
        den = LaurentPoly({e - low: c / c0 for e, c in den.terms.items()}, var)
        num = num.shift(-low) * (1 / c0)
        if reduce and not den.is_constant() and num:
            num, den = _reduce(num, den)
        if not num:
            den = LaurentPoly.const(Fraction(1), var)
        self.num, self.den = num, den

    @property
    def var(self) -> str:
        return self.num.var

    def _lift(self, other) -> Optional["RationalFunction"]:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction(other, reduce=False)
        if rank(other) < 1:
            return RationalFunction(LaurentPoly.const(other, self.var), reduce=False)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        d1, _ = _dense(self.den)
        d2, _ = _dense(o.den)
        g = poly_gcd([d1, d2])
        c1 = _exact_divide(o.den, g)  # den2 / g
        c2 = _exact_divide(self.den, g)  # den1 / g
        return RationalFunction(self.num * c1 + o.num * c2, self.den * c1)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if rank(other) < 1:
            return RationalFunction(self.num * other, self.den, reduce=False)
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    def evaluate(self, x):
        d = self.den.evaluate(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num.evaluate(x) * (1 / d)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den.is_constant():
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def _reduce(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    dd, _ = _dense(den)
    nd, _ = _dense(num)
    cs = [coords(c) if c else [] for c in nd]
    width = max(len(x) for x in cs)
    comps = [[Fraction(0)] * len(nd) for _ in range(width)]
    for i, xs in enumerate(cs):
        for k, x in enumerate(xs):
            comps[k][i] = x
    g = poly_gcd([dd] + comps)
    if len(g) <= 1:
        return num, den
    return _exact_divide(num, g), _exact_divide(den, g)


def rf_is_constant(f: RationalFunction):
    """The constant value of f, or None if f depends on the variable."""
    if f.den.is_constant() and f.num.is_constant():
        return f.num.constant_value()
    return None


def rf_monomial_constant(f: RationalFunction):
    """(exponent, constant) if f = c * var^e, else None."""
    if not f.den.is_constant():
        return None
    if not f.num:
        return 0, Fraction(0)
    if len(f.num.terms) != 1:
        return None
    (e, c), = f.num.terms.items()
    return e, c


def rf_limit_at_infinity(f: RationalFunction):
    """lim f(t) as t -> infinity, or None when the limit is infinite."""
    if not f.num:
        return Fraction(0)
    top_n, top_d = f.num.max_exp(), f.den.max_exp()
    if top_n > top_d:
        return None
    if top_n < top_d:
        return Fraction(0)
    return f.num.terms[top_n] * (1 / f.den.terms[top_d])
