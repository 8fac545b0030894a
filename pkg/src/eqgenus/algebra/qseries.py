"""Power series in q truncated at a fixed order."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .scalars import inverse, psi, rank


class QSeries:
    __slots__ = ("coeffs",)
    _rank = 2

    def __init__(self, coeffs: Sequence[Any]):
        if not coeffs:
            raise ValueError("a QSeries needs at least the q^0 coefficient")
        self.coeffs = tuple(coeffs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def const(cls, c, order: int) -> "QSeries":
        return cls([c] + [Fraction(0)] * order)

    @classmethod
    def monomial(cls, k: int, c, order: int) -> "QSeries":
        out = [Fraction(0)] * (order + 1)
        if k <= order:
            out[k] = c
        return cls(out)

    def _lift(self, other):
        if isinstance(other, QSeries):
            if other.order != self.order:
                n = min(self.order, other.order)
                return other.truncate(n), n
            return other, self.order
        if rank(other) < self._rank:
            return QSeries.const(other, self.order), self.order
        return None, None

    def truncate(self, order: int) -> "QSeries":
        return QSeries(self.coeffs[: order + 1])

    def __add__(self, other):
        o, n = self._lift(other)
        if o is None:
            return NotImplemented
        return QSeries([a + b for a, b in zip(self.coeffs[: n + 1], o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        o, n = self._lift(other)
        if o is None:
            return NotImplemented
        return QSeries([a - b for a, b in zip(self.coeffs[: n + 1], o.coeffs)])

    def __rsub__(self, other):
        o, n = self._lift(other)
        if o is None:
            return NotImplemented
        return QSeries([b - a for a, b in zip(self.coeffs[: n + 1], o.coeffs)])

    def __mul__(self, other):
        if rank(other) < self._rank:
            return QSeries([c * other for c in self.coeffs])
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            s = 0
            for i in range(k + 1):
                if a[i] and b[k - i]:
                    s = s + a[i] * b[k - i]
            out.append(s)
        return QSeries(out)

    def __rmul__(self, other):
        if rank(other) < self._rank:
            return QSeries([other * c for c in self.coeffs])
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = QSeries.const(Fraction(1), self.order)
        for _ in range(e):
            out = out * self
        return out

    def inverse(self) -> "QSeries":
        a0inv = inverse(self.coeffs[0])
        inv = [a0inv]
        for k in range(1, self.order + 1):
            s = 0
            for j in range(1, k + 1):
                if self.coeffs[j]:
                    s = s + self.coeffs[j] * inv[k - j]
            inv.append(-(s * a0inv) if s else Fraction(0))
        return QSeries(inv)

    def __eq__(self, other):
        o, n = self._lift(other)
        if o is None:
            return NotImplemented
        return all(a == b for a, b in zip(self.coeffs[: n + 1], o.coeffs))

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    def __getitem__(self, k: int):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def map(self, fn) -> "QSeries":
        return QSeries([fn(c) for c in self.coeffs])

    def is_q_constant(self) -> bool:
        return not any(bool(c) for c in self.coeffs[1:])

    def psi(self, k: int) -> "QSeries":
        if not self.is_q_constant():
            raise ValueError("Adams operations on q-dependent classes are not supported")
        return QSeries([psi(self.coeffs[0], k)] + list(self.coeffs[1:]))

    def __repr__(self):
        return f"QSeries({[str(c) for c in self.coeffs]})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
                parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return (" + ".join(parts) or "0") + f" + O(q^{self.order + 1})"

