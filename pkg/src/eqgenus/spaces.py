"""Model manifolds: truncated cohomology ring, integration, tangent root data."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from .algebra import POINT_RING, GradedRing, NilPoly
from .errors import PreconditionError, ScenarioError


@dataclass(frozen=True)
class RootData:
    """Stable tangent data: T + trivial*C = sum(positive) - sum(negative)."""

    positive: tuple[NilPoly, ...]
    negative: tuple[NilPoly, ...] = ()
    trivial: int = 0

    @property
    def rank(self) -> int:
        return len(self.positive) - len(self.negative)

    @property
    def is_virtual(self) -> bool:
        return bool(self.negative)


@dataclass(frozen=True)
class OrientedData:
    pontrjagin: NilPoly
    euler: NilPoly


@dataclass(frozen=True, eq=False)
class SpaceModel:
    name: str
    real_dim: int
    ring: GradedRing
    top: tuple[int, ...]
    scale: Fraction
    tangent: Union[RootData, OrientedData]
    descriptor: dict = field(default_factory=dict, compare=False)

    @property
    def complex_dim(self) -> int:
        return self.real_dim // 2

    @property
    def is_complex(self) -> bool:
        return isinstance(self.tangent, RootData)

    def integrate(self, c: NilPoly) -> Any:
        """Top-degree coefficient times the normalization scalar."""
        if c.ring != self.ring:
            raise ValueError("class does not live in this model's ring")
        coeff = c.coefficient(self.top)
        if not coeff:
            return Fraction(0)
        return self.scale * coeff

    def one(self) -> NilPoly:
        return NilPoly.one(self.ring)

    def gen(self, name: str) -> NilPoly:
        return NilPoly.gen(self.ring, name)

    def c1(self) -> NilPoly:
        t = self._complex("c1")
        out = NilPoly(self.ring)
        for r in t.positive:
            out = out + r
        for r in t.negative:
            out = out - r
        return out

    def chern_class(self) -> NilPoly:
        """Total Chern class of the (stable) tangent bundle."""
        t = self._complex("Chern classes")
        out = self.one()
        for r in t.positive:
            out = out * (1 + r)
        for r in t.negative:
            out = out * (1 + r) ** -1
        return out

    def euler_class(self) -> NilPoly:
        if isinstance(self.tangent, OrientedData):
            return self.tangent.euler
        return self.chern_class().homogeneous(self.real_dim)

    def euler_characteristic(self) -> Fraction:
        return self.integrate(self.euler_class())

    def _complex(self, what: str) -> RootData:
        if not isinstance(self.tangent, RootData):
            raise PreconditionError(f"{what} need a complex model; {self.name} is oriented-only")
        return self.tangent

    def __repr__(self):
        return f"SpaceModel({self.name})"


def point() -> SpaceModel:
    return SpaceModel("pt", 0, POINT_RING, (), Fraction(1), RootData(()), {"type": "point"})


def _projective_ring(n: int, name: str = "x") -> GradedRing:
    return GradedRing((name,), (2,), (n + 1,), 2 * n)


def cp(n: int) -> SpaceModel:
    """Complex projective n-space with hyperplane class x."""
    if n < 1:
        raise PreconditionError("cp(n) needs n >= 1; use point() for n = 0")
    ring = _projective_ring(n)
    x = NilPoly.gen(ring, "x")
    tangent = RootData(tuple([x] * (n + 1)), (), 1)
    return SpaceModel(f"CP{n}", 2 * n, ring, (n,), Fraction(1), tangent, {"type": "cp", "n": n})


def hypersurface(m: int, d: int) -> SpaceModel:
    """Degree-d hypersurface in CP^(m+1), modelled through the ambient ring."""
    if m < 1 or d < 1:
        raise PreconditionError("hypersurface(m, d) needs m >= 1 and d >= 1")
    ring = _projective_ring(m)
    x = NilPoly.gen(ring, "x")
    tangent = RootData(tuple([x] * (m + 2)), (x * d,), 1)
    return SpaceModel(
        f"X{d}<CP{m + 1}", 2 * m, ring, (m,), Fraction(d), tangent,
        {"type": "hypersurface", "m": m, "d": d},
    )


def even_sphere(n: int) -> SpaceModel:
    """S^(2n), oriented only, with trivial Pontrjagin class."""
    if n < 1:
        raise PreconditionError("even_sphere(n) needs n >= 1")
    ring = GradedRing(("u",), (2 * n,), (2,), 2 * n)
    u = NilPoly.gen(ring, "u")
    data = OrientedData(NilPoly.one(ring), u * 2)
    return SpaceModel(f"S{2 * n}", 2 * n, ring, (1,), Fraction(1), data, {"type": "sphere", "n": n})


def _fresh(name: str, taken: set[str]) -> str:
    if name not in taken:
        return name
    k = 2
    while f"{name}{k}" in taken:
        k += 1
    return f"{name}{k}"


def product(A: SpaceModel, B: SpaceModel) -> SpaceModel:
    if A.is_complex != B.is_complex:
        raise PreconditionError("cannot multiply a complex model with an oriented-only one")
    taken = set(A.ring.names)
    names_b = []
    for n in B.ring.names:
        fresh = _fresh(n, taken)
        taken.add(fresh)
        names_b.append(fresh)
    cap = None if A.ring.cap is None or B.ring.cap is None else A.ring.cap + B.ring.cap
    ring = GradedRing(
        A.ring.names + tuple(names_b),
        A.ring.degrees + B.ring.degrees,
        A.ring.nil + B.ring.nil,
        cap,
    )
    ka = A.ring.ngens
    to_a = [NilPoly.gen(ring, i) for i in range(ka)]
    to_b = [NilPoly.gen(ring, ka + i) for i in range(B.ring.ngens)]

    def ia(c):
        return c.substitute(to_a, ring)

    def ib(c):
        return c.substitute(to_b, ring)

    if A.is_complex:
        ta, tb = A.tangent, B.tangent
        tangent = RootData(
            tuple(ia(r) for r in ta.positive) + tuple(ib(r) for r in tb.positive),
            tuple(ia(r) for r in ta.negative) + tuple(ib(r) for r in tb.negative),
            ta.trivial + tb.trivial,
        )
    else:
        tangent = OrientedData(
            ia(A.tangent.pontrjagin) * ib(B.tangent.pontrjagin),
            ia(A.tangent.euler) * ib(B.tangent.euler),
        )
    desc = {"type": "product", "factors": [A.descriptor, B.descriptor]}
    return SpaceModel(
        f"{A.name}x{B.name}", A.real_dim + B.real_dim, ring, A.top + B.top,
        A.scale * B.scale, tangent, desc,
    )


def c1_coefficients(M: SpaceModel) -> list[Fraction]:
    """c1 in the basis of degree-2 generators."""
    c1 = M.c1()
    out = []
    for i, d in enumerate(M.ring.degrees):
        out.append(c1.coefficient(M.ring.gen_mono(i)) if d == 2 else Fraction(0))
    return out


def is_c1_divisible(M: SpaceModel, N: int) -> bool:
    """True iff c1(M) = 0 mod N in the integral lattice spanned by the generators."""
    if not M.is_complex:
        raise PreconditionError(f"c1 divisibility needs a complex model; {M.name} is oriented-only")
    if N < 1:
        raise PreconditionError("divisor must be positive")
    for a in c1_coefficients(M):
        if a.denominator != 1 or a.numerator % N:
            return False
    return True


def is_spin(M: SpaceModel) -> bool:
    """w2 = c1 mod 2 for complex models; oriented-only models here have trivial
    stable tangent bundle and are spin."""
    if not M.is_complex:
        return True
    return is_c1_divisible(M, 2)


def from_descriptor(desc: dict) -> SpaceModel:
    """Build a model from its JSON descriptor, e.g. ``{"type": "cp", "n": 3}``."""
    if not isinstance(desc, dict) or "type" not in desc:
        raise ScenarioError("space descriptor must be an object with a 'type' field")
    kind = desc["type"]
    try:
        if kind == "cp":
            return cp(_int(desc, "n"))
        if kind == "hypersurface":
            return hypersurface(_int(desc, "m"), _int(desc, "d"))
        if kind == "sphere":
            return even_sphere(_int(desc, "n"))
        if kind == "point":
            return point()
        if kind == "product":
            factors = desc.get("factors")
            if not isinstance(factors, list) or not factors:
                raise ScenarioError("product needs a nonempty 'factors' list")
            out = from_descriptor(factors[0])
            for f in factors[1:]:
                out = product(out, from_descriptor(f))
            if len(factors) > 2:
                out = _with_descriptor(out, desc)
            return out
    except PreconditionError as exc:
        raise ScenarioError(str(exc)) from exc
    raise ScenarioError(f"unknown space type {kind!r}")


def _with_descriptor(M: SpaceModel, desc: dict) -> SpaceModel:
    return SpaceModel(M.name, M.real_dim, M.ring, M.top, M.scale, M.tangent, desc)


def _int(desc: dict, key: str) -> int:
    v = desc.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise ScenarioError(f"space field {key!r} must be an integer")
    return v
