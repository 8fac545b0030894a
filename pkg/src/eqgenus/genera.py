"""Multiplicative genera, twisted indices and elliptic-genus q-expansions.

Every genus except the Euler characteristic is described by a characteristic
power series written as Q(x) = x * A(s) / B(s) with s = exp(x / h), where A and
B are Laurent polynomials in s and B(1) = 0.  This form is shared with the
equivariant engine, which substitutes s -> exp(c/h) * u^(d m / h) in it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Optional, Union

from .algebra import CycNumber, NilPoly, QSeries, YPoly, evaluate_series, level_y
from .algebra.scalars import inverse
from .bundles import (
    BundleExpr,
    ChernContext,
    KRoot,
    Line,
    Param,
    Scale,
    Sum,
    T,
    TD,
    Tensor,
    evaluate_character,
    dirac_cusp_family,
    level_n_family,
    loop_signature_family,
)
from .errors import PreconditionError, ScenarioError
from .spaces import SpaceModel, c1_coefficients, is_c1_divisible, is_spin

Scalar = Any


@dataclass(frozen=True)
class GenusKind:
    """One of euler, signature, ahat, todd, chi_y.

    For chi_y, ``y`` is None (formal parameter) or a bound scalar such as a
    ``CycNumber``.
    """

    name: str
    y: Any = None

    NAMES = ("euler", "signature", "ahat", "todd", "chi_y")

    def __post_init__(self):
        if self.name not in self.NAMES:
            raise ScenarioError(f"unknown genus {self.name!r}")
        if self.y is not None and self.name != "chi_y":
            raise ScenarioError("only chi_y takes a y parameter")

    @property
    def complex_only(self) -> bool:
        return self.name in ("todd", "chi_y")

    def resolve_y(self, n: int):
        """The y to compute with on a model of complex dimension n."""
        if self.name != "chi_y":
            return None
        return YPoly.gen(n) if self.y is None else self.y

    def shape(self, y=None) -> tuple[dict, dict, int]:
        """(A, B, h) as exponent -> coefficient maps."""
        one = Fraction(1)
        if self.name == "signature":
            return {0: one, -1: one}, {0: one, -1: -one}, 1
        if self.name == "todd":
            return {0: one}, {0: one, -1: -one}, 1
        if self.name == "chi_y":
            return {0: one, -1: y}, {0: one, -1: -one}, 1
        if self.name == "ahat":
            return {0: one}, {1: one, -1: -one}, 2
        raise PreconditionError("the Euler characteristic has no characteristic series")

    def __str__(self):
        if self.name == "chi_y" and self.y is not None:
            return f"chi_y(y={self.y})"
        return self.name


EULER = GenusKind("euler")
SIGNATURE = GenusKind("signature")
AHAT = GenusKind("ahat")
TODD = GenusKind("todd")


def chi_y(y=None) -> GenusKind:
    return GenusKind("chi_y", y)


def _exp_series(coeffs: dict, h: int, order: int) -> list:
    """Taylor coefficients in x of sum_e coeffs[e] * exp(e x / h)."""
    out = []
    for k in range(order + 1):
        s = Fraction(0)
        for e, c in coeffs.items():
            if e:
                s = s + c * (Fraction(e, h) ** k)
            elif k == 0:
                s = s + c
        out.append(s * Fraction(1, factorial(k)))
    return out


def characteristic_series(g: GenusKind, order: int, y=None) -> list:
    """Coefficients a_0..a_order of Q(x) = x A(e^(x/h)) / B(e^(x/h))."""
    A, B, h = g.shape(y)
    a = _exp_series(A, h, order)
    b = _exp_series(B, h, order + 1)
    if b[0]:
        raise ValueError("B must vanish at s = 1")
    btil = QSeries(b[1:])
    return list((QSeries(a) * btil.inverse()).coeffs)


# -- contexts ------------------------------------------------------------------


def model_context(M: SpaceModel, q_order: int = 0, y=None) -> ChernContext:
    """Chern-character context for the non-equivariant model M."""
    if M.is_complex:
        t = M.tangent
        roots = [(r, 0, 1) for r in t.positive] + [(r, 0, -1) for r in t.negative]
        trivial = t.trivial
    else:
        roots, trivial = [], 0

    def line(coeffs):
        return _line_class(M, coeffs), 0

    def kroot(N, alpha):
        return _kroot_class(M, N, alpha), 0

    return ChernContext(
        M.ring, roots, trivial, q_order, y, False, M.is_complex, M.real_dim, line, kroot
    )


def _line_class(M: SpaceModel, coeffs) -> NilPoly:
    if len(coeffs) > M.ring.ngens:
        raise PreconditionError(
            f"line bundle has {len(coeffs)} coefficients but {M.name} has {M.ring.ngens} generators"
        )
    for a, d in zip(coeffs, M.ring.degrees):
        if a and d != 2:
            raise PreconditionError("line bundle classes must be combinations of degree-2 generators")
    return NilPoly.linear(M.ring, coeffs)


def _kroot_class(M: SpaceModel, N: int, alpha: int) -> NilPoly:
    """First Chern class of K^(alpha/N), namely -alpha * c1 / N."""
    if N < 1:
        raise PreconditionError("K-root order must be positive")
    if not M.is_complex:
        raise PreconditionError(f"K-roots need a complex model; {M.name} is oriented-only")
    if not is_c1_divisible(M, N):
        raise PreconditionError(
            f"divisibility condition failed: c1 = {format_c1(M)} is not divisible by {N}"
        )
    return M.c1() * Fraction(-alpha, N)


def format_c1(M: SpaceModel) -> str:
    parts = []
    for a, name in zip(c1_coefficients(M), M.ring.names):
        if a:
            coef = "" if a == 1 else ("-" if a == -1 else str(a))
            parts.append(f"{coef}{name}")
    return " + ".join(parts).replace("+ -", "- ") or "0"


def chern_character(M: SpaceModel, E: BundleExpr, q_order: int = 0, y=None) -> NilPoly:
    return evaluate_character(model_context(M, q_order, y), E)


# -- indices --------------------------------------------------------------------


def genus_integrand(M: SpaceModel, g: GenusKind, y=None) -> NilPoly:
    """Prod Q(pos roots) / Prod Q(neg roots) / Q(0)^trivial, normalized to start at 1.

    ``y`` overrides the value used for chi_y (fixed points pass the ambient one).
    """
    if not M.is_complex:
        if g.complex_only:
            raise PreconditionError(f"{g.name} needs a complex model; {M.name} is oriented-only")
        # trivial Pontrjagin class: the stable integrand is 1
        return M.one()
    if y is None:
        y = g.resolve_y(M.complex_dim)
    series = characteristic_series(g, M.complex_dim, y)
    q0 = series[0]
    try:
        q0inv = inverse(q0)
    except ZeroDivisionError:
        raise PreconditionError(f"{g} has Q(0) = 0 and cannot be normalized") from None
    t = M.tangent
    out = M.one()
    for roots, sign in ((t.positive, 1), (t.negative, -1)):
        for r, k in _group(roots):
            f = evaluate_series(series, r) ** k
            out = out * (f if sign > 0 else f ** -1)
    excess = len(t.positive) - len(t.negative) - M.complex_dim
    return out * (q0inv**excess if excess >= 0 else q0 ** (-excess))


def _group(roots) -> list[tuple[NilPoly, int]]:
    out: list[list] = []
    for r in roots:
        for entry in out:
            if entry[0] == r:
                entry[1] += 1
                break
        else:
            out.append([r, 1])
    return [(r, k) for r, k in out]


def index(M: SpaceModel, g: GenusKind) -> Scalar:
    if g.name == "euler":
        return M.euler_characteristic()
    return M.integrate(genus_integrand(M, g))


def twisted_series(M: SpaceModel, g: GenusKind, E: BundleExpr, q_order: int) -> QSeries:
    """Index of g twisted by E, as a q-series of order q_order."""
    if g.name == "euler":
        raise PreconditionError("the Euler characteristic cannot be twisted")
    y = g.resolve_y(M.complex_dim)
    ctx = model_context(M, q_order, y)
    integrand = genus_integrand(M, g) * evaluate_character(ctx, E)
    top = M.integrate(integrand)
    if isinstance(top, QSeries):
        return top
    return QSeries.const(top, q_order)


def twisted_index(M: SpaceModel, g: GenusKind, E: BundleExpr) -> Scalar:
    return twisted_series(M, g, E, 0)[0]


def loop_signature(M: SpaceModel, q_order: int) -> QSeries:
    return twisted_series(M, SIGNATURE, loop_signature_family(), q_order)


def require_spin(M: SpaceModel):
    if not is_spin(M):
        raise PreconditionError(f"spin condition failed: c1 = {format_c1(M)}")


def dirac_cusp_series(M: SpaceModel, q_order: int) -> QSeries:
    """Twisted A-hat series at the Dirac cusp, with the overall prefactor set to 1."""
    require_spin(M)
    return twisted_series(M, AHAT, dirac_cusp_family(), q_order)


def require_divisible(M: SpaceModel, N: int):
    if not M.is_complex:
        raise PreconditionError(f"level-{N} genera need a complex model; {M.name} is oriented-only")
    if N < 2:
        raise PreconditionError("level must be at least 2")
    if not is_c1_divisible(M, N):
        raise PreconditionError(
            f"divisibility condition failed: c1 = {format_c1(M)} is not divisible by {N}"
        )


def levelN_loop(M: SpaceModel, N: int, q_order: int) -> QSeries:
    require_divisible(M, N)
    return twisted_series(M, chi_y(level_y(N)), level_n_family(), q_order)


def level_r1(N: int) -> BundleExpr:
    """R_1 = (1 + y) T* + (1 + 1/y) T, the q^1 bundle of the level-N product."""
    return Sum((TD, Scale(Param(1, 1), TD), T, Scale(Param(1, -1), T)))


@dataclass(frozen=True)
class CuspValues:
    N: int
    todd_kroot: dict[int, Scalar]
    chi_y: dict[int, Scalar]


def cusp_values(M: SpaceModel, N: int) -> CuspValues:
    """Td(M, K^(a/N)) for 0 < a < N and chi_y(M) at y = -zeta_N^b for 0 < b < N."""
    require_divisible(M, N)
    td = {a: twisted_index(M, TODD, KRoot(N, a)) for a in range(1, N)}
    cy = {b: index(M, chi_y(level_y(N, b))) for b in range(1, N)}
    return CuspValues(N, td, cy)


def parse_genus(obj, path: str = "genus") -> GenusKind:
    """Accepts "signature", "ahat", "todd", "euler", "chi_y" or {"chi_y": y}.

    y may be a rational string or {"N": n, "beta": b} for -zeta_n^b.
    """
    if isinstance(obj, str):
        if obj in GenusKind.NAMES:
            return GenusKind(obj)
        raise ScenarioError(f"unknown genus {obj!r}", path)
    if isinstance(obj, dict) and set(obj) == {"chi_y"}:
        return chi_y(parse_y(obj["chi_y"], path + ".chi_y"))
    raise ScenarioError("genus must be a name or {\"chi_y\": value}", path)


def parse_y(obj, path: str = "y"):
    if obj is None:
        return None
    if isinstance(obj, int) and not isinstance(obj, bool):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except ValueError:
            raise ScenarioError(f"not a rational number: {obj!r}", path) from None
    if isinstance(obj, dict) and "N" in obj:
        N, beta = obj["N"], obj.get("beta", 1)
        if not (isinstance(N, int) and isinstance(beta, int)) or N < 1:
            raise ScenarioError("root of unity needs integer N >= 1 and beta", path)
        return level_y(N, beta)
    raise ScenarioError("y must be a rational string or {\"N\": n, \"beta\": b}", path)
