"""Virtual bundle expressions and their Chern characters.

A bundle expression is evaluated against a ``ChernContext`` which knows the
ring the characteristic classes live in, the stable tangent roots (with their
circle weights when computing equivariantly), how to lift line bundles, and
the q-order at which everything is truncated.  Chern characters come back as
``NilPoly`` elements whose scalars are ``QSeries``.

Power operations are obtained from Adams operations through Newton's
identities, so they apply equally to honest and virtual bundles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Optional, Sequence, Union

from .algebra import GradedRing, LaurentPoly, NilPoly, QSeries, YPoly, nil_exp
from .algebra.scalars import inverse
from .errors import PreconditionError, ScenarioError


# -- expression tree -----------------------------------------------------------


class BundleExpr:
    """Base class; subclasses are immutable dataclasses."""

    def __add__(self, other: "BundleExpr") -> "BundleExpr":
        return Sum((self, other))

    def __sub__(self, other: "BundleExpr") -> "BundleExpr":
        return Diff(self, other)

    def __mul__(self, other: "BundleExpr") -> "BundleExpr":
        return Tensor((self, other))


@dataclass(frozen=True)
class Trivial(BundleExpr):
    pass


@dataclass(frozen=True)
class Tangent(BundleExpr):
    pass


@dataclass(frozen=True)
class TangentDual(BundleExpr):
    pass


@dataclass(frozen=True)
class TangentComplexified(BundleExpr):
    pass


@dataclass(frozen=True)
class Line(BundleExpr):
    """Line bundle with first Chern class sum(coeffs[i] * g_i) over degree-2 generators."""

    coeffs: tuple[int, ...]


@dataclass(frozen=True)
class KRoot(BundleExpr):
    """K^(alpha/N), K the canonical bundle; needs c1 = 0 mod N."""

    N: int
    alpha: int


@dataclass(frozen=True)
class Sum(BundleExpr):
    terms: tuple[BundleExpr, ...]


@dataclass(frozen=True)
class Diff(BundleExpr):
    left: BundleExpr
    right: BundleExpr


@dataclass(frozen=True)
class Tensor(BundleExpr):
    factors: tuple[BundleExpr, ...]


@dataclass(frozen=True)
class ExtPower(BundleExpr):
    i: int
    base: BundleExpr


@dataclass(frozen=True)
class SymPower(BundleExpr):
    i: int
    base: BundleExpr


@dataclass(frozen=True)
class Param:
    """Monomial sign * y^y_power * q^q_power."""

    sign: int = 1
    y_power: int = 0
    q_power: int = 0


@dataclass(frozen=True)
class Scale(BundleExpr):
    t: Param
    base: BundleExpr


@dataclass(frozen=True)
class LambdaSeries(BundleExpr):
    t: Param
    base: BundleExpr


@dataclass(frozen=True)
class SymSeries(BundleExpr):
    t: Param
    base: BundleExpr


@dataclass(frozen=True)
class QFactor:
    """One family op_{t q^n}(base) for n ranging over ``steps`` ("all", "odd", "even")."""

    op: str
    base: BundleExpr
    t: Param = Param()
    steps: str = "all"

    def __post_init__(self):
        if self.op not in ("lambda", "sym"):
            raise ScenarioError(f"unknown power operation {self.op!r}")
        if self.steps not in ("all", "odd", "even"):
            raise ScenarioError(f"unknown step set {self.steps!r}")
        if self.t.q_power:
            raise ScenarioError("q-product parameters carry their q-power implicitly")


@dataclass(frozen=True)
class QProduct(BundleExpr):
    factors: tuple[QFactor, ...]
    label: str = field(default="", compare=False)


T, TD, TC = Tangent(), TangentDual(), TangentComplexified()


def loop_signature_family() -> QProduct:
    """(x)_{n>=1} S_{q^n} T_C (x) (x)_{n>=1} Lambda_{q^n} T_C."""
    return QProduct((QFactor("sym", TC), QFactor("lambda", TC)), "loop_signature")


def dirac_cusp_family() -> QProduct:
    """(x)_{n odd} Lambda_{-q^n} T_C (x) (x)_{n even > 0} S_{q^n} T_C."""
    return QProduct(
        (QFactor("lambda", TC, Param(-1), "odd"), QFactor("sym", TC, Param(1), "even")),
        "dirac_cusp",
    )


def level_n_family() -> QProduct:
    """Lambda_{y q^n} T* (x) Lambda_{y^-1 q^n} T (x) S_{q^n}(T + T*), n >= 1."""
    return QProduct(
        (
            QFactor("lambda", TD, Param(1, 1)),
            QFactor("lambda", T, Param(1, -1)),
            QFactor("sym", Sum((T, TD))),
        ),
        "level_n",
    )


def is_pure(E: BundleExpr) -> bool:
    """True when E involves neither q nor y, so Adams operations act on it."""
    if isinstance(E, (Scale, LambdaSeries, SymSeries, QProduct)):
        return False
    if isinstance(E, Sum):
        return all(is_pure(t) for t in E.terms)
    if isinstance(E, Tensor):
        return all(is_pure(t) for t in E.factors)
    if isinstance(E, Diff):
        return is_pure(E.left) and is_pure(E.right)
    if isinstance(E, (ExtPower, SymPower)):
        return is_pure(E.base)
    return True


def uses_kroot(E: BundleExpr) -> bool:
    if isinstance(E, KRoot):
        return True
    for child in _children(E):
        if uses_kroot(child):
            return True
    return False


def _children(E: BundleExpr):
    if isinstance(E, Sum):
        return E.terms
    if isinstance(E, Tensor):
        return E.factors
    if isinstance(E, Diff):
        return (E.left, E.right)
    if isinstance(E, (ExtPower, SymPower, Scale, LambdaSeries, SymSeries)):
        return (E.base,)
    if isinstance(E, QProduct):
        return tuple(f.base for f in E.factors)
    return ()


# -- evaluation ------------------------------------------------------------------


@dataclass
class ChernContext:
    """Everything needed to turn a bundle expression into a Chern character.

    ``roots`` lists the stable tangent roots as (class, u-exponent, sign);
    ``trivial`` is the number of trivial summands added to make it stable.
    With ``equivariant`` set, scalars are Laurent polynomials in u.
    """

    ring: GradedRing
    roots: Sequence[tuple[NilPoly, int, int]]
    trivial: int
    q_order: int = 0
    y: Any = None
    equivariant: bool = False
    complex: bool = True
    real_rank: int = 0
    line: Optional[Callable[[tuple[int, ...]], tuple[NilPoly, int]]] = None
    kroot: Optional[Callable[[int, int], tuple[NilPoly, int]]] = None
    _cache: dict = field(default_factory=dict, repr=False)

    # scalars ---------------------------------------------------------------
    def inner(self, c) -> Any:
        return LaurentPoly.const(c) if self.equivariant else c

    def scalar(self, c) -> QSeries:
        return QSeries.const(self.inner(c), self.q_order)

    def const(self, c) -> NilPoly:
        return NilPoly.const(self.ring, self.scalar(c))

    def exp_root(self, c: NilPoly, e: int) -> NilPoly:
        """Chern character e^c * u^e of an (equivariant) line."""
        if self.equivariant:
            s = QSeries.const(LaurentPoly.monomial(e), self.q_order)
        else:
            s = QSeries.const(Fraction(1), self.q_order)
        return nil_exp(c) * s

    def y_power(self, a: int):
        if a == 0:
            return Fraction(1)
        if self.y is None:
            raise PreconditionError("bundle parameter uses y but no value of y is bound")
        if a < 0 and isinstance(self.y, YPoly):
            raise PreconditionError("negative powers of a formal y are not available")
        return self.y**a

    def param(self, t: Param, extra_q: int = 0) -> QSeries:
        return QSeries.monomial(
            t.q_power + extra_q, self.inner(self.y_power(t.y_power) * t.sign), self.q_order
        )


def evaluate_character(ctx: ChernContext, E: BundleExpr) -> NilPoly:
    return _ch(ctx, E)


def _ch(ctx: ChernContext, E: BundleExpr) -> NilPoly:
    key = ("ch", E)
    if key in ctx._cache:
        return ctx._cache[key]
    out = _ch_uncached(ctx, E)
    ctx._cache[key] = out
    return out


def _ch_uncached(ctx: ChernContext, E: BundleExpr) -> NilPoly:
    if isinstance(E, Trivial):
        return ctx.const(Fraction(1))
    if isinstance(E, (Tangent, TangentDual)):
        if not ctx.complex:
            raise PreconditionError("T and T* need a complex model; use T_C")
        sgn = 1 if isinstance(E, Tangent) else -1
        out = ctx.const(Fraction(-ctx.trivial))
        for c, e, s in ctx.roots:
            term = ctx.exp_root(c * sgn, e * sgn)
            out = out + term if s > 0 else out - term
        return out
    if isinstance(E, TangentComplexified):
        if not ctx.complex:
            return ctx.const(Fraction(ctx.real_rank))
        return _ch(ctx, T) + _ch(ctx, TD)
    if isinstance(E, Line):
        if ctx.line is None:
            raise PreconditionError("line bundles are not available in this context")
        c, e = ctx.line(E.coeffs)
        return ctx.exp_root(c, e)
    if isinstance(E, KRoot):
        if ctx.kroot is None:
            raise PreconditionError("K-roots are not available in this context")
        c, e = ctx.kroot(E.N, E.alpha)
        return ctx.exp_root(c, e)
    if isinstance(E, Sum):
        out = ctx.const(Fraction(0))
        for t in E.terms:
            out = out + _ch(ctx, t)
        return out
    if isinstance(E, Diff):
        return _ch(ctx, E.left) - _ch(ctx, E.right)
    if isinstance(E, Tensor):
        out = ctx.const(Fraction(1))
        for t in E.factors:
            out = out * _ch(ctx, t)
        return out
    if isinstance(E, ExtPower):
        return _power_ops(ctx, E.base, "lambda", E.i)[E.i]
    if isinstance(E, SymPower):
        return _power_ops(ctx, E.base, "sym", E.i)[E.i]
    if isinstance(E, Scale):
        return _ch(ctx, E.base) * ctx.param(E.t)
    if isinstance(E, (LambdaSeries, SymSeries)):
        op = "lambda" if isinstance(E, LambdaSeries) else "sym"
        return _series(ctx, op, E.base, E.t, 0)
    if isinstance(E, QProduct):
        out = ctx.const(Fraction(1))
        for f in E.factors:
            for n in range(1, ctx.q_order + 1):
                if f.steps == "odd" and n % 2 == 0:
                    continue
                if f.steps == "even" and n % 2 == 1:
                    continue
                out = out * _series(ctx, f.op, f.base, f.t, n)
        return out
    raise ScenarioError(f"unknown bundle expression {E!r}")


def _series(ctx: ChernContext, op: str, base: BundleExpr, t: Param, extra_q: int) -> NilPoly:
    """op_t(base) = sum_i op^i(base) t^i, with t carrying q-degree >= 1."""
    qdeg = t.q_power + extra_q
    if qdeg < 1:
        raise PreconditionError("power-operation series need a parameter of positive q-degree")
    top = ctx.q_order // qdeg
    ops = _power_ops(ctx, base, op, top)
    out = ctx.const(Fraction(1))
    step = ctx.param(t, extra_q)
    power = ctx.scalar(Fraction(1))
    for i in range(1, top + 1):
        power = power * step
        out = out + ops[i] * power
    return out


def _power_ops(ctx: ChernContext, base: BundleExpr, op: str, top: int) -> list[NilPoly]:
    """[op^0(base), ..., op^top(base)] via Newton's identities on Adams operations."""
    if not is_pure(base):
        raise PreconditionError("power operations need a bundle free of q and y")
    key = (op, base)
    cached = ctx._cache.get(key)
    if cached is not None and len(cached) > top:
        return cached
    ch = _ch(ctx, base)
    psis = [None] + [ch.psi(k) for k in range(1, top + 1)]
    out = [ctx.const(Fraction(1))]
    for i in range(1, top + 1):
        acc = ctx.const(Fraction(0))
        for k in range(1, i + 1):
            term = psis[k] * out[i - k]
            if op == "lambda" and k % 2 == 0:
                acc = acc - term
            else:
                acc = acc + term
        out.append(acc * Fraction(1, i))
    ctx._cache[key] = out
    return out


# -- JSON syntax -------------------------------------------------------------------

_NAMED = {"T": T, "T*": TD, "T_dual": TD, "T_C": TC, "1": Trivial(), "O": Trivial()}
_FAMILIES = {"loop_signature": loop_signature_family, "dirac_cusp": dirac_cusp_family,
             "level_n": level_n_family}


def param_from_json(obj, path: str = "param") -> Param:
    if isinstance(obj, int) and not isinstance(obj, bool) and obj in (1, -1):
        return Param(obj)
    if not isinstance(obj, dict):
        raise ScenarioError("parameter must be an object {sign, y, q}", path)
    unknown = set(obj) - {"sign", "y", "q"}
    if unknown:
        raise ScenarioError(f"unknown parameter fields {sorted(unknown)}", path)
    sign, y, q = obj.get("sign", 1), obj.get("y", 0), obj.get("q", 0)
    if sign not in (1, -1) or not all(isinstance(v, int) for v in (y, q)) or q < 0:
        raise ScenarioError("parameter needs sign +-1, integer y and nonnegative q", path)
    return Param(sign, y, q)


def bundle_from_json(obj, path: str = "bundle") -> BundleExpr:
    if isinstance(obj, str):
        if obj in _NAMED:
            return _NAMED[obj]
        raise ScenarioError(f"unknown bundle name {obj!r}", path)
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ScenarioError("bundle expression must be a name or a one-key object", path)
    (key, val), = obj.items()
    sub = f"{path}.{key}"
    if key == "line":
        if not isinstance(val, list) or not all(isinstance(a, int) for a in val):
            raise ScenarioError("line needs a list of integer coefficients", sub)
        return Line(tuple(val))
    if key == "kroot":
        if not (isinstance(val, list) and len(val) == 2 and all(isinstance(a, int) for a in val)):
            raise ScenarioError("kroot needs [N, alpha]", sub)
        return KRoot(val[0], val[1])
    if key in ("sum", "tensor"):
        if not isinstance(val, list) or not val:
            raise ScenarioError(f"{key} needs a nonempty list", sub)
        items = tuple(bundle_from_json(v, f"{sub}[{i}]") for i, v in enumerate(val))
        return Sum(items) if key == "sum" else Tensor(items)
    if key == "diff":
        if not isinstance(val, list) or len(val) != 2:
            raise ScenarioError("diff needs [left, right]", sub)
        return Diff(bundle_from_json(val[0], sub + "[0]"), bundle_from_json(val[1], sub + "[1]"))
    if key in ("extpower", "sympower"):
        if not (isinstance(val, list) and len(val) == 2 and isinstance(val[0], int) and val[0] >= 0):
            raise ScenarioError(f"{key} needs [i, bundle] with i >= 0", sub)
        base = bundle_from_json(val[1], sub + "[1]")
        return ExtPower(val[0], base) if key == "extpower" else SymPower(val[0], base)
    if key in ("scale", "lambda_series", "sym_series"):
        if not (isinstance(val, list) and len(val) == 2):
            raise ScenarioError(f"{key} needs [parameter, bundle]", sub)
        t = param_from_json(val[0], sub + "[0]")
        base = bundle_from_json(val[1], sub + "[1]")
        cls = {"scale": Scale, "lambda_series": LambdaSeries, "sym_series": SymSeries}[key]
        return cls(t, base)
    if key == "qproduct":
        if isinstance(val, str):
            if val not in _FAMILIES:
                raise ScenarioError(f"unknown q-product family {val!r}", sub)
            return _FAMILIES[val]()
        if not isinstance(val, list) or not val:
            raise ScenarioError("qproduct needs a family name or a list of factors", sub)
        factors = []
        for i, f in enumerate(val):
            fp = f"{sub}[{i}]"
            if not isinstance(f, dict) or "op" not in f or "base" not in f:
                raise ScenarioError("q-product factor needs 'op' and 'base'", fp)
            factors.append(
                QFactor(
                    f["op"],
                    bundle_from_json(f["base"], fp + ".base"),
                    param_from_json(f.get("t", {}), fp + ".t"),
                    f.get("steps", "all"),
                )
            )
        return QProduct(tuple(factors))
    raise ScenarioError(f"unknown bundle constructor {key!r}", path)


def param_to_json(t: Param) -> dict:
    return {"sign": t.sign, "y": t.y_power, "q": t.q_power}


def bundle_to_json(E: BundleExpr):
    for name, val in (("T", T), ("T*", TD), ("T_C", TC), ("1", Trivial())):
        if E == val:
            return name
    if isinstance(E, Line):
        return {"line": list(E.coeffs)}
    if isinstance(E, KRoot):
        return {"kroot": [E.N, E.alpha]}
    if isinstance(E, Sum):
        return {"sum": [bundle_to_json(t) for t in E.terms]}
    if isinstance(E, Tensor):
        return {"tensor": [bundle_to_json(t) for t in E.factors]}
    if isinstance(E, Diff):
        return {"diff": [bundle_to_json(E.left), bundle_to_json(E.right)]}
    if isinstance(E, ExtPower):
        return {"extpower": [E.i, bundle_to_json(E.base)]}
    if isinstance(E, SymPower):
        return {"sympower": [E.i, bundle_to_json(E.base)]}
    if isinstance(E, Scale):
        return {"scale": [param_to_json(E.t), bundle_to_json(E.base)]}
    if isinstance(E, LambdaSeries):
        return {"lambda_series": [param_to_json(E.t), bundle_to_json(E.base)]}
    if isinstance(E, SymSeries):
        return {"sym_series": [param_to_json(E.t), bundle_to_json(E.base)]}
    if isinstance(E, QProduct):
        if E.label in _FAMILIES:
            return {"qproduct": E.label}
        return {
            "qproduct": [
                {"op": f.op, "base": bundle_to_json(f.base), "t": param_to_json(f.t), "steps": f.steps}
                for f in E.factors
            ]
        }
    raise TypeError(f"cannot serialize {E!r}")
