"""Circle actions, local data at fixed components, and the checks built on them.

Characters are computed in a variable u with lambda = u^d, where d is the
action's cover index.  A normal line (c, m) at a component contributes the
equivariant root c + m z, i.e. e^c * u^(d m) at the level of characters.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd, lcm
from typing import Any, Optional, Sequence

from .algebra import (
    LaurentPoly,
    NilPoly,
    QSeries,
    RationalFunction,
    level_y,
    nil_exp,
    nil_invert,
    rf_is_constant,
    rf_limit_at_infinity,
    rf_monomial_constant,
)
from .bundles import (
    BundleExpr,
    ChernContext,
    Tensor,
    TD,
    KRoot,
    _children,
    dirac_cusp_family,
    evaluate_character,
    level_n_family,
    loop_signature_family,
    uses_kroot,
)
from .errors import InconsistentDataError, PreconditionError, ScenarioError
from .genera import (
    AHAT,
    SIGNATURE,
    TODD,
    GenusKind,
    chi_y,
    dirac_cusp_series,
    genus_integrand,
    index,
    levelN_loop,
    loop_signature,
    require_divisible,
    require_spin,
    twisted_index,
    twisted_series,
)
from .spaces import SpaceModel, cp, is_c1_divisible, point


@dataclass(frozen=True)
class WeightedLine:
    c: NilPoly
    m: int

    def __post_init__(self):
        if self.m == 0:
            raise InconsistentDataError("normal lines must carry a nonzero weight")


@dataclass(frozen=True)
class FixedComponent:
    """A fixed component Y with its normal lines.

    ``gens`` restricts each degree-2 ambient generator to (class in Y, weight).
    """

    Y: SpaceModel
    normal: tuple[WeightedLine, ...]
    gens: tuple[tuple[NilPoly, int], ...]
    label: str = ""

    def codim(self) -> int:
        return 2 * len(self.normal)


@dataclass(frozen=True)
class CircleAction:
    M: SpaceModel
    components: tuple[FixedComponent, ...]
    d: int = 1
    weights: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if not self.components:
            raise InconsistentDataError("a circle action needs at least one fixed component")
        if self.d < 1:
            raise PreconditionError("cover index must be positive")
        for F in self.components:
            if F.Y.real_dim + F.codim() != self.M.real_dim:
                raise InconsistentDataError(
                    f"component {F.label or F.Y.name} has the wrong dimension"
                )
        total = sum(F.Y.euler_characteristic() for F in self.components)
        if total != self.M.euler_characteristic():
            raise InconsistentDataError(
                f"Euler count mismatch: components give {total}, M has {self.M.euler_characteristic()}"
            )

    def with_cover(self, d: int) -> "CircleAction":
        return replace(self, d=d)

    @property
    def is_linear(self) -> bool:
        return self.weights is not None


def linear_cp_action(weights: Sequence[int], d: int = 1) -> CircleAction:
    """t . [z_0 : ... : z_n] = [t^w_0 z_0 : ... : t^w_n z_n] on CP^n."""
    weights = tuple(int(w) for w in weights)
    if len(weights) < 2:
        raise PreconditionError("a linear action on CP^n needs n + 1 >= 2 weights")
    M = cp(len(weights) - 1)
    comps = []
    for w in sorted(set(weights)):
        k = weights.count(w) - 1
        Y = cp(k) if k else point()
        xY = Y.gen("x") if k else NilPoly(Y.ring)
        normal = tuple(WeightedLine(xY, v - w) for v in weights if v != w)
        comps.append(FixedComponent(Y, normal, ((xY, -w),), f"w={w}"))
    return CircleAction(M, tuple(comps), d, weights)


# -- specifications ----------------------------------------------------------------


@dataclass(frozen=True)
class IndexSpec:
    """What to compute: a genus, optionally twisted, possibly a q-series family."""

    genus: GenusKind
    bundle: Optional[BundleExpr] = None
    q_order: int = 0
    family: str = ""
    level: int = 0

    @property
    def is_series(self) -> bool:
        return bool(self.family)

    def y_value(self, M: SpaceModel):
        return self.genus.resolve_y(M.complex_dim)

    def needs_monomial_normalization(self) -> bool:
        return self.bundle is not None and uses_kroot(self.bundle)

    def nonequivariant(self, M: SpaceModel) -> QSeries:
        if self.family == "loop_signature":
            return loop_signature(M, self.q_order)
        if self.family == "dirac_cusp":
            return dirac_cusp_series(M, self.q_order)
        if self.family == "level_n":
            return levelN_loop(M, self.level, self.q_order)
        if self.bundle is not None:
            return twisted_series(M, self.genus, self.bundle, self.q_order)
        return QSeries.const(index(M, self.genus), self.q_order)

    def check(self, M: SpaceModel):
        if self.family == "dirac_cusp" or self.genus.name == "ahat":
            require_spin(M)
        if self.family == "level_n":
            require_divisible(M, self.level)


def genus_spec(g: GenusKind) -> IndexSpec:
    return IndexSpec(g)


def twisted_spec(g: GenusKind, E: BundleExpr) -> IndexSpec:
    return IndexSpec(g, E)


def loop_signature_spec(q_order: int) -> IndexSpec:
    return IndexSpec(SIGNATURE, loop_signature_family(), q_order, "loop_signature")


def dirac_cusp_spec(q_order: int) -> IndexSpec:
    return IndexSpec(AHAT, dirac_cusp_family(), q_order, "dirac_cusp")


def level_n_spec(N: int, q_order: int) -> IndexSpec:
    return IndexSpec(chi_y(level_y(N)), level_n_family(), q_order, "level_n", N)


def required_cover(spec: IndexSpec) -> int:
    """Smallest cover index making every u-exponent integral for this spec."""
    d = 2 if spec.genus.name == "ahat" else 1
    for N in _kroot_orders(spec.bundle):
        d = lcm(d, N)
    return d


def _kroot_orders(E) -> list[int]:
    if E is None:
        return []
    if isinstance(E, KRoot):
        return [E.N]
    out = []
    for child in _children(E):
        out.extend(_kroot_orders(child))
    return out


# -- local data ------------------------------------------------------------------------


def _ulaurent(x) -> LaurentPoly:
    return x if isinstance(x, LaurentPoly) else LaurentPoly.const(x)


def _qlaurent(x, q_order: int) -> list[LaurentPoly]:
    if isinstance(x, QSeries):
        return [_ulaurent(c) for c in x.coeffs[: q_order + 1]]
    return [_ulaurent(x)] + [LaurentPoly()] * q_order


def _u_exponent(A: CircleAction, m: int, h: int = 1) -> int:
    num = A.d * m
    if num % h:
        raise PreconditionError(
            f"cover index d={A.d} leaves a fractional u-exponent {num}/{h}; use a larger cover"
        )
    return num // h


def _kroot_weights(A: CircleAction, N: int, alpha: int) -> list[int]:
    """u-exponents of the chosen lift of K^(alpha/N) at each component."""
    sums = [sum(L.m for L in F.normal) for F in A.components]
    out = []
    for s in sums:
        num = -alpha * (s - sums[0]) * A.d
        if num % N:
            raise PreconditionError(
                f"cover index d={A.d} leaves a fractional weight for K^({alpha}/{N}); use a larger cover"
            )
        out.append(num // N)
    return out


def component_context(A: CircleAction, i: int, q_order: int, y) -> ChernContext:
    F = A.components[i]
    Y = F.Y
    t = Y.tangent
    roots = [(r, 0, 1) for r in t.positive] + [(r, 0, -1) for r in t.negative]
    roots += [(L.c, _u_exponent(A, L.m), 1) for L in F.normal]

    def line(coeffs):
        if len(coeffs) > len(F.gens):
            raise PreconditionError("line bundle has more coefficients than generators")
        c, w = NilPoly(Y.ring), 0
        for a, (gc, gw) in zip(coeffs, F.gens):
            c, w = c + gc * a, w + a * gw
        return c, _u_exponent(A, w)

    def kroot(N, alpha):
        if not is_c1_divisible(A.M, N):
            raise PreconditionError(f"divisibility condition failed: c1 is not divisible by {N}")
        c1 = Y.c1() if Y.real_dim else NilPoly(Y.ring)
        for L in F.normal:
            c1 = c1 + L.c
        return c1 * Fraction(-alpha, N), _kroot_weights(A, N, alpha)[i]

    return ChernContext(Y.ring, roots, t.trivial, q_order, y, True, True, Y.real_dim, line, kroot)


@dataclass(frozen=True)
class LocalDatum:
    """Numerators (one per q-power) over a common denominator."""

    nums: tuple[LaurentPoly, ...]
    den: LaurentPoly

    def coefficients(self) -> list[RationalFunction]:
        return [RationalFunction(n, self.den) for n in self.nums]


def local_datum_parts(A: "CircleAction", i: int, spec: IndexSpec) -> LocalDatum:
    F = A.components[i]
    Y, Q = F.Y, spec.q_order
    if not A.M.is_complex:
        raise PreconditionError("local data need an almost complex model")
    if spec.genus.name == "euler":
        if spec.bundle is not None:
            raise PreconditionError("the Euler characteristic cannot be twisted")
        return LocalDatum(tuple(_qlaurent(Y.euler_characteristic(), Q)), LaurentPoly.const(1))
    y = spec.y_value(A.M)
    A_, B_, h = spec.genus.shape(y)
    K = Y.complex_dim
    integrand = genus_integrand(Y, spec.genus, y)
    den = LaurentPoly.const(Fraction(1))
    for L in F.normal:
        e = _u_exponent(A, L.m, h)
        E = {k: nil_exp(L.c * Fraction(k, h)) if L.c else NilPoly.one(Y.ring) for k in set(A_) | set(B_)}
        num_f = NilPoly(Y.ring)
        for k, a in A_.items():
            if a:
                num_f = num_f + E[k] * LaurentPoly.monomial(e * k, a)
        B0 = LaurentPoly({e * k: b for k, b in B_.items()})
        full = NilPoly(Y.ring)
        for k, b in B_.items():
            full = full + E[k] * LaurentPoly.monomial(e * k, b)
        dB = full - NilPoly.const(Y.ring, B0)
        # 1/B = sum_j (-dB)^j B0^(K-j) / B0^(K+1), exact since dB^(K+1) = 0
        P = NilPoly(Y.ring)
        power = NilPoly.one(Y.ring)
        for j in range(K + 1):
            P = P + power * (B0 ** (K - j))
            power = -(power * dB)
            if not power:
                break
        integrand = integrand * num_f * P
        den = den * B0 ** (K + 1)
    if spec.bundle is not None:
        ctx = component_context(A, i, Q, y)
        integrand = integrand * evaluate_character(ctx, spec.bundle)
    top = Y.integrate(integrand)
    return LocalDatum(tuple(_qlaurent(top, Q)), den)


def local_datum(A: CircleAction, i: int, spec: IndexSpec):
    """The contribution of component i: a RationalFunction, or a QSeries of them."""
    coeffs = local_datum_parts(A, i, spec).coefficients()
    return QSeries(coeffs) if spec.is_series else coeffs[0]


def character_coefficients(A: CircleAction, spec: IndexSpec) -> list[RationalFunction]:
    spec.check(A.M)
    total: Optional[list] = None
    for i in range(len(A.components)):
        parts = local_datum_parts(A, i, spec)
        if total is None:
            total, den = list(parts.nums), parts.den
            continue
        # common (not least) denominator; RationalFunction reduces at the end
        new_den = den * parts.den
        total = [a * parts.den + b * den for a, b in zip(total, parts.nums)]
        den = new_den
    return [RationalFunction(n, den) for n in total]


def equiv_index(A: CircleAction, spec: IndexSpec):
    coeffs = character_coefficients(A, spec)
    return QSeries(coeffs) if spec.is_series else coeffs[0]


@dataclass(frozen=True)
class RigidityReport:
    constant: bool
    values: Optional[tuple]
    nonequivariant: tuple
    agree: bool
    character: tuple[RationalFunction, ...]
    exponents: Optional[tuple[int, ...]] = None


def rigidity_report(A: CircleAction, spec: IndexSpec) -> RigidityReport:
    coeffs = character_coefficients(A, spec)
    plain = spec.nonequivariant(A.M)
    monomial = spec.needs_monomial_normalization()
    values, exps = [], []
    for f in coeffs:
        if monomial:
            mc = rf_monomial_constant(f)
            if mc is None:
                values = None
                break
            exps.append(mc[0])
            values.append(mc[1])
        else:
            v = rf_is_constant(f)
            if v is None:
                values = None
                break
            values.append(v)
    constant = values is not None
    plain_t = tuple(plain.coeffs)
    agree = constant and all(a == b for a, b in zip(values, plain_t))
    return RigidityReport(
        constant,
        tuple(values) if constant else None,
        plain_t,
        agree,
        tuple(coeffs),
        tuple(exps) if constant and monomial else None,
    )


def limit_at_cusp(A: CircleAction, spec: IndexSpec = None):
    """Sum over components of the u -> infinity limit of the local datum."""
    spec = spec or genus_spec(SIGNATURE)
    if spec.genus.name != "signature" or spec.is_series:
        raise PreconditionError("the cusp limit is defined for signature-type specs")
    total = Fraction(0)
    for i in range(len(A.components)):
        lim = rf_limit_at_infinity(local_datum_parts(A, i, spec).coefficients()[0])
        if lim is None:
            raise InconsistentDataError(f"local datum at component {i} has no finite limit")
        total = total + lim
    return total


def component_signatures(A: CircleAction) -> list:
    """sign(Y) with Y oriented so that its normal weights count as positive."""
    out = []
    for F in A.components:
        flips = sum(1 for L in F.normal if L.m < 0)
        out.append(index(F.Y, SIGNATURE) * (-1) ** flips)
    return out


# -- equivariant integration ------------------------------------------------------------


class EqClass:
    """Equivariant cohomology class of the ambient manifold, built symbolically."""

    def __mul__(self, other):
        return ClassProduct((self, other))

    def __add__(self, other):
        return ClassSum((self, other))


@dataclass(frozen=True)
class ClassOne(EqClass):
    pass


@dataclass(frozen=True)
class ClassZ(EqClass):
    k: int = 1


@dataclass(frozen=True)
class ClassChern(EqClass):
    k: int


@dataclass(frozen=True)
class ClassEuler(EqClass):
    pass


@dataclass(frozen=True)
class ClassLine(EqClass):
    """First Chern class of sum a_i g_i, lifted with an extra global weight ``shift``."""

    coeffs: tuple[int, ...]
    shift: int = 0


@dataclass(frozen=True)
class ClassProduct(EqClass):
    factors: tuple[EqClass, ...]


@dataclass(frozen=True)
class ClassSum(EqClass):
    terms: tuple[EqClass, ...]


@dataclass(frozen=True)
class ClassScale(EqClass):
    c: Fraction
    base: EqClass


def _zmono(k: int, c=Fraction(1)) -> LaurentPoly:
    return LaurentPoly.monomial(k, c, "z")


def _root(F: FixedComponent, c: NilPoly, m: int) -> NilPoly:
    """The equivariant root c + m z with z-polynomial scalars."""
    out = c.map_scalars(lambda a: LaurentPoly.const(a, "z"))
    if m:
        out = out + NilPoly.const(F.Y.ring, _zmono(1, Fraction(m)))
    return out


def _chern_graded(F: FixedComponent, k: int) -> NilPoly:
    """c_k of the ambient tangent bundle restricted to F, equivariantly."""
    ring = F.Y.ring
    t = F.Y.tangent
    roots = [(_root(F, r, 0), 1) for r in t.positive] + [(_root(F, r, 0), -1) for r in t.negative]
    roots += [(_root(F, L.c, L.m), 1) for L in F.normal]
    # polynomial in a grading variable s, truncated above s^k
    poly = [NilPoly.one(ring).map_scalars(lambda a: LaurentPoly.const(a, "z"))] + [NilPoly(ring)] * k
    for r, sign in roots:
        if sign > 0:
            factor = [NilPoly.one(ring), r]
        else:
            factor = [r**j * (-1) ** j for j in range(k + 1)]
        out = [NilPoly(ring)] * (k + 1)
        for i, a in enumerate(poly):
            if not a:
                continue
            for j, b in enumerate(factor):
                if i + j > k:
                    break
                out[i + j] = out[i + j] + a * b
        poly = out
    return poly[k]


def _restrict_class(F: FixedComponent, v: EqClass, n: int) -> NilPoly:
    ring = F.Y.ring
    lift = lambda x: NilPoly.const(ring, LaurentPoly.const(Fraction(x), "z"))  # noqa: E731
    if isinstance(v, ClassOne):
        return lift(1)
    if isinstance(v, ClassZ):
        return NilPoly.const(ring, _zmono(v.k))
    if isinstance(v, ClassChern):
        if v.k < 0:
            raise ScenarioError("Chern class index must be nonnegative")
        return _chern_graded(F, v.k)
    if isinstance(v, ClassEuler):
        return _chern_graded(F, n)
    if isinstance(v, ClassLine):
        if len(v.coeffs) > len(F.gens):
            raise ScenarioError("line class has more coefficients than generators")
        c, w = NilPoly(ring), v.shift
        for a, (gc, gw) in zip(v.coeffs, F.gens):
            c, w = c + gc * a, w + a * gw
        return _root(F, c, w)
    if isinstance(v, ClassProduct):
        out = lift(1)
        for f in v.factors:
            out = out * _restrict_class(F, f, n)
        return out
    if isinstance(v, ClassSum):
        out = lift(0)
        for f in v.terms:
            out = out + _restrict_class(F, f, n)
        return out
    if isinstance(v, ClassScale):
        return _restrict_class(F, v.base, n) * v.c
    raise ScenarioError(f"unknown class expression {v!r}")


def local_integral(A: CircleAction, i: int, v: EqClass) -> LaurentPoly:
    """int_Y v|_Y / e_T(normal bundle), a Laurent polynomial in z."""
    F = A.components[i]
    euler = _restrict_class(F, ClassOne(), A.M.complex_dim)
    for L in F.normal:
        euler = euler * _root(F, L.c, L.m)
    integrand = _restrict_class(F, v, A.M.complex_dim) * nil_invert(euler)
    val = F.Y.integrate(integrand)
    return val if isinstance(val, LaurentPoly) else LaurentPoly.const(val, "z")


def equivariant_integral(A: CircleAction, v: EqClass) -> LaurentPoly:
    total = LaurentPoly(var="z")
    for i in range(len(A.components)):
        total = total + local_integral(A, i, v)
    if total and total.min_exp() < 0:
        raise InconsistentDataError(f"localization sum {total} is not a polynomial in z")
    return total


def class_from_json(obj, path: str = "class") -> EqClass:
    if obj == "one" or obj == 1:
        return ClassOne()
    if obj == "euler":
        return ClassEuler()
    if obj == "z":
        return ClassZ(1)
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ScenarioError("class expression must be a name or a one-key object", path)
    (key, val), = obj.items()
    sub = f"{path}.{key}"
    if key == "z" and isinstance(val, int):
        return ClassZ(val)
    if key == "chern" and isinstance(val, int):
        return ClassChern(val)
    if key == "line":
        if isinstance(val, list) and all(isinstance(a, int) for a in val):
            return ClassLine(tuple(val))
        if isinstance(val, dict) and isinstance(val.get("coeffs"), list):
            return ClassLine(tuple(val["coeffs"]), int(val.get("shift", 0)))
        raise ScenarioError("line class needs coefficients (and optional shift)", sub)
    if key in ("product", "sum") and isinstance(val, list) and val:
        items = tuple(class_from_json(v, f"{sub}[{i}]") for i, v in enumerate(val))
        return ClassProduct(items) if key == "product" else ClassSum(items)
    if key == "power" and isinstance(val, list) and len(val) == 2 and isinstance(val[0], int):
        base = class_from_json(val[1], sub + "[1]")
        return ClassProduct((base,) * val[0]) if val[0] else ClassOne()
    if key == "scale" and isinstance(val, list) and len(val) == 2:
        return ClassScale(Fraction(str(val[0])), class_from_json(val[1], sub + "[1]"))
    raise ScenarioError(f"malformed class expression {key!r}", path)


# -- sigma-fixed sets and vanishing theorems ----------------------------------------------


@dataclass(frozen=True)
class SigmaFixedData:
    order: int
    components: tuple[SpaceModel, ...]
    codim: int
    groups: tuple[tuple[int, ...], ...]


def sigma_fixed_set(A: CircleAction, o: int) -> SigmaFixedData:
    """Fixed set of the order-o element of the circle, for linear actions."""
    if not A.is_linear:
        raise PreconditionError("sigma-fixed sets are only available for linear projective actions")
    if o < 2:
        raise PreconditionError("sigma must have order at least 2")
    n = len(A.weights) - 1
    groups: dict[int, list[int]] = {}
    for w in A.weights:
        groups.setdefault(w % o, []).append(w)
    comps, codim = [], None
    keys = sorted(groups)
    for r in keys:
        count = len(groups[r])
        comps.append(cp(count - 1) if count > 1 else point())
        cd = 2 * (n + 1 - count)
        codim = cd if codim is None else min(codim, cd)
    return SigmaFixedData(o, tuple(comps), codim, tuple(tuple(groups[r]) for r in keys))


def is_effective(A: CircleAction) -> bool:
    if not A.is_linear:
        raise PreconditionError("effectiveness is only decided for linear actions")
    g = 0
    for w in A.weights:
        g = gcd(g, w - A.weights[0])
    return g == 1


@dataclass(frozen=True)
class VanishingReport:
    status: str  # "pass", "fail" or "not applicable"
    codim: Optional[int]
    r: Optional[int]
    checked: tuple[tuple[str, Any], ...] = ()
    reason: str = ""


def higher_vanishing_check(A: CircleAction, o: int, level: int = 2) -> VanishingReport:
    """Verify the vanishing predicted from the codimension of the sigma-fixed set.

    level 2: codim > 2 o r forces the first r + 1 Dirac-cusp coefficients to vanish.
    level N > 2 (o = 2, codim >= 6): Td(M, T* (x) K^(a/N)) = 0 for 0 < a < N/2.
    """
    M = A.M
    if level == 2:
        require_spin(M)
    else:
        require_divisible(M, level)
    if not is_effective(A):
        return VanishingReport("not applicable", None, None, reason="action is not effective")
    sig = sigma_fixed_set(A, o)
    if level == 2:
        r = (sig.codim - 1) // (2 * o)
        if r < 0:
            return VanishingReport("not applicable", sig.codim, None, reason="codim M^sigma is 0")
        series = dirac_cusp_series(M, r)
        checked = tuple((f"q^{k}", series[k]) for k in range(r + 1))
        ok = all(v == 0 for _, v in checked)
        return VanishingReport("pass" if ok else "fail", sig.codim, r, checked)
    if o != 2:
        return VanishingReport("not applicable", sig.codim, None, reason="level-N check needs o = 2")
    if sig.codim < 6:
        return VanishingReport("not applicable", sig.codim, None, reason="codim M^sigma < 6")
    checked = []
    for alpha in range(1, level):
        if 2 * alpha >= level:
            break
        v = twisted_index(M, TODD, Tensor((TD, KRoot(level, alpha))))
        checked.append((f"alpha={alpha}", v))
    if not checked:
        return VanishingReport("not applicable", sig.codim, None, reason="no alpha with 0 < alpha < N/2")
    ok = all(v == 0 for _, v in checked)
    return VanishingReport("pass" if ok else "fail", sig.codim, None, tuple(checked))


@dataclass(frozen=True)
class StructureReport:
    euler_total: Fraction
    euler_expected: Fraction
    dim_sum: int
    dim_expected: int
    generators_ok: bool
    witness: Optional[LaurentPoly]
    witness_vanishing: bool

    @property
    def passed(self) -> bool:
        return (
            self.euler_total == self.euler_expected
            and self.dim_sum == self.dim_expected
            and self.generators_ok
            and self.witness_vanishing
            and (self.witness is None or self.witness == 1)
        )


def structure_checks(A: CircleAction) -> StructureReport:
    """Euler count, sum (m_i + 1) = m + 1, and the weight-shifting witness.

    The witness is x^m with each factor lifted separately: m_i + 1 factors
    vanish at component i for every i but the last, the remaining ones vanish
    at the last component.  The local data away from the last component are
    then zero while the total must equal the integral of x^m, which is 1.
    """
    M = A.M
    etot = sum(F.Y.euler_characteristic() for F in A.components)
    dsum = sum(F.Y.complex_dim + 1 for F in A.components)
    gens_ok = all(
        F.Y.integrate(F.gens[0][0] ** F.Y.complex_dim) != 0 if F.Y.real_dim else True
        for F in A.components
    )
    witness, vanish = None, True
    if A.is_linear and len(A.components) >= 2:
        factors = []
        for F in A.components[:-1]:
            factors += [ClassLine((1,), -F.gens[0][1])] * (F.Y.complex_dim + 1)
        rest = M.complex_dim - len(factors)
        if rest < 0:
            vanish = False
        else:
            factors += [ClassLine((1,), -A.components[-1].gens[0][1])] * rest
            v = ClassProduct(tuple(factors))
            locals_ = [local_integral(A, i, v) for i in range(len(A.components))]
            vanish = all(not x for x in locals_[:-1])
            witness = equivariant_integral(A, v)
    return StructureReport(etot, M.euler_characteristic(), dsum, M.complex_dim + 1, gens_ok, witness, vanish)


def action_from_json(obj, path: str = "action") -> CircleAction:
    if not isinstance(obj, dict) or obj.get("type") != "linear_cp":
        raise ScenarioError("only {\"type\": \"linear_cp\", \"weights\": [...]} actions are supported", path)
    w = obj.get("weights")
    if not isinstance(w, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in w):
        raise ScenarioError("weights must be a list of integers", path + ".weights")
    d = obj.get("cover", 1)
    if not isinstance(d, int) or d < 1:
        raise ScenarioError("cover must be a positive integer", path + ".cover")
    try:
        return linear_cp_action(w, d)
    except PreconditionError as exc:
        raise ScenarioError(str(exc), path) from exc
