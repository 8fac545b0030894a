from fractions import Fraction

import pytest
import sympy

from eqgenus.bundles import (
    TC,
    TD,
    Diff,
    ExtPower,
    KRoot,
    Line,
    Param,
    Scale,
    Sum,
    SymPower,
    T,
    Tensor,
    Trivial,
    bundle_from_json,
    bundle_to_json,
    dirac_cusp_family,
    is_pure,
    loop_signature_family,
    uses_kroot,
)
from eqgenus.errors import ScenarioError
from eqgenus.genera import chern_character
from eqgenus.spaces import cp


def coeffs(M, E):
    ch = chern_character(M, E)
    out = []
    for k in range(M.complex_dim + 1):
        c = ch.coefficient((k,))
        out.append(c if isinstance(c, Fraction) else c[0])
    return out


def oracle(n, expr):
    """Taylor coefficients in x of a closed-form sympy expression."""
    x = sympy.Symbol("x")
    s = sympy.series(expr(x), x, 0, n + 1).removeO()
    return [Fraction(str(sympy.Rational(s.coeff(x, k)))) for k in range(n + 1)]


def test_tangent_of_cp2():
    assert coeffs(cp(2), T) == [2, 3, Fraction(3, 2)]


def test_dual_and_complexified():
    M = cp(3)
    t, td, tc = coeffs(M, T), coeffs(M, TD), coeffs(M, TC)
    assert td == [(-1) ** k * c for k, c in enumerate(t)]
    assert tc == [a + b for a, b in zip(t, td)]


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("i", [0, 1, 2, 3])
def test_exterior_powers_match_generating_function(n, i):
    # T = (n+1) L - 1, so Lambda_t T = (1 + t e^x)^(n+1) / (1 + t)
    t = sympy.Symbol("t")
    gen = lambda x: sympy.expand((1 + t * sympy.exp(x)) ** (n + 1) * sum((-t) ** j for j in range(i + 1))).coeff(t, i)
    assert coeffs(cp(n), ExtPower(i, T)) == oracle(n, gen)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("i", [1, 2, 3])
def test_symmetric_powers_match_generating_function(n, i):
    # S_t T = (1 - t) / (1 - t e^x)^(n+1)
    t = sympy.Symbol("t")

    def gen(x):
        inv = sum(sympy.binomial(n + j, j) * (t * sympy.exp(x)) ** j for j in range(i + 1))
        return sympy.expand((1 - t) * inv).coeff(t, i)

    assert coeffs(cp(n), SymPower(i, T)) == oracle(n, gen)


def test_line_bundle_is_exponential():
    assert coeffs(cp(3), Line((2,))) == [1, 2, 2, Fraction(4, 3)]


def test_sum_tensor_diff_are_ring_operations():
    M = cp(3)
    a, b = coeffs(M, T), coeffs(M, Line((1,)))
    assert coeffs(M, Sum((T, Line((1,))))) == [x + y for x, y in zip(a, b)]
    assert coeffs(M, Diff(T, T)) == [0] * 4
    prod = [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(4)]
    assert coeffs(M, Tensor((T, Line((1,))))) == prod


def test_canonical_root_on_cp5():
    # K = O(-6), K^(1/3) = O(-2)
    assert coeffs(cp(5), KRoot(3, 1)) == coeffs(cp(5), Line((-2,)))


def test_scale_by_sign():
    assert coeffs(cp(2), Scale(Param(-1), T)) == [-c for c in coeffs(cp(2), T)]


def test_trivial_rank():
    assert coeffs(cp(2), Trivial()) == [1, 0, 0]


def test_purity():
    assert is_pure(Tensor((T, KRoot(2, 1))))
    assert not is_pure(loop_signature_family())
    assert uses_kroot(Sum((T, KRoot(3, 1))))
    assert not uses_kroot(dirac_cusp_family())


@pytest.mark.parametrize(
    "E",
    [
        T,
        TD,
        TC,
        Trivial(),
        Line((1, -2)),
        KRoot(3, 2),
        Sum((T, TD)),
        Diff(TC, Trivial()),
        Tensor((TD, KRoot(3, 1))),
        ExtPower(2, T),
        SymPower(3, TC),
        Scale(Param(-1, 1, 0), T),
        loop_signature_family(),
        dirac_cusp_family(),
    ],
)
def test_json_round_trip(E):
    assert bundle_from_json(bundle_to_json(E)) == E


@pytest.mark.parametrize("obj", ["X", {"line": "x"}, {"kroot": [2]}, {"extpower": [2]}, 3, {"a": 1, "b": 2}])
def test_malformed_bundles(obj):
    with pytest.raises(ScenarioError):
        bundle_from_json(obj)
