from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqgenus.algebra import YPoly, level_y
from eqgenus.bundles import TC, TD, KRoot, Line, Tensor
from eqgenus.errors import PreconditionError, ScenarioError
from eqgenus.genera import (
    AHAT,
    EULER,
    SIGNATURE,
    TODD,
    chi_y,
    cusp_values,
    dirac_cusp_series,
    index,
    level_r1,
    levelN_loop,
    loop_signature,
    parse_genus,
    parse_y,
    twisted_index,
)
from eqgenus.spaces import cp, even_sphere, hypersurface, point, product

K3 = hypersurface(2, 4)


@pytest.mark.parametrize("n", range(1, 6))
def test_signature_of_cp(n):
    assert index(cp(n), SIGNATURE) == (1 if n % 2 == 0 else 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_todd_of_cp(n):
    assert index(cp(n), TODD) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_chi_y_of_cp(n):
    assert index(cp(n), chi_y()) == YPoly([(-1) ** i for i in range(n + 1)], n)


def test_ahat_cp2():
    assert index(cp(2), AHAT) == Fraction(-1, 8)


def test_k3_table():
    assert [index(K3, g) for g in (EULER, SIGNATURE, AHAT, TODD)] == [24, -16, 2, 2]


@pytest.mark.parametrize("n", range(1, 5))
def test_chi_y_specializations(n):
    M = cp(n)
    assert index(M, chi_y(0)) == index(M, TODD)
    assert index(M, chi_y(1)) == index(M, SIGNATURE)
    formal = index(M, chi_y())
    assert sum(c * (-1) ** i for i, c in enumerate(formal.coeffs)) == index(M, EULER)


def test_chi_y_at_minus_one_is_not_normalizable():
    with pytest.raises(PreconditionError):
        index(cp(2), chi_y(-1))


def test_point_normalization():
    for g in (EULER, SIGNATURE, AHAT, TODD):
        assert index(point(), g) == 1


spaces = st.sampled_from([cp(1), cp(2), cp(3), K3])


@settings(max_examples=12, deadline=None)
@given(spaces, spaces)
def test_multiplicative(A, B):
    P = product(A, B)
    for g in (SIGNATURE, TODD, chi_y(Fraction(2))):
        assert index(P, g) == index(A, g) * index(B, g)


def test_ahat_vanishes_on_product_with_sphere_like_cp1():
    # CP1 is spin with positive scalar curvature
    assert index(cp(1), AHAT) == 0
    assert index(product(cp(1), K3), AHAT) == 0


def binom(a, n):
    out = Fraction(1)
    for i in range(n):
        out *= Fraction(a - i, i + 1)
    return out


@pytest.mark.parametrize("n", range(1, 7))
def test_riemann_roch(n):
    for k in range(-8, 9):
        expected = comb(n + k, n) if n + k >= 0 else binom(n + k, n)
        assert twisted_index(cp(n), TODD, Line((k,))) == expected


@pytest.mark.parametrize("n, N", [(3, 2), (3, 4), (5, 2), (5, 3), (5, 6)])
def test_todd_twisted_by_canonical_roots_vanishes(n, N):
    for a in range(1, N):
        assert twisted_index(cp(n), TODD, KRoot(N, a)) == 0


def test_kroot_requires_divisibility():
    with pytest.raises(PreconditionError):
        twisted_index(cp(2), TODD, KRoot(2, 1))


def test_twisted_signature_cp2():
    assert twisted_index(cp(2), SIGNATURE, TC) == 16


def test_loop_signature_examples():
    s = loop_signature(cp(2), 2)
    assert list(s.coeffs) == [1, 32, 256]
    assert s[1] == 2 * twisted_index(cp(2), SIGNATURE, TC)
    assert all(c == 0 for c in loop_signature(even_sphere(2), 3).coeffs)


def test_dirac_cusp_k3():
    assert list(dirac_cusp_series(K3, 2).coeffs) == [2, 40, -124]


def test_dirac_cusp_needs_spin():
    with pytest.raises(PreconditionError, match="spin condition failed: c1 = 3x"):
        dirac_cusp_series(cp(2), 1)


@pytest.mark.parametrize("M", [K3, cp(3)], ids=["K3", "CP3"])
def test_level_two_equals_loop_signature(M):
    assert list(levelN_loop(M, 2, 3).coeffs) == list(loop_signature(M, 3).coeffs)


def test_level_n_low_coefficients():
    M, N = cp(5), 3
    g = chi_y(level_y(N))
    s = levelN_loop(M, N, 1)
    assert s[0] == index(M, g)
    assert s[1] == twisted_index(M, g, level_r1(N))


def test_level_n_needs_divisibility():
    with pytest.raises(PreconditionError):
        levelN_loop(cp(4), 3, 1)


def test_cusp_values_k3():
    cv = cusp_values(K3, 2)
    assert cv.todd_kroot == {1: 2}
    assert cv.chi_y[1] == -16


def test_cusp_values_cp5_level3():
    cv = cusp_values(cp(5), 3)
    assert all(v == 0 for v in cv.todd_kroot.values())


def test_level_three_vanishing_instance():
    assert twisted_index(cp(5), TODD, Tensor((TD, KRoot(3, 1)))) == 0


@pytest.mark.parametrize("obj", ["signature", "ahat", "todd", "euler", "chi_y", {"chi_y": "1/2"}, {"chi_y": {"N": 3}}])
def test_parse_genus(obj):
    parse_genus(obj)


@pytest.mark.parametrize("obj", ["L", {"chi_y": "x"}, {"chi_y": {"N": "3"}}, {"todd": 1}, 4])
def test_parse_genus_rejects(obj):
    with pytest.raises(ScenarioError):
        parse_genus(obj)


def test_parse_y_rationals():
    assert parse_y("-3/4") == Fraction(-3, 4)
    assert parse_y(2) == 2
