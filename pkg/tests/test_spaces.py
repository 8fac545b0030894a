from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqgenus.errors import PreconditionError, ScenarioError
from eqgenus.genera import EULER, SIGNATURE, TODD, index
from eqgenus.spaces import (
    cp,
    even_sphere,
    from_descriptor,
    hypersurface,
    is_c1_divisible,
    is_spin,
    point,
    product,
)


@pytest.mark.parametrize("n", range(1, 7))
def test_cp_euler_characteristic(n):
    M = cp(n)
    assert M.euler_characteristic() == n + 1
    assert M.integrate(M.gen("x") ** n) == 1


def test_k3_invariants():
    K3 = hypersurface(2, 4)
    assert K3.euler_characteristic() == 24
    assert is_spin(K3)
    assert index(K3, EULER) == 24


def test_quintic_threefold_euler():
    assert hypersurface(3, 5).euler_characteristic() == -200


def test_sphere_and_point():
    assert even_sphere(2).euler_characteristic() == 2
    assert index(even_sphere(2), SIGNATURE) == 0
    pt = point()
    assert pt.euler_characteristic() == 1
    assert index(pt, TODD) == 1


@pytest.mark.parametrize("n, spin", [(1, True), (2, False), (3, True), (4, False), (5, True)])
def test_spin_parity(n, spin):
    assert is_spin(cp(n)) is spin


def test_c1_divisibility():
    assert is_c1_divisible(cp(5), 3)
    assert is_c1_divisible(cp(5), 6)
    assert not is_c1_divisible(cp(5), 4)
    assert is_c1_divisible(hypersurface(2, 4), 7)  # c1 = 0


def test_product_renames_generators():
    M = product(cp(1), cp(1))
    assert M.ring.names == ("x", "x2")
    assert M.euler_characteristic() == 4
    assert M.complex_dim == 2


def test_mixed_product_rejected():
    with pytest.raises(PreconditionError):
        product(cp(1), even_sphere(1))


small = st.sampled_from([("cp", 1), ("cp", 2), ("cp", 3), ("hyp", 2)])


def _build(k):
    kind, n = k
    return cp(n) if kind == "cp" else hypersurface(n, 3)


@settings(max_examples=15, deadline=None)
@given(small, small, small)
def test_product_associative_on_invariants(a, b, c):
    A, B, C = map(_build, (a, b, c))
    left, right = product(product(A, B), C), product(A, product(B, C))
    for g in (EULER, SIGNATURE, TODD):
        assert index(left, g) == index(right, g) == index(A, g) * index(B, g) * index(C, g)


@pytest.mark.parametrize(
    "desc",
    [
        {"type": "cp", "n": 3},
        {"type": "hypersurface", "m": 2, "d": 4},
        {"type": "sphere", "n": 2},
        {"type": "point"},
        {"type": "product", "factors": [{"type": "cp", "n": 1}, {"type": "cp", "n": 2}]},
    ],
)
def test_descriptor_round_trip(desc):
    assert from_descriptor(desc).descriptor == desc


@pytest.mark.parametrize(
    "desc",
    [{"type": "torus"}, {"n": 2}, {"type": "cp", "n": "2"}, {"type": "cp", "n": 0}, {"type": "product"}],
)
def test_bad_descriptors(desc):
    with pytest.raises(ScenarioError):
        from_descriptor(desc)


def test_scale_of_hypersurface():
    assert hypersurface(2, 4).scale == Fraction(4)
