from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eqgenus.algebra import LaurentPoly, RationalFunction
from eqgenus.bundles import TC, KRoot
from eqgenus.equivariant import (
    ClassChern,
    ClassEuler,
    ClassLine,
    ClassOne,
    ClassProduct,
    ClassSum,
    ClassZ,
    action_from_json,
    class_from_json,
    component_signatures,
    equivariant_integral,
    genus_spec,
    higher_vanishing_check,
    is_effective,
    level_n_spec,
    limit_at_cusp,
    linear_cp_action,
    local_datum,
    required_cover,
    rigidity_report,
    sigma_fixed_set,
    structure_checks,
    twisted_spec,
)
from eqgenus.errors import PreconditionError, ScenarioError
from eqgenus.genera import AHAT, SIGNATURE, TODD, chi_y, index

u = LaurentPoly({1: Fraction(1)}, "u")
one = LaurentPoly({0: Fraction(1)}, "u")


def weights(max_n=4):
    return st.lists(st.integers(-4, 4), min_size=2, max_size=max_n + 1).filter(lambda w: len(set(w)) > 1)


def test_fixed_components_of_linear_action():
    A = linear_cp_action([0, 0, 1, 2, 2])
    dims = [F.Y.complex_dim for F in A.components]
    assert dims == [1, 0, 1]
    assert sum(F.Y.euler_characteristic() for F in A.components) == 5


def test_local_signature_datum_at_isolated_point():
    A = linear_cp_action([0, 1, 2])
    expected = RationalFunction((1 + u) * (1 + u * u), (1 - u) * (1 - u * u))
    assert local_datum(A, 0, genus_spec(SIGNATURE)) == expected


def test_signature_character_is_constant():
    rep = rigidity_report(linear_cp_action([0, 1, 2]), genus_spec(SIGNATURE))
    assert rep.constant and rep.agree and rep.values == (1,)


def test_twisted_signature_character():
    rep = rigidity_report(linear_cp_action([0, 1, 2]), twisted_spec(SIGNATURE, TC))
    assert not rep.constant
    f = rep.character[0]
    assert f == RationalFunction(LaurentPoly({-2: 2, -1: 4, 0: 4, 1: 4, 2: 2}, "u"))
    assert f.evaluate(Fraction(1)) == 16


@settings(max_examples=15, deadline=None)
@given(weights(), st.integers(-5, 5))
def test_global_weight_shift_leaves_character_unchanged(w, c):
    spec = twisted_spec(SIGNATURE, TC)
    a = rigidity_report(linear_cp_action(w), spec).character
    b = rigidity_report(linear_cp_action([x + c for x in w]), spec).character
    assert a == b


@settings(max_examples=10, deadline=None)
@given(weights(3), st.sampled_from([Fraction(2), Fraction(-3), Fraction(1, 2)]))
def test_cover_substitutes_u_power(w, p):
    spec = twisted_spec(SIGNATURE, TC)
    A = linear_cp_action(w)
    f1 = rigidity_report(A, spec).character[0]
    f2 = rigidity_report(A.with_cover(2), spec).character[0]
    assert f2.evaluate(p) == f1.evaluate(p * p)


@settings(max_examples=15, deadline=None)
@given(weights(5))
def test_genera_are_rigid(w):
    A = linear_cp_action(w)
    for g in (SIGNATURE, TODD, chi_y()):
        rep = rigidity_report(A, genus_spec(g))
        assert rep.constant and rep.agree


@pytest.mark.parametrize("w", [[0, 1, 2, 3], [0, 0, 1, 5], [0, 1, 2, 3, 4, 5], [-2, 0, 0, 3, 3, 4]])
def test_ahat_character_vanishes(w):
    spec = genus_spec(AHAT)
    rep = rigidity_report(linear_cp_action(w, required_cover(spec)), spec)
    assert rep.constant and rep.values == (0,)


def test_required_cover():
    assert required_cover(genus_spec(SIGNATURE)) == 1
    assert required_cover(genus_spec(AHAT)) == 2
    assert required_cover(twisted_spec(TODD, KRoot(3, 1))) == 3
    # the level-N family carries y = -zeta_N as a scalar, not a K-root
    assert required_cover(level_n_spec(3, 1)) == 1


def test_kroot_character_is_monomial():
    spec = twisted_spec(TODD, KRoot(2, 1))
    rep = rigidity_report(linear_cp_action([0, 1, 1, 3], required_cover(spec)), spec)
    assert rep.constant and rep.values == (0,)
    assert rep.exponents == (0,)


def test_level_three_rigid_on_cp5():
    spec = level_n_spec(3, 2)
    rep = rigidity_report(linear_cp_action([0, 1, 2, 3, 4, 5], required_cover(spec)), spec)
    assert rep.constant and rep.agree


# -- integration of equivariant classes ---------------------------------------------------


def test_integrals_on_cp2():
    A = linear_cp_action([0, 1, 2])
    assert equivariant_integral(A, ClassOne()) == 0
    assert equivariant_integral(A, ClassEuler()) == 3
    assert equivariant_integral(A, ClassChern(2)) == 3
    assert equivariant_integral(A, ClassZ(1)) == 0


@settings(max_examples=15, deadline=None)
@given(weights(3), st.lists(st.integers(-2, 2), min_size=1, max_size=4))
def test_integrals_are_polynomial(w, shifts):
    A = linear_cp_action(w)
    cls = ClassProduct(tuple(ClassLine((1,), s) for s in shifts))
    v = equivariant_integral(A, cls)
    assert all(e >= 0 for e in v.terms)
    n = len(w) - 1
    # degree below the dimension integrates to zero
    if len(shifts) < n:
        assert not v


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_top_power_of_hyperplane_class(n):
    A = linear_cp_action(list(range(n + 1)))
    v = equivariant_integral(A, ClassProduct((ClassLine((1,)),) * n))
    assert v == 1


def test_class_json():
    c = class_from_json({"product": [{"line": [1]}, {"sum": ["z", {"chern": 1}]}]})
    assert isinstance(c, ClassProduct) and isinstance(c.factors[1], ClassSum)
    assert class_from_json({"power": [0, "z"]}) == ClassOne()
    with pytest.raises(ScenarioError):
        class_from_json({"cube": 3})


# -- sigma-fixed sets, vanishing, cusp limits, structure -------------------------------------


def test_sigma_fixed_sets():
    s = sigma_fixed_set(linear_cp_action([0, 0, 0, 1, 1, 1]), 2)
    assert s.codim == 6 and [M.complex_dim for M in s.components] == [2, 2]
    s = sigma_fixed_set(linear_cp_action([0, 0, 1, 1, 2, 2]), 3)
    assert s.codim == 8 and len(s.components) == 3
    with pytest.raises(PreconditionError):
        sigma_fixed_set(linear_cp_action([0, 1]), 1)


def test_effectiveness():
    assert is_effective(linear_cp_action([0, 1, 3]))
    assert not is_effective(linear_cp_action([0, 2, 4]))


@pytest.mark.parametrize(
    "w, o, level, codim, r",
    [([0, 0, 0, 1, 1, 1], 2, 2, 6, 1), ([0, 0, 1, 1, 2, 2], 3, 2, 8, 1), ([0, 1, 2, 3], 2, 2, 4, 0)],
)
def test_dirac_vanishing_instances(w, o, level, codim, r):
    rep = higher_vanishing_check(linear_cp_action(w), o, level)
    assert (rep.status, rep.codim, rep.r) == ("pass", codim, r)


def test_level_three_vanishing_instance():
    rep = higher_vanishing_check(linear_cp_action([0, 0, 0, 1, 1, 1]), 2, 3)
    assert rep.status == "pass" and rep.codim == 6


def test_vanishing_preconditions():
    with pytest.raises(PreconditionError):
        higher_vanishing_check(linear_cp_action([0, 1, 2]), 2)
    rep = higher_vanishing_check(linear_cp_action([0, 2, 4, 6]), 2)
    assert rep.status == "not applicable"


@pytest.mark.parametrize("w", [[0, 1, 2], [0, 0, 1], [0, 1, 2, 3, 4], [3, -1, 0, 0, 2], [0, 1]])
def test_cusp_limit_identity(w):
    A = linear_cp_action(w)
    lim = limit_at_cusp(A)
    assert lim == sum(component_signatures(A)) == index(A.M, SIGNATURE)


def test_component_signatures_are_oriented():
    assert component_signatures(linear_cp_action([0, 1, 2])) == [1, -1, 1]


@pytest.mark.parametrize("w", [[0, 1], [0, 0, 1], [0, 1, 1, 1, 2], [0, 0, 1, 1, 2, 2], [5, -3, 0, 0, 1]])
def test_structure_instance(w):
    rep = structure_checks(linear_cp_action(w))
    assert rep.passed
    assert rep.dim_sum == len(w) and rep.witness == 1


def test_action_json():
    A = action_from_json({"type": "linear_cp", "weights": [0, 1], "cover": 2})
    assert A.d == 2
    for bad in ({"type": "linear_cp", "weights": [0, "1"]}, {"type": "torus"}, {"weights": [0, 1]}):
        with pytest.raises(ScenarioError):
            action_from_json(bad)
    with pytest.raises(ScenarioError):
        action_from_json({"type": "linear_cp", "weights": [0, 1], "cover": 0})
