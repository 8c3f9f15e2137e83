import random
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from skewtor.errors import DegreeError, DimensionMismatch
from skewtor.forms import (Form, contract, hodge, inner, interior,
                           random_form, sigma_t, sigma_t_quadratic, so_action,
                           volume_form, wedge)
from skewtor.registry import canonical_omega3


def blade(n, *ix, c=1):
    return Form.blade(n, *ix, coeff=c)


def test_wedge_basis_case():
    assert wedge(blade(7, 1), blade(7, 2)) == blade(7, 1, 2)
    assert wedge(blade(7, 2), blade(7, 1)) == blade(7, 1, 2, c=-1)


def test_wedge_deta_squared():
    de = blade(5, 1, 2, c=2) + blade(5, 3, 4, c=2)
    assert wedge(de, de) == blade(5, 1, 2, 3, 4, c=8)


def test_wedge_odd_degree_square_vanishes():
    w3 = canonical_omega3()
    assert wedge(w3, w3).is_zero()


def test_wedge_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        wedge(blade(5, 1), blade(7, 1))


def test_interior_basis_cases():
    assert contract(blade(7, 1, 2), 1) == blade(7, 2)
    assert contract(blade(7, 1, 2), 2) == blade(7, 1, c=-1)
    assert interior(blade(7, 3), Form.scalar(7, 5)).is_zero()


def test_interior_eta_wedge_deta():
    eta = blade(5, 5)
    de = blade(5, 1, 2, c=2) + blade(5, 3, 4, c=2)
    assert contract(wedge(eta, de), 5) == de


def test_interior_omega3():
    w3 = canonical_omega3()
    assert contract(w3, 1) == blade(7, 2, 7) + blade(7, 3, 5) - blade(7, 4, 6)


rng_strategy = st.integers(min_value=0, max_value=10 ** 6)


@settings(max_examples=60, deadline=None)
@given(seed=rng_strategy, n=st.integers(min_value=2, max_value=8),
       p=st.integers(min_value=1, max_value=8), q=st.integers(min_value=0, max_value=8))
def test_interior_antiderivation(seed, n, p, q):
    p = min(p, n)
    q = min(q, n)
    rng = random.Random(seed)
    a = random_form(n, p, rng, span=3)
    b = random_form(n, q, rng, span=3)
    x = random_form(n, 1, rng, span=3)
    lhs = interior(x, wedge(a, b))
    rhs = wedge(interior(x, a), b) + wedge(a, interior(x, b)).scale(Q(-1) ** p)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(seed=rng_strategy, n=st.integers(min_value=2, max_value=8),
       p=st.integers(min_value=0, max_value=8))
def test_hodge_involution_sign(seed, n, p):
    p = min(p, n)
    a = random_form(n, p, random.Random(seed), span=4)
    assert hodge(hodge(a)) == a.scale(Q(-1) ** (p * (n - p)))


def test_hodge_of_scalar_is_volume():
    for n in range(2, 9):
        assert hodge(Form.scalar(n, 1)) == volume_form(n)


def test_star_omega3_contraction_norm():
    sw3 = hodge(canonical_omega3())
    for i in range(1, 8):
        for j in range(1, 8):
            assert inner(contract(sw3, i), contract(sw3, j)) == (4 if i == j else 0)


def test_inner_basics():
    assert inner(blade(7, 1, 2), blade(7, 1, 2)) == 1
    w3 = canonical_omega3()
    assert inner(w3, w3) == 7
    assert inner(blade(7, 1), blade(7, 1, 2)) == 0  # degree mismatch convention
    with pytest.raises(DegreeError):
        inner(blade(7, 1), blade(7, 1, 2), strict=True)


@settings(max_examples=40, deadline=None)
@given(seed=rng_strategy, n=st.integers(min_value=2, max_value=7),
       p=st.integers(min_value=0, max_value=7))
def test_inner_against_wedge_volume(seed, n, p):
    p = min(p, n)
    rng = random.Random(seed)
    a = random_form(n, p, rng, span=4)
    b = random_form(n, p, rng, span=4)
    assert wedge(a, hodge(b)) == volume_form(n).scale(inner(a, b))


def test_sigma_decomposable_vanishes():
    assert sigma_t(blade(7, 1, 2, 3)).is_zero()


def test_sigma_contact_value():
    eta = blade(5, 5)
    de = blade(5, 1, 2, c=2) + blade(5, 3, 4, c=2)
    t = wedge(eta, de)
    assert sigma_t(t) == blade(5, 1, 2, 3, 4, c=4)
    assert sigma_t(t).scale(2) == wedge(de, de)


@settings(max_examples=30, deadline=None)
@given(seed=rng_strategy, n=st.integers(min_value=3, max_value=8))
def test_sigma_two_definitions_agree(seed, n):
    t = random_form(n, 3, random.Random(seed), span=4)
    assert sigma_t(t) == sigma_t_quadratic(t)


def test_sigma_wrong_degree():
    with pytest.raises(DegreeError):
        sigma_t(blade(7, 1, 2))


def test_so_action_derivation_and_pinning():
    w3 = canonical_omega3()
    sw3 = hodge(w3)
    for z in range(1, 8):
        assert so_action(contract(w3, z), w3) == contract(sw3, z).scale(-3)
    rng = random.Random(9)
    alpha = random_form(6, 2, rng, span=3)
    a = random_form(6, 2, rng, span=3)
    b = random_form(6, 1, rng, span=3)
    lhs = so_action(alpha, wedge(a, b))
    rhs = wedge(so_action(alpha, a), b) + wedge(a, so_action(alpha, b))
    assert lhs == rhs


def test_blade_normalization_and_eval():
    f = Form.blade(5, 2, 1, coeff=3)
    assert f == blade(5, 1, 2, c=-3)
    assert f.eval(1, 2) == -3
    assert f.eval(2, 1) == 3
    assert f.eval(1, 1) == 0
