import random
from fractions import Fraction as Q

import pytest

from skewtor.clifford import (CQ, act_form, build_rep, common_kernel,
                              eigen_report, half_spinor_bases,
                              kernel_conditions_5d, restrict, spin_endo_5d,
                              spinor_5d)
from skewtor.forms import Form, contract, hodge, random_form, wedge
from skewtor.linalg import invert, mat_add, mat_mul, mat_vec
from skewtor.registry import canonical_omega3


@pytest.mark.parametrize("n", range(2, 9))
def test_clifford_relations(n):
    rep = build_rep(n)
    assert rep.dim == 2 ** (n // 2)
    for i in range(n):
        for j in range(i, n):
            anti = mat_add(mat_mul(rep.gammas[i], rep.gammas[j]),
                           mat_mul(rep.gammas[j], rep.gammas[i]))
            want = CQ(-2) if i == j else CQ(0)
            assert all(anti[a][b] == (want if a == b else CQ(0))
                       for a in range(rep.dim) for b in range(rep.dim))


@pytest.mark.parametrize("n", (5, 6, 7))
def test_gammas_anti_hermitian(n):
    rep = build_rep(n)
    for g in rep.gammas:
        for a in range(rep.dim):
            for b in range(rep.dim):
                assert g[a][b] == -g[b][a].conj()


def test_act_form_algebra_map_on_disjoint_blades():
    rep = build_rep(7)
    a = Form.blade(7, 1, 3)
    b = Form.blade(7, 2, 5, 6)
    lhs = act_form(rep, wedge(a, b))
    rhs = mat_mul(act_form(rep, a), act_form(rep, b))
    assert lhs == rhs


def test_omega3_spectrum_and_normalizations():
    rep = build_rep(7)
    w3 = canonical_omega3()
    report = eigen_report(act_form(rep, w3))
    assert report.pairs == [(Q(-7), 1), (Q(1), 7)]
    assert report.hermitian
    # the simple eigenvector satisfies the contraction identity
    from skewtor.linalg import nullspace
    act = act_form(rep, w3)
    shifted = [[act[i][j] + (CQ(7) if i == j else CQ(0)) for j in range(8)]
               for i in range(8)]
    (psi0,) = nullspace(shifted, one=CQ(1))
    sw3 = hodge(w3)
    assert all(mat_vec(act_form(rep, sw3), psi0)[k] == CQ(-7) * psi0[k]
               for k in range(8))
    for i in range(1, 8):
        lhs = mat_vec(act_form(rep, contract(sw3, i)), psi0)
        rhs = mat_vec(act_form(rep, Form.basis_vector(7, i)), psi0)
        assert all(l == CQ(4) * r for l, r in zip(lhs, rhs))


def test_contact_form_spectrum_dim5():
    rep = build_rep(5)
    eta = Form.basis_vector(5, 5)
    de = Form.blade(5, 1, 2, coeff=2) + Form.blade(5, 3, 4, coeff=2)
    report = eigen_report(act_form(rep, wedge(eta, de)))
    assert report.multiset() == [Q(-4), Q(0), Q(0), Q(4)]


def test_eigen_multiset_invariant_under_conjugation():
    rep = build_rep(5)
    eta = Form.basis_vector(5, 5)
    de = Form.blade(5, 1, 2, coeff=2) + Form.blade(5, 3, 4, coeff=2)
    m = act_form(rep, wedge(eta, de))
    rng = random.Random(3)
    g = [[CQ(rng.randint(-3, 3), rng.randint(-2, 2)) for _ in range(4)]
         for _ in range(4)]
    g[0][0] = g[0][0] + CQ(7)
    ginv = invert(g)
    conj = mat_mul(mat_mul(g, m), ginv)
    assert eigen_report(conj).pairs == eigen_report(m).pairs


def test_common_kernel_conventions():
    assert len(common_kernel([], dim=8)) == 8
    rep = build_rep(5)
    g12 = mat_mul(rep.gammas[0], rep.gammas[1])
    g34 = mat_mul(rep.gammas[2], rep.gammas[3])
    s = mat_add(g12, g34)
    ker = common_kernel([s])
    assert len(ker) == 2


def test_kernel_conditions_match_membership():
    rng = random.Random(99)
    for _ in range(200):
        t = random_form(5, 3, rng, span=4)
        x = random_form(5, 1, rng, span=4)
        endo = spin_endo_5d(t, x)
        for which in ("plus", "minus"):
            member = all(not c for c in mat_vec(endo, spinor_5d(which)))
            assert member == kernel_conditions_5d(t, x, which)


def test_kernel_conditions_signed_samples():
    t = Form(5, 3, {(2, 3, 4): Q(1)})
    assert kernel_conditions_5d(t, Form(5, 1, {(1,): Q(-1)}), "plus")
    assert not kernel_conditions_5d(t, Form(5, 1, {(1,): Q(1)}), "plus")
    assert kernel_conditions_5d(t, Form(5, 1, {(1,): Q(1)}), "minus")
    assert not kernel_conditions_5d(t, Form(5, 1, {(1,): Q(-1)}), "minus")
    assert kernel_conditions_5d(Form(5, 3), Form(5, 1), "plus")
    assert kernel_conditions_5d(Form(5, 3), Form(5, 1), "minus")


def test_half_module_spectrum_dim6():
    rep = build_rep(6)
    plus, minus = half_spinor_bases(rep)
    assert len(plus) == len(minus) == 4
    endo = act_form(rep, [Form.blade(6, 1, 2, 3, 4) + Form.blade(6, 1, 2, 5, 6)
                          + Form.blade(6, 3, 4, 5, 6), Form.scalar(6, 3)])
    for basis in (plus, minus):
        assert eigen_report(restrict(endo, basis)).multiset() == \
            [Q(0), Q(4), Q(4), Q(4)]


def test_hermiticity_tracks_degree_mod_four():
    # blade actions are hermitian exactly for degrees 0, 3 mod 4
    from skewtor.linalg import is_hermitian
    rep = build_rep(7)
    degree_forms = {
        1: Form.blade(7, 2),
        2: Form.blade(7, 1, 4),
        3: Form.blade(7, 1, 2, 3),
        4: Form.blade(7, 2, 3, 5, 7),
    }
    for degree, form in degree_forms.items():
        hermitian = is_hermitian(act_form(rep, form))
        assert hermitian == (degree % 4 in (0, 3))
    assert eigen_report(act_form(rep, Form.blade(7, 1, 2))).hermitian is False


def test_inhomogeneous_action_adds_scalar():
    rep = build_rep(6)
    scalar_only = act_form(rep, Form.scalar(6, Q(5, 2)))
    assert all(scalar_only[i][j] == (CQ(Q(5, 2)) if i == j else CQ(0))
               for i in range(8) for j in range(8))
