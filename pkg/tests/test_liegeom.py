import random
from fractions import Fraction as Q

import pytest

from skewtor.clifford import act_form, build_rep
from skewtor.errors import DegreeError, StructureError
from skewtor.forms import Form, hodge, random_form, wedge
from skewtor.liegeom import (LieModel, codiff, curvature,
                             curvature_identity_residuals, d_form,
                             d_via_connection, dirac_square_residual,
                             dirac_torsion_anticommutator_residual,
                             lc_trace_vector, levi_civita, nabla_form,
                             parallel_spinor_field_equations, parallel_spinors,
                             tt_contraction, with_torsion)
from skewtor.linalg import mat_eq_zero, mat_vec
from skewtor.registry import canonical_omega3, registry


@pytest.fixture(scope="module")
def heis7():
    return registry()["heis7"].model


@pytest.fixture(scope="module")
def solv7():
    return registry()["solv7"].model


@pytest.fixture(scope="module")
def heis5():
    return registry()["heis5"].model


def test_jacobi_enforced():
    # d(de4) = -e1 ^ de5 = -2 e1^e3^e4 != 0
    bad = [Form(5, 2), Form(5, 2), Form(5, 2),
           Form(5, 2, {(1, 5): Q(1)}),
           Form(5, 2, {(1, 2): Q(2), (3, 4): Q(2)})]
    with pytest.raises(StructureError):
        LieModel(5, bad, name="bad")


def test_jacobi_zero_on_registry():
    for entry in registry().values():
        assert all(r.is_zero() for r in entry.model.jacobi_residuals())


def test_structure_constant_recovery(heis7):
    # de4 = e1^e6 + e3^e7 corresponds to [e1,e6] = -e4, [e3,e7] = -e4
    assert heis7.bracket(1, 6)[3] == -1
    assert heis7.bracket(3, 7)[3] == -1
    assert heis7.bracket(6, 1)[3] == 1


def test_d_matches_registry_values(heis7):
    w3 = canonical_omega3()
    dw3 = d_form(heis7, w3)
    e = lambda *ix, c=1: Form.blade(7, *ix, coeff=c)
    assert dw3 == e(1, 2, 3, 4) + e(2, 4, 6, 7) + e(1, 2, 5, 6) - e(2, 3, 5, 7)
    assert d_form(heis7, Form.basis_vector(7, 4)) == e(1, 6) + e(3, 7)
    assert d_form(heis7, Form.scalar(7, 5)).is_zero()


def test_d_squared_zero_and_connection_route(heis7, solv7, heis5):
    rng = random.Random(17)
    for model in (heis7, solv7, heis5):
        for degree in (1, 2, 3):
            a = random_form(model.n, degree, rng, span=3)
            assert d_form(model, d_form(model, a)).is_zero()
            assert d_via_connection(model, a) == d_form(model, a)


def test_d_is_an_antiderivation(heis7, solv7, heis5):
    rng = random.Random(31)
    for model in (heis7, solv7, heis5):
        n = model.n
        for p_deg in (1, 2):
            for q_deg in (1, 2):
                a = random_form(n, p_deg, rng, span=3)
                b = random_form(n, q_deg, rng, span=3)
                lhs = d_form(model, wedge(a, b))
                rhs = wedge(d_form(model, a), b) \
                    + wedge(a, d_form(model, b)).scale(Q(-1) ** p_deg)
                assert lhs == rhs


def test_codiff_examples(heis7, solv7, heis5):
    w3 = canonical_omega3()
    assert codiff(solv7, w3).is_zero()
    eta = Form.basis_vector(5, 5)
    t = wedge(eta, d_form(heis5, eta))
    assert codiff(heis5, t).is_zero()
    assert codiff(heis5, Form.scalar(5, 3)).is_zero()


def test_codiff_against_hodge_composite(heis7, solv7, heis5):
    # delta = (-1)^(n(p+1)+1) * d * on p-forms of an oriented n-frame
    rng = random.Random(23)
    for model in (heis5, heis7, solv7):
        n = model.n
        for p in (1, 2, 3):
            a = random_form(n, p, rng, span=3)
            sign = Q(-1) ** (n * (p + 1) + 1)
            composite = hodge(d_form(model, hodge(a))).scale(sign)
            assert codiff(model, a) == composite


def test_levi_civita_properties(heis5):
    lc = levi_civita(heis5)
    n = heis5.n
    # metric: skew in last two arguments (constructor enforces, but recheck)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                assert lc.omega[i][j][k] == -lc.omega[i][k][j]
    # torsion-free: nabla_i e_j - nabla_j e_i = [e_i, e_j]
    assert all(all(x == 0 for x in row) for row in lc.torsion_residual())
    # the worked value nabla_{e1} e2 = -e5
    assert lc.nabla_vector(1, [Q(1) if k == 1 else Q(0) for k in range(n)]) == \
        [Q(0), Q(0), Q(0), Q(0), Q(-1)]


def test_levi_civita_uniqueness(heis7):
    # adding any nonzero metric-compatible perturbation breaks torsion-freeness
    lc = levi_civita(heis7)
    t = Form(7, 3, {(1, 2, 3): Q(1)})
    conn = with_torsion(heis7, t)
    res = conn.torsion_residual()
    assert any(any(x != 0 for x in row) for row in res)


def test_abelian_trivial():
    model = registry()["abelian7"].model
    lc = levi_civita(model)
    assert all(x == 0 for plane in lc.omega for row in plane for x in row)
    assert curvature(lc).scal == 0


def test_with_torsion_validation(heis5):
    with pytest.raises(DegreeError):
        with_torsion(heis5, Form(5, 2, {(1, 2): Q(1)}))


def test_curvature_symmetries(heis7):
    w3 = canonical_omega3()
    dw3 = d_form(heis7, w3)
    t = -hodge(dw3)
    table = curvature(with_torsion(heis7, t))
    n = 7
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    assert table.r[i][j][k][l] == -table.r[j][i][k][l]
                    assert table.r[i][j][k][l] == -table.r[i][j][l][k]
    assert table.scal == sum(table.r[i][j][j][i] for i in range(n) for j in range(n))


def test_heis7_tables(heis7):
    w3 = canonical_omega3()
    t = -hodge(d_form(heis7, w3))
    conn = with_torsion(heis7, t)
    assert all(nabla_form(conn, i, w3).is_zero() for i in range(1, 8))
    table = curvature(conn)
    assert table.ric_diag() == [Q(-2), Q(0), Q(-2), Q(0), Q(0), Q(-2), Q(-2)]
    assert table.scal == -8
    ttc = tt_contraction(t)
    assert [ttc[i][i] for i in range(7)] == [Q(4), Q(0), Q(4), Q(4), Q(4), Q(4), Q(4)]
    assert curvature(levi_civita(heis7)).ric_diag() == \
        [Q(-1), Q(0), Q(-1), Q(1), Q(1), Q(-1), Q(-1)]


def test_trace_vector_computed_not_assumed(solv7, heis7):
    # every registry model turns out unimodular (trace vector zero) ...
    assert not any(lc_trace_vector(solv7))
    assert not any(lc_trace_vector(heis7))
    # ... but the term is computed, and genuinely matters off that class:
    hyper = LieModel(2, [Form(2, 2), Form(2, 2, {(1, 2): Q(1)})], name="aff2")
    v = lc_trace_vector(hyper)
    assert any(v)
    rep2 = build_rep(2)
    assert mat_eq_zero(dirac_square_residual(hyper, Form(2, 3), rep2))
    # a 4-dim variant where the trace direction carries spin-connection content
    aff4 = LieModel(4, [Form(4, 2), Form(4, 2, {(1, 2): Q(1)}), Form(4, 2),
                        Form(4, 2, {(1, 3): Q(-1)})], name="aff4")
    assert lc_trace_vector(aff4) == [Q(-1), Q(0), Q(0), Q(0)]
    rep4 = build_rep(4)
    t0 = Form(4, 3)
    assert mat_eq_zero(dirac_square_residual(aff4, t0, rep4))
    assert mat_eq_zero(dirac_torsion_anticommutator_residual(aff4, t0, rep4))
    # and a torsion whose codifferential does not vanish: the identity still
    # closes exactly, which pins the 1/2 on the codifferential term
    t1 = Form(4, 3, {(1, 2, 3): Q(1)})
    assert not codiff(aff4, t1).is_zero()
    assert mat_eq_zero(dirac_square_residual(aff4, t1, rep4))
    assert mat_eq_zero(dirac_torsion_anticommutator_residual(aff4, t1, rep4))
    res = curvature_identity_residuals(aff4, t1)
    assert all(v == 0 for v in res.values())
    # dropping the trace term breaks the identity
    from skewtor.liegeom import dirac_matrix, spinor_connection
    from skewtor.linalg import (CQ, mat_add, mat_identity, mat_mul, mat_scale,
                                mat_sub)
    conn = with_torsion(aff4, t0)
    lam = spinor_connection(conn, rep4)
    d2 = mat_mul(dirac_matrix(conn, rep4), dirac_matrix(conn, rep4))
    lap_no_trace = [[CQ(0)] * rep4.dim for _ in range(rep4.dim)]
    for i in range(4):
        lap_no_trace = mat_sub(lap_no_trace, mat_mul(lam[i], lam[i]))
    scal = curvature(conn).scal
    rhs = mat_add(lap_no_trace, mat_scale(mat_identity(rep4.dim, CQ(1), CQ(0)),
                                          CQ(Q(scal, 4))))
    assert not mat_eq_zero(mat_sub(d2, rhs))


def test_section2_identities_zero(heis7, solv7, heis5):
    w3 = canonical_omega3()
    cases = [
        (heis7, -hodge(d_form(heis7, w3))),
        (solv7, -hodge(d_form(solv7, w3))),
        (heis5, wedge(Form.basis_vector(5, 5),
                      d_form(heis5, Form.basis_vector(5, 5)))),
        (registry()["abelian5"].model, Form(5, 3, {(1, 2, 3): Q(1)})),
    ]
    for model, t in cases:
        res = curvature_identity_residuals(model, t)
        assert all(v == 0 for v in res.values()), (model.name, res)


def test_operator_identities_and_parallel_counts(heis7, solv7, heis5):
    w3 = canonical_omega3()
    cases = [
        (heis7, -hodge(d_form(heis7, w3)), 4),
        (solv7, -hodge(d_form(solv7, w3)), 2),
        (heis5, wedge(Form.basis_vector(5, 5),
                      d_form(heis5, Form.basis_vector(5, 5))), 2),
    ]
    for model, t, count in cases:
        rep = build_rep(model.n)
        assert mat_eq_zero(dirac_square_residual(model, t, rep))
        assert mat_eq_zero(dirac_torsion_anticommutator_residual(model, t, rep))
        conn = with_torsion(model, t)
        basis = parallel_spinors(conn, rep)
        assert len(basis) == count
        tm = act_form(rep, t)
        assert all(all(not c for c in mat_vec(tm, psi)) for psi in basis)
        _, residuals = parallel_spinor_field_equations(model, t, rep)
        for r1, r2 in residuals:
            assert all(not c for c in r1)
            assert all(not c for vec in r2 for c in vec)


def test_abelian_operator_identities():
    for name in ("abelian5", "abelian6", "abelian7"):
        model = registry()[name].model
        rep = build_rep(model.n)
        t = Form(model.n, 3)
        assert mat_eq_zero(dirac_square_residual(model, t, rep))
        assert mat_eq_zero(dirac_torsion_anticommutator_residual(model, t, rep))
        assert len(parallel_spinors(with_torsion(model, t), rep)) == rep.dim
