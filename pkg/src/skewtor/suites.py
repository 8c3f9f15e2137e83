"""Verification suites: every displayed identity, constant and table as a Check.

Each suite function returns a Report; `run_suite` dispatches by name.  Checks
carry anchors into the source text so SKIPped global statements are visible
rather than silently absent.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import acskit, clifford, equivar, g2
from .forms import (Form, contract, hodge, inner, random_form, sigma_t,
                    sigma_t_quadratic, volume_form, wedge)
from .errors import NoSkewConnection
from .liegeom import (codiff, curvature, curvature_identity_residuals, d_form,
                      dirac_square_residual,
                      dirac_torsion_anticommutator_residual, levi_civita,
                      nabla_form, parallel_spinor_field_equations,
                      parallel_spinors, tt_contraction, with_torsion)
from .linalg import mat_eq_zero, mat_vec
from .registry import canonical_omega3, registry
from .reporting import Report, check, merge, skip

Q = Fraction

SUITES = ("exterior", "clifford", "section2", "slformula", "g2",
          "equivariant", "contact", "hermitian", "examples")


def contact_structure(name):
    e = registry()[name]
    s = e.structure
    return acskit.AlmostContact(e.model, s["xi"], s["eta"], s["phi"])

def hermitian_structure(name):
    e = registry()[name]
    return acskit.AlmostHermitian(e.model, e.structure["J"])

def g2_structure(name):
    return g2.G2Structure(registry()[name].model)


def characteristic_torsion(name):
    """The model's characteristic torsion under its registered structure."""
    e = registry()[name]
    kind = e.structure["kind"]
    if kind == "g2":
        return g2.torsion_form(g2_structure(name))
    if kind == "contact":
        return acskit.contact_torsion(contact_structure(name))
    if kind == "hermitian":
        return acskit.hermitian_torsion(hermitian_structure(name))
    raise NoSkewConnection("no-structure")


def admissible_models():
    """(name, torsion) for every registered model whose structure admits one."""
    out = []
    for name in sorted(registry()):
        try:
            out.append((name, characteristic_torsion(name)))
        except NoSkewConnection:
            continue
    return out


# ---------------------------------------------------------------------------

def suite_exterior() -> Report:
    checks = []
    e = lambda *ix, c=1: Form.blade(7, *ix, coeff=c)
    checks.append(check("exterior.wedge.basis", "frame conventions",
                        wedge(e(1), e(2)) == e(1, 2), provenance="trivial"))
    de = Form.blade(5, 1, 2, coeff=2) + Form.blade(5, 3, 4, coeff=2)
    checks.append(check("exterior.wedge.deta-squared", "Prop 7.1",
                        wedge(de, de) == Form.blade(5, 1, 2, 3, 4, coeff=8),
                        value=wedge(de, de), expected="8*e1^e2^e3^e4",
                        provenance="stated"))
    w3 = canonical_omega3()
    checks.append(check("exterior.wedge.odd-square", "graded commutativity",
                        wedge(w3, w3).is_zero(), provenance="trivial"))
    checks.append(check("exterior.interior.basis", "notation",
                        contract(e(1, 2), 1) == e(2), provenance="trivial"))
    eta5 = Form.basis_vector(5, 5)
    checks.append(check("exterior.interior.eta-wedge", "contact conventions",
                        contract(wedge(eta5, de), 5) == de, provenance="derived"))
    checks.append(check("exterior.interior.omega3", "canonical 3-form",
                        contract(w3, 1) == e(2, 7) + e(3, 5) - e(4, 6),
                        value=contract(w3, 1), expected="e2^e7 + e3^e5 - e4^e6",
                        provenance="stated"))
    checks.append(check("exterior.hodge.volume", "orientation",
                        hodge(Form.scalar(7, 1)) == volume_form(7),
                        provenance="trivial"))
    rng = random.Random(11)
    ok = True
    for nn in range(2, 9):
        for p in range(0, nn + 1):
            a = random_form(nn, p, rng)
            sign = Q(-1) ** (p * (nn - p))
            ok = ok and hodge(hodge(a)) == a.scale(sign)
    checks.append(check("exterior.hodge.involution", "star conventions", ok,
                        provenance="trivial"))
    sw3 = hodge(w3)
    ok4 = all(inner(contract(sw3, i), contract(sw3, i)) == 4 for i in range(1, 8))
    checks.append(check("exterior.hodge.star-omega3-gram", "4-form normalization", ok4,
                        expected="(X -| *w3, X -| *w3) = 4", provenance="derived"))
    checks.append(check("exterior.inner.unit-blade", "pairing",
                        inner(e(1, 2), e(1, 2)) == 1, provenance="trivial"))
    checks.append(check("exterior.inner.omega3-norm", "pi^3_1 coefficient",
                        inner(w3, w3) == 7, value=inner(w3, w3), expected=7,
                        provenance="derived"))
    dw3_heis = d_form(registry()["heis7"].model, w3)
    checks.append(check("exterior.inner.pure-type", "pure 27-type model",
                        inner(dw3_heis, sw3) == 0, provenance="stated"))
    checks.append(check("exterior.sigma.decomposable", "torsion 4-form",
                        sigma_t(e(1, 2, 3)).is_zero(), provenance="trivial"))
    t5 = wedge(eta5, de)
    checks.append(check("exterior.sigma.contact", "Prop 7.1",
                        sigma_t(t5) == Form.blade(5, 1, 2, 3, 4, coeff=4)
                        and sigma_t(t5).scale(2) == wedge(de, de),
                        provenance="stated"))
    ok_q = all(sigma_t(a) == sigma_t_quadratic(a)
               for a in (random_form(nn, 3, rng) for nn in (5, 6, 7, 8)))
    checks.append(check("exterior.sigma.two-definitions", "quadratic vs contraction form",
                        ok_q, provenance="derived"))
    a = random_form(6, 2, rng)
    b = random_form(6, 2, rng)
    checks.append(check("exterior.inner.wedge-volume", "(a,b) vol = a ^ *b",
                        wedge(a, hodge(b)) == volume_form(6).scale(inner(a, b)),
                        provenance="derived"))
    return Report("exterior", checks)


def suite_clifford() -> Report:
    checks = []
    ok = True
    for n in range(2, 9):
        rep = clifford.build_rep(n)
        for i in range(n):
            for j in range(i, n):
                from .linalg import mat_mul, mat_add
                anti = mat_add(mat_mul(rep.gammas[i], rep.gammas[j]),
                               mat_mul(rep.gammas[j], rep.gammas[i]))
                want = -2 if i == j else 0
                for a in range(rep.dim):
                    for b in range(rep.dim):
                        expect = want if a == b else 0
                        if anti[a][b] != clifford.CQ(expect):
                            ok = False
    checks.append(check("clifford.relations", "defining relations", ok,
                        provenance="trivial"))
    rep7 = clifford.build_rep(7)
    w3 = canonical_omega3()
    spectrum = clifford.eigen_report(clifford.act_form(rep7, w3))
    checks.append(check("clifford.omega3-spectrum", "Thm 5.1 spinor normalization",
                        spectrum.pairs == [(Q(-7), 1), (Q(1), 7)],
                        value=spectrum.as_pairs(), expected="[-7 x1, +1 x7]",
                        provenance="stated"))
    psi0 = _minus7_spinor(rep7)
    sw3 = hodge(w3)
    ok4 = True
    for i in range(1, 8):
        lhs = mat_vec(clifford.act_form(rep7, contract(sw3, i)), psi0)
        rhs = mat_vec(clifford.act_form(rep7, Form.basis_vector(7, i)), psi0)
        ok4 = ok4 and all(l == clifford.CQ(4) * r for l, r in zip(lhs, rhs))
    checks.append(check("clifford.contraction-action", "(X -| *w3) psi = 4 X psi",
                        ok4, provenance="stated"))
    rep5 = clifford.build_rep(5)
    eta = Form.basis_vector(5, 5)
    de = Form.blade(5, 1, 2, coeff=2) + Form.blade(5, 3, 4, coeff=2)
    spec5 = clifford.eigen_report(clifford.act_form(rep5, wedge(eta, de)))
    checks.append(check("clifford.contact-spectrum", "contact 3-form eigenvalues",
                        spec5.multiset() == [Q(-4), Q(0), Q(0), Q(4)],
                        value=spec5.as_pairs(), expected="(-4, 0, 0, 4)",
                        provenance="stated"))
    ident = [[clifford.CQ(1) if i == j else clifford.CQ(0) for j in range(8)]
             for i in range(8)]
    checks.append(check("clifford.identity-spectrum", "spectrum bookkeeping",
                        clifford.eigen_report(ident).pairs == [(Q(1), 8)],
                        provenance="trivial"))
    checks.append(check("clifford.empty-kernel", "common kernel conventions",
                        len(clifford.common_kernel([], dim=8)) == 8,
                        provenance="trivial"))
    rng = random.Random(5)
    ok_kc = True
    for _ in range(40):
        t = random_form(5, 3, rng, span=4)
        x = random_form(5, 1, rng, span=4)
        endo = clifford.spin_endo_5d(t, x)
        for which in ("plus", "minus"):
            member = all(not c for c in mat_vec(endo, clifford.spinor_5d(which)))
            if member != clifford.kernel_conditions_5d(t, x, which):
                ok_kc = False
    checks.append(check("clifford.kernel-conditions", "Lemmas 7.2 / 7.5",
                        ok_kc, expected="closed form = direct membership",
                        provenance="stated"))
    t0 = Form(5, 3, {(2, 3, 4): Q(1)})
    x_minus = Form(5, 1, {(1,): Q(-1)})
    x_plus = Form(5, 1, {(1,): Q(1)})
    checks.append(check("clifford.kernel-sample-plus", "Lemma 7.2 sample",
                        clifford.kernel_conditions_5d(t0, x_minus, "plus")
                        and not clifford.kernel_conditions_5d(t0, x_plus, "plus"),
                        provenance="stated"))
    checks.append(check("clifford.kernel-sample-minus", "Lemma 7.5 sample",
                        clifford.kernel_conditions_5d(t0, x_plus, "minus")
                        and not clifford.kernel_conditions_5d(t0, x_minus, "minus"),
                        provenance="stated"))
    plus, minus = clifford.half_spinor_bases(clifford.build_rep(6))
    endo = clifford.act_form(clifford.build_rep(6),
                             [Form.blade(6, 1, 2, 3, 4) + Form.blade(6, 1, 2, 5, 6)
                              + Form.blade(6, 3, 4, 5, 6), Form.scalar(6, 3)])
    ok_half = all(clifford.eigen_report(clifford.restrict(endo, basis)).multiset()
                  == [Q(0), Q(4), Q(4), Q(4)] for basis in (plus, minus))
    checks.append(check("clifford.half-module-spectrum", "Lemma 10.7",
                        ok_half, expected="(0, 4, 4, 4) per half module",
                        provenance="stated"))
    return Report("clifford", checks)


def _minus7_spinor(rep7):
    from .linalg import nullspace, CQ
    act = clifford.act_form(rep7, canonical_omega3())
    shifted = [[act[i][j] + (CQ(7) if i == j else CQ(0)) for j in range(8)]
               for i in range(8)]
    return nullspace(shifted, one=CQ(1))[0]


def suite_section2() -> Report:
    checks = []
    abelian5 = registry()["abelian5"].model
    res = curvature_identity_residuals(abelian5, Form(5, 3, {(1, 2, 3): Q(1)}))
    checks.append(check("section2.abelian-decomposable", "flat sanity case",
                        all(v == 0 for v in res.values()), value=res,
                        provenance="trivial"))
    for name, torsion in admissible_models():
        if torsion.is_zero():
            continue
        model = registry()[name].model
        res = curvature_identity_residuals(model, torsion)
        for key, val in res.items():
            checks.append(check(f"section2.{name}.{key}",
                                "curvature-torsion identities",
                                val == 0, value=val, expected=0,
                                provenance="derived"))
    return Report("section2", checks)


def suite_slformula() -> Report:
    checks = []
    for name, torsion in admissible_models():
        model = registry()[name].model
        rep = clifford.build_rep(model.n)
        r1 = dirac_square_residual(model, torsion, rep)
        checks.append(check(f"slformula.{name}.square", "Thm 3.1",
                            mat_eq_zero(r1), expected="zero matrix",
                            provenance="stated"))
        r2 = dirac_torsion_anticommutator_residual(model, torsion, rep)
        checks.append(check(f"slformula.{name}.anticommutator", "Thm 3.3",
                            mat_eq_zero(r2), expected="zero matrix",
                            provenance="stated"))
        basis, residuals = parallel_spinor_field_equations(model, torsion, rep)
        flat = all(all(not c for c in r1_) and all(not c for vec in r2_ for c in vec)
                   for r1_, r2_ in residuals)
        checks.append(check(f"slformula.{name}.parallel-field-equations",
                            "Cor 3.2", flat,
                            value=f"{len(basis)} parallel spinors",
                            provenance="stated"))
    checks.append(skip("slformula.vanishing-theorem", "Thm 3.4",
                       "compact vanishing statement; pointwise ingredients "
                       "verified in this suite"))
    return Report("slformula", checks)


def suite_g2() -> Report:
    checks = []
    cons = g2.derivation_constant_identities()
    for key, ok in cons.items():
        checks.append(check(f"g2.constants.{key}", "derivation constants",
                            ok, provenance="stated"))
    w3 = canonical_omega3()
    rng = random.Random(23)
    a = random_form(7, 2, rng)
    p7, p14 = g2.project2(a)
    checks.append(check("g2.project2.eigen", "2-form type split",
                        hodge(wedge(w3, p7)) == p7.scale(2)
                        and hodge(wedge(w3, p14)) == -p14
                        and p7 + p14 == a, provenance="derived"))
    checks.append(check("g2.project2.vector-type", "X -| w3 is pure 7-type",
                        g2.project2(contract(w3, 3))[1].is_zero(),
                        provenance="trivial"))
    checks.append(check("g2.project2.algebra-type", "algebra equations",
                        g2.project2(Form.blade(7, 1, 2) - Form.blade(7, 3, 4))[0].is_zero(),
                        provenance="derived"))
    b = random_form(7, 3, rng)
    p1, p7b, p27 = g2.project3(b)
    checks.append(check("g2.project3.sum", "3-form type split",
                        p1 + p7b + p27 == b
                        and wedge(p27, w3).is_zero()
                        and wedge(p27, hodge(w3)).is_zero(),
                        provenance="derived"))
    g2_names = [name for name in sorted(registry())
                if registry()[name].structure["kind"] == "g2"]
    for name in g2_names:
        s = g2_structure(name)
        cls = g2.classify(s)
        checks.append(check(f"g2.{name}.classify", "type components",
                            cls.admits_connection()
                            and wedge(cls.gamma27, w3).is_zero()
                            and wedge(cls.gamma27, hodge(w3)).is_zero(),
                            value=cls.as_dict(), provenance="derived"))
        checks.append(check(f"g2.{name}.cocalibrated", "coclosed 3-form",
                            codiff(s.model, w3).is_zero() == (not any(cls.beta)),
                            provenance="stated"))
        t = g2.torsion_form(s)
        conn = with_torsion(s.model, t)
        checks.append(check(f"g2.{name}.parallel", "Thm 4.7 / Thm 4.8 contract",
                            all(nabla_form(conn, i, w3).is_zero()
                                for i in range(1, 8)),
                            expected="nabla w3 = 0", provenance="stated"))
        checks.append(check(f"g2.{name}.torsion-components", "torsion split",
                            g2.torsion_component_identity(s), provenance="stated"))
        checks.append(check(f"g2.{name}.dw3-split", "derivative split",
                            g2.dw3_decomposition_identity(s)
                            and g2.codiff_identity(s), provenance="stated"))
        ric_a = g2.ricci_via_dt(s, t)
        ric_b = curvature(conn).ric
        checks.append(check(f"g2.{name}.ricci-cross-oracle", "Thm 5.1",
                            ric_a == ric_b, provenance="stated"))
        if not any(cls.beta):
            cond = g2.ricci_flat_conditions(s, t)
            checks.append(check(f"g2.{name}.flatness-conditions", "Thm 5.4",
                                cond["consistent"]
                                and cond["wedge-identity-when-flat"],
                                value=cond, provenance="stated"))
    for lam in (0, 6, Q(3, 2)):
        pack = g2.nearly_parallel_identities(lam)
        checks.append(check(f"g2.nearly-parallel.{lam}", "Example 5.2 / string equation",
                            all(pack.values()), value=pack, provenance="stated"))
    checks.append(skip("g2.dirac-eigenvalue-bound", "Thm 5.3",
                       "integral eigenvalue estimate"))
    checks.append(skip("g2.harmonic-vanishing", "Thm 5.6",
                       "compact vanishing statement"))
    checks.append(skip("g2.topology-obstruction", "Remark 5.5",
                       "cohomological obstruction"))
    return Report("g2", checks)


def suite_equivariant() -> Report:
    checks = []
    sp = equivar.spaces()
    checks.append(check("equivariant.algebra-dimension", "algebra equations",
                        len(sp.algebra.basis) == 14, value=len(sp.algebra.basis),
                        expected=14, provenance="stated"))
    checks.append(check("equivariant.algebra-closure", "bracket closure",
                        all(sp.algebra.closure_residuals()), provenance="derived"))
    checks.append(check("equivariant.sample-membership", "algebra sample",
                        sp.algebra.coordinates(Form.blade(7, 1, 2)
                                               - Form.blade(7, 3, 4)) is not None,
                        provenance="derived"))
    w3 = canonical_omega3()
    m_sample = contract(w3, 1)
    checks.append(check("equivariant.complement-orthogonal", "m vs algebra",
                        sp.algebra.coordinates(m_sample) is None,
                        provenance="trivial"))
    pr = g2.pr_m(m_sample)
    checks.append(check("equivariant.m-projection", "projection formula",
                        pr == m_sample
                        and g2.pr_m(g2.pr_g2(Form.blade(7, 1, 2))).is_zero(),
                        provenance="derived"))
    rc = equivar.rank_certificates()
    checks.append(check("equivariant.phi-injective", "Prop 4.2",
                        rc["phi-injective"], expected="rank 98",
                        provenance="stated"))
    checks.append(check("equivariant.images-meet-trivially", "Cor 4.5(2)",
                        rc["images-meet-trivially"] and rc["psi-14-dimension"],
                        provenance="stated"))
    checks.append(check("equivariant.scalar-image", "Cor 4.5(1) scalar part",
                        rc["scalar-image-contained"]
                        and rc["scalar-image-solution-zero"],
                        expected="contained with zero solution",
                        provenance="stated"))
    checks.append(check("equivariant.traceless-image", "Cor 4.5(1) 27-part",
                        rc["traceless-image-contained"], provenance="stated"))
    checks.append(check("equivariant.sigma0-constant", "Prop 4.6",
                        equivar.sigma0_constant() == Q(2, 3),
                        value=equivar.sigma0_constant(), expected="2/3",
                        provenance="stated"))
    checks.append(check("equivariant.sigma-solution", "closed-form connection map",
                        equivar.sigma_solution_identity(), provenance="stated"))
    targets = {
        "r7_m": {"1": (1, 1), "7": (7, 1), "14": (14, 1), "27": (27, 1)},
        "r7_g2": {"7": (7, 1), "27": (27, 1), "64": (64, 1)},
        "r7_s2": {"7": (14, 2), "14": (14, 1), "27": (27, 1),
                  "64": (64, 1), "77": (77, 1)},
    }
    for space, want in targets.items():
        rep = equivar.casimir_decompose(space)
        got = rep.dims_by_label()
        checks.append(check(f"equivariant.decompose.{space}", "Prop 4.4",
                            got == want, value=got, expected=want,
                            provenance="stated"))
    rep2 = equivar.casimir_decompose("lambda2")
    checks.append(check("equivariant.decompose.two-forms", "2-form split",
                        rep2.dims_by_label() == {"7": (7, 1), "14": (14, 1)},
                        provenance="stated"))
    checks.append(check("equivariant.equivariance", "map equivariance",
                        _equivariance_residual_zero(sp), provenance="derived"))
    return Report("equivariant", checks)


def _equivariance_residual_zero(sp):
    """Exact intertwining check, with one common integer scale per generator."""
    import numpy as np
    from math import gcd
    phi = np.array(equivar.phi_matrix(), dtype=np.int64)
    psi = np.array(equivar.psi_matrix(), dtype=np.int64)
    cas, _ = sp.casimir("r7_s2")
    cmat = np.array(cas, dtype=np.int64)
    for xi in sp.algebra.basis[:4] + sp.algebra.basis[-2:]:
        actions = {space: sp.action(space, xi)
                   for space in ("r7_g2", "r7_m", "r7_s2")}
        den = 1
        for rows in actions.values():
            for row in rows:
                for x in row:
                    q = Q(x)
                    den = den * q.denominator // gcd(den, q.denominator)
        scaled = {space: np.array([[int(Q(x) * den) for x in row]
                                   for row in rows], dtype=np.int64)
                  for space, rows in actions.items()}
        if np.any(phi @ scaled["r7_g2"] - scaled["r7_s2"] @ phi):
            return False
        if np.any(psi @ scaled["r7_m"] - scaled["r7_s2"] @ psi):
            return False
        if np.any(cmat.astype(np.int64) @ scaled["r7_s2"]
                  - scaled["r7_s2"] @ cmat.astype(np.int64)):
            return False
    return True


def suite_contact() -> Report:
    checks = []
    contact_names = [name for name in sorted(registry())
                     if registry()[name].structure["kind"] == "contact"]
    for name in contact_names:
        s = contact_structure(name)
        gi = acskit.contact_general_identities(s)
        checks.append(check(f"contact.{name}.general-identities",
                            "pre-existence identities",
                            all(v == 0 for v in gi.values()), value=gi,
                            provenance="stated"))
        pi = acskit.nijenhuis_gradient_identities(s)
        checks.append(check(f"contact.{name}.gradient-identities", "Prop 8.1",
                            all(v == 0 for v in pi.values()), value=pi,
                            provenance="stated"))
        nij = acskit.nijenhuis(s)
        f = s.fundamental_form()
        if d_form(s.model, f).is_zero():
            checks.append(check(f"contact.{name}.closed-form-normal",
                                "Thm 8.4 preamble: dF = 0 forces N = 0",
                                (not nij.totally_skew) or nij.is_zero(),
                                provenance="stated"))
        try:
            t = acskit.contact_torsion(s)
            admissible = True
        except NoSkewConnection as err:
            admissible = False
            checks.append(check(f"contact.{name}.connection-rejected",
                                "Thm 8.2 existence",
                                err.reason in ("nijenhuis-not-skew",
                                               "xi-not-killing"),
                                value=err.reason, provenance="stated"))
        if not admissible:
            continue
        checks.append(check(f"contact.{name}.structure-parallel", "Thm 8.2",
                            acskit.structure_parallel_residuals(s, t) == 0,
                            expected="nabla eta = nabla phi = 0",
                            provenance="stated"))
        checks.append(check(f"contact.{name}.uniqueness", "Thm 8.2 uniqueness",
                            acskit.torsion_uniqueness_certificate(s),
                            expected="parallelism system has full rank",
                            provenance="stated"))
        lem = acskit.nijenhuis_xi_identities(s)
        checks.append(check(f"contact.{name}.xi-identities", "Lemma 8.3",
                            lem["chain-residual"] == 0 and lem["reeb-geodesic"] == 0,
                            value=lem, provenance="stated"))
        hol = acskit.holonomy_reduction_residual(s, t)
        checks.append(check(f"contact.{name}.ricci-form-identity", "Prop 9.1",
                            hol["identity-residual"] == 0, value=hol,
                            provenance="stated"))
        if s.is_contact_metric():
            checks.append(check(f"contact.{name}.sasakian-torsion", "Thm 8.4(1)",
                                t == wedge(s.eta, s.d_eta()),
                                expected="T = eta ^ d eta", provenance="stated"))
            conn = with_torsion(s.model, t)
            checks.append(check(f"contact.{name}.torsion-parallel", "Prop 7.1",
                                all(nabla_form(conn, i, t).is_zero()
                                    for i in range(1, s.n + 1))
                                and codiff(s.model, t).is_zero(),
                                provenance="stated"))
            checks.append(check(f"contact.{name}.sigma-dt", "Prop 7.1",
                                sigma_t(t).scale(2) == d_form(s.model, t)
                                == wedge(s.d_eta(), s.d_eta()),
                                provenance="stated"))
            sas = acskit.sasakian_ricci_package(s)
            checks.append(check(f"contact.{name}.sasakian-package", "Thm 9.2",
                                sas["lambda-is-16(1-k)F"] and sas["tt-contraction"]
                                and sas["one-form-parallel"]
                                and sas["conditions-equivalent"]
                                and sas["matches-4(k-1)"],
                                value=sas, provenance="stated"))
        elif acskit.nijenhuis(s).is_zero():
            f = s.fundamental_form()
            df = d_form(s.model, f)
            want = wedge(s.eta, s.d_eta()) + (-acskit.pullback3(df, s.phi))
            checks.append(check(f"contact.{name}.normal-torsion", "Thm 8.4(2)",
                                t == want, expected="T = eta ^ d eta + d^phi F",
                                provenance="stated"))
    s5 = contact_structure("heis5")
    t5 = acskit.contact_torsion(s5)
    conn5 = with_torsion(s5.model, t5)
    table = curvature(conn5)
    checks.append(check("contact.heis5.ricci", "contact example tables",
                        table.ric_diag() == [Q(-4)] * 4 + [Q(0)]
                        and curvature(levi_civita(s5.model)).ric_diag()
                        == [Q(-2)] * 4 + [Q(4)],
                        value=table.ric_diag(),
                        expected="diag(-4,-4,-4,-4,0)", provenance="stated"))
    deformed = acskit.tanno_deform(s5, Q(4, 3))
    checks.append(check("contact.heis5.tanno", "deformation (Remark 9.3)",
                        deformed.is_contact_metric()
                        and acskit.contact_torsion(deformed)
                        == wedge(deformed.eta, deformed.d_eta()),
                        expected="deformed structure stays Sasakian",
                        provenance="derived"))
    ident = acskit.tanno_deform(s5, 1)
    checks.append(check("contact.heis5.tanno-identity", "unit parameter",
                        ident.model.d_coframe == s5.model.d_coframe,
                        provenance="trivial"))
    return Report("contact", checks)


def suite_hermitian() -> Report:
    checks = []
    for name in sorted(registry()):
        if registry()[name].structure["kind"] != "hermitian":
            continue
        h = hermitian_structure(name)
        nij = acskit.nijenhuis(h)
        try:
            t = acskit.hermitian_torsion(h)
            checks.append(check(f"hermitian.{name}.structure-parallel", "Thm 10.1",
                                acskit.structure_parallel_residuals(h, t) == 0,
                                expected="nabla J = 0", provenance="stated"))
            checks.append(check(f"hermitian.{name}.uniqueness",
                                "Thm 10.1 uniqueness",
                                acskit.torsion_uniqueness_certificate(h),
                                expected="parallelism system has full rank",
                                provenance="stated"))
            hol = acskit.holonomy_reduction_residual(h, t)
            checks.append(check(f"hermitian.{name}.ricci-form-identity",
                                "Thm 10.5 identity",
                                hol["identity-residual"] == 0, value=hol,
                                provenance="stated"))
            conn = with_torsion(h.model, t)
            parallel_t = all(nabla_form(conn, i, t).is_zero()
                             for i in range(1, h.n + 1))
            if not nij.is_zero():
                checks.append(check(f"hermitian.{name}.torsion-parallel",
                                    "Cor 10.3 analogue", parallel_t
                                    and codiff(h.model, t).is_zero(),
                                    provenance="derived"))
        except NoSkewConnection as err:
            omega = h.kaehler_form()
            almost_kaehler = d_form(h.model, omega).is_zero()
            checks.append(check(f"hermitian.{name}.connection-rejected",
                                "Cor 10.2" if almost_kaehler else "Thm 10.1",
                                err.reason == "nijenhuis-not-skew",
                                value=err.reason, provenance="stated"))
    for a in (1, 2, Q(1, 3)):
        pack = acskit.nearly_kaehler_identities(a)
        checks.append(check(f"hermitian.nearly-kaehler.{a}", "Prop 10.4 / Cor 10.6",
                            all(pack.values()), value=pack, provenance="stated"))
    plus, minus = acskit.half_module_endomorphism_spectrum(1)
    checks.append(check("hermitian.half-module-spectrum", "Lemma 10.7",
                        plus == [Q(0), Q(4), Q(4), Q(4)] == minus,
                        value=[plus, minus], expected="(0,4,4,4) twice",
                        provenance="stated"))
    checks.append(skip("hermitian.parallel-spinor-count", "Thm 10.8",
                       "global two-spinor statement; no rational invariant "
                       "strictly nearly Kaehler model exists in the registry"))
    return Report("hermitian", checks)


def suite_examples() -> Report:
    checks = []
    w3 = canonical_omega3()
    e = lambda *ix, c=1: Form.blade(7, *ix, coeff=c)

    heis7 = registry()["heis7"].model
    dw3 = d_form(heis7, w3)
    checks.append(check("examples.heis7.dw3", "worked example tables",
                        dw3 == e(1, 2, 3, 4) + e(2, 4, 6, 7) + e(1, 2, 5, 6)
                        - e(2, 3, 5, 7), value=dw3, provenance="stated"))
    s7 = g2_structure("heis7")
    t7 = g2.torsion_form(s7)
    t_expected = -(e(5, 6, 7) - e(1, 3, 5) + e(3, 4, 7) + e(1, 4, 6))
    checks.append(check("examples.heis7.torsion", "worked example tables",
                        t7 == t_expected, value=t7, provenance="stated"))
    dt7 = d_form(heis7, t7)
    checks.append(check("examples.heis7.dt", "worked example tables",
                        dt7 == e(1, 3, 6, 7, c=-4), value=dt7,
                        expected="-4 e1^e3^e6^e7", provenance="stated"))
    conn7 = with_torsion(heis7, t7)
    tab7 = curvature(conn7)
    checks.append(check("examples.heis7.ricci", "worked example tables",
                        tab7.ric_diag() == [Q(-2), Q(0), Q(-2), Q(0), Q(0),
                                            Q(-2), Q(-2)]
                        and all(tab7.ric[i][j] == 0 for i in range(7)
                                for j in range(7) if i != j),
                        value=tab7.ric_diag(),
                        expected="diag(-2,0,-2,0,0,-2,-2)", provenance="stated"))
    checks.append(check("examples.heis7.scal", "worked example tables",
                        tab7.scal == -8, value=tab7.scal, expected=-8,
                        provenance="stated"))
    ttc = tt_contraction(t7)
    checks.append(check("examples.heis7.tt", "worked example tables",
                        [ttc[i][i] for i in range(7)]
                        == [Q(4), Q(0), Q(4), Q(4), Q(4), Q(4), Q(4)]
                        and all(ttc[i][j] == 0 for i in range(7)
                                for j in range(7) if i != j),
                        expected="diag(4,0,4,4,4,4,4)", provenance="stated"))
    tabg7 = curvature(levi_civita(heis7))
    checks.append(check("examples.heis7.riemannian-ricci", "worked example tables",
                        tabg7.ric_diag() == [Q(-1), Q(0), Q(-1), Q(1), Q(1),
                                             Q(-1), Q(-1)],
                        value=tabg7.ric_diag(),
                        expected="diag(-1,0,-1,1,1,-1,-1)", provenance="stated"))
    rep7 = clifford.build_rep(7)
    sig7 = sigma_t(t7)
    e61a = clifford.eigen_report(clifford.act_form(
        rep7, dt7.scale(Q(1, 4)) + sig7.scale(Q(1, 2))))
    e61b = clifford.eigen_report(clifford.act_form(
        rep7, dt7.scale(Q(3, 4)) - sig7.scale(Q(1, 2))))
    want61 = sorted([Q(2), Q(-4), Q(2), Q(0), Q(2), Q(0), Q(2), Q(-4)])
    checks.append(check("examples.heis7.spinor-endos", "Lemma 6.1",
                        e61a.multiset() == want61 and e61b.multiset() == want61,
                        value=[e61a.as_pairs(), e61b.as_pairs()],
                        expected="(2,-4,2,0,2,0,2,-4) twice as multisets",
                        provenance="stated"))
    checks.append(check("examples.heis7.four-forms", "worked example tables",
                        dt7.scale(Q(1, 4)) + sig7.scale(Q(1, 2))
                        == e(1, 3, 6, 7, c=-2) + e(3, 4, 5, 6) - e(1, 4, 5, 7)
                        and dt7.scale(Q(3, 4)) - sig7.scale(Q(1, 2))
                        == e(1, 3, 6, 7, c=-2) - e(3, 4, 5, 6) + e(1, 4, 5, 7),
                        expected="both displayed 4-forms verbatim",
                        provenance="stated"))
    basis7 = parallel_spinors(conn7, rep7)
    tm7 = clifford.act_form(rep7, t7)
    checks.append(check("examples.heis7.parallel-spinors", "Cor 6.2",
                        len(basis7) == 4
                        and all(all(not c for c in mat_vec(tm7, psi))
                                for psi in basis7),
                        value=len(basis7), expected=4, provenance="stated"))
    checks.append(skip("examples.heis7.harmonic-bound", "Cor 6.3",
                       "compact quotient estimate"))

    solv7 = registry()["solv7"].model
    checks.append(check("examples.solv7.cocalibrated", "worked example tables",
                        codiff(solv7, w3).is_zero(),
                        expected="delta(w3) = 0", provenance="stated"))
    dw3s = d_form(solv7, w3)
    checks.append(check("examples.solv7.dw3", "worked example tables",
                        dw3s == e(1, 3, 4, 7, c=2) - e(1, 5, 6, 7, c=2),
                        value=dw3s, provenance="stated"))
    s7b = g2_structure("solv7")
    t7b = g2.torsion_form(s7b)
    checks.append(check("examples.solv7.torsion", "worked example tables",
                        t7b == e(2, 5, 6, c=2) - e(2, 3, 4, c=2),
                        value=t7b, expected="2 e2^e5^e6 - 2 e2^e3^e4",
                        provenance="stated"))
    dt7b = d_form(solv7, t7b)
    checks.append(check("examples.solv7.dt", "worked example tables",
                        dt7b == e(1, 2, 5, 6, c=-4) + e(1, 2, 3, 4, c=-4),
                        value=dt7b, provenance="stated"))
    conn7b = with_torsion(solv7, t7b)
    checks.append(check("examples.solv7.scal", "worked example tables",
                        curvature(conn7b).scal == -16,
                        value=curvature(conn7b).scal, expected=-16,
                        provenance="stated"))
    sig7b = sigma_t(t7b)
    e64a = clifford.eigen_report(clifford.act_form(
        rep7, dt7b.scale(Q(1, 4)) + sig7b.scale(Q(1, 2))))
    e64b = clifford.eigen_report(clifford.act_form(
        rep7, dt7b.scale(Q(3, 4)) - sig7b.scale(Q(1, 2))))
    checks.append(check("examples.solv7.spinor-endos", "Lemma 6.4",
                        e64a.multiset() == sorted([Q(4), Q(4), Q(-2), Q(-2),
                                                   Q(-2), Q(-2), Q(0), Q(0)])
                        and e64b.multiset() == sorted([Q(4), Q(4), Q(2), Q(2),
                                                       Q(2), Q(2), Q(-8), Q(-8)]),
                        value=[e64a.as_pairs(), e64b.as_pairs()],
                        provenance="stated"))
    checks.append(check("examples.solv7.four-forms", "worked example tables",
                        dt7b.scale(Q(1, 4)) + sig7b.scale(Q(1, 2))
                        == e(1, 2, 5, 6, c=-1) + e(1, 2, 3, 4, c=-1)
                        + e(3, 4, 5, 6, c=-2)
                        and dt7b.scale(Q(3, 4)) - sig7b.scale(Q(1, 2))
                        == e(1, 2, 5, 6, c=-3) + e(1, 2, 3, 4, c=-3)
                        + e(3, 4, 5, 6, c=2),
                        expected="both displayed 4-forms verbatim",
                        provenance="stated"))
    basis7b = parallel_spinors(conn7b, rep7)
    tm7b = clifford.act_form(rep7, t7b)
    checks.append(check("examples.solv7.parallel-spinors", "Cor 6.5",
                        len(basis7b) == 2
                        and all(all(not c for c in mat_vec(tm7b, psi))
                                for psi in basis7b),
                        value=len(basis7b), expected=2, provenance="stated"))
    checks.append(skip("examples.solv7.harmonic-bound", "Cor 6.6",
                       "compact quotient estimate"))

    s5 = contact_structure("heis5")
    t5 = acskit.contact_torsion(s5)
    rep5 = clifford.build_rep(5)
    spec5 = clifford.eigen_report(clifford.act_form(rep5, t5))
    checks.append(check("examples.heis5.spinor-spectrum", "contact eigenvalues",
                        spec5.multiset() == [Q(-4), Q(0), Q(0), Q(4)],
                        value=spec5.as_pairs(), expected="(-4,0,0,4)",
                        provenance="stated"))
    conn5 = with_torsion(s5.model, t5)
    basis5 = parallel_spinors(conn5, rep5)
    checks.append(check("examples.heis5.parallel-spinors",
                        "Example 7.7 kernel-type spinors",
                        len(basis5) == 2, value=len(basis5), expected=2,
                        provenance="derived"))
    checks.append(check("examples.heis5.ricci", "contact example tables",
                        curvature(conn5).ric_diag() == [Q(-4)] * 4 + [Q(0)],
                        expected="diag(-4,-4,-4,-4,0)", provenance="stated"))
    return Report("examples", checks)


_SUITE_FUNCS = {
    "exterior": suite_exterior,
    "clifford": suite_clifford,
    "section2": suite_section2,
    "slformula": suite_slformula,
    "g2": suite_g2,
    "equivariant": suite_equivariant,
    "contact": suite_contact,
    "hermitian": suite_hermitian,
    "examples": suite_examples,
}


def run_suite(name: str) -> Report:
    if name == "all":
        return merge("all", [_SUITE_FUNCS[s]() for s in SUITES])
    if name not in _SUITE_FUNCS:
        raise KeyError(name)
    return _SUITE_FUNCS[name]()
