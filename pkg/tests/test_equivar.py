from fractions import Fraction as Q

import pytest

from skewtor.equivar import (bracket_2forms, calibration_table,
                             casimir_decompose, casimir_spectrum,
                             isotypic_basis_r7_m, phi_matrix, psi_matrix,
                             rank_certificates, sigma0_constant,
                             sigma_solution_identity, spaces)
from skewtor.forms import Form, contract, so_action
from skewtor.registry import canonical_omega3


@pytest.fixture(scope="module")
def sp():
    return spaces()


def test_algebra_dimension_and_closure(sp):
    assert len(sp.algebra.basis) == 14
    assert all(sp.algebra.closure_residuals())
    w3 = canonical_omega3()
    for xi in sp.algebra.basis:
        assert so_action(xi, w3).is_zero()


def test_algebra_membership_samples(sp):
    assert sp.algebra.coordinates(Form.blade(7, 1, 2) - Form.blade(7, 3, 4)) \
        is not None
    assert sp.algebra.coordinates(contract(canonical_omega3(), 1)) is None


def test_bracket_consistency_with_derivation(sp):
    # ad and the derivation action agree on 2-forms
    xi = sp.algebra.basis[2]
    mu = Form.blade(7, 2, 5)
    assert bracket_2forms(xi, mu) == so_action(xi, mu)


def test_complement_equivariance(sp):
    # [xi, Z -| w3] = (A_xi Z) -| w3 for algebra elements xi
    from skewtor.equivar import endo_of_2form
    w3 = canonical_omega3()
    for xi in sp.algebra.basis[:3]:
        a = endo_of_2form(xi)
        for k in range(1, 8):
            br = bracket_2forms(xi, contract(w3, k))
            image = Form(7, 2)
            for v in range(7):
                if a[v][k - 1]:
                    image = image + contract(w3, v + 1).scale(a[v][k - 1])
            assert br == image


def test_calibration_values(sp):
    calib = calibration_table()
    assert calib["1"] == 0
    assert len({calib["1"], calib["7"], calib["14"], calib["27"]}) == 4


def test_casimir_spectra_and_decompositions():
    assert casimir_decompose("lambda2").dims_by_label() == \
        {"7": (7, 1), "14": (14, 1)}
    assert casimir_decompose("lambda3").dims_by_label() == \
        {"1": (1, 1), "7": (7, 1), "27": (27, 1)}
    assert casimir_decompose("lambda4").dims_by_label() == \
        {"1": (1, 1), "7": (7, 1), "27": (27, 1)}
    assert casimir_decompose("r7_m").dims_by_label() == \
        {"1": (1, 1), "7": (7, 1), "14": (14, 1), "27": (27, 1)}
    assert casimir_decompose("r7_g2").dims_by_label() == \
        {"7": (7, 1), "27": (27, 1), "64": (64, 1)}
    assert casimir_decompose("r7_s2").dims_by_label() == \
        {"7": (14, 2), "14": (14, 1), "27": (27, 1), "64": (64, 1), "77": (77, 1)}


def test_casimir_64_eigenvalue_cross_check():
    pairs_g2, scale_g2 = casimir_spectrum("r7_g2")
    pairs_s2, scale_s2 = casimir_spectrum("r7_s2")
    val64_g2 = next(v for v, d in pairs_g2 if d == 64)
    val64_s2 = next(v for v, d in pairs_s2 if d == 64)
    assert val64_g2 == val64_s2


def test_map_shapes(sp):
    phi = phi_matrix()
    psi = psi_matrix()
    assert len(phi) == 196 and len(phi[0]) == 98
    assert len(psi) == 196 and len(psi[0]) == 49


def test_rank_certificates():
    rc = rank_certificates()
    assert rc["phi-injective"]
    assert rc["psi-14-dimension"]
    assert rc["images-meet-trivially"]
    assert rc["scalar-block-dimension"] and rc["traceless-block-dimension"]
    assert rc["scalar-image-contained"] and rc["scalar-image-solution-zero"]
    assert rc["traceless-image-contained"]


def test_isotypic_bases_exact(sp):
    basis14 = isotypic_basis_r7_m("14")
    assert len(basis14) == 14
    cmat, scale = sp.casimir("r7_m")
    lam = calibration_table()["14"] * scale
    for v in basis14:
        image = [sum(Q(cmat[i][j]) * v[j] for j in range(49)) for i in range(49)]
        assert image == [lam * x for x in v]


def test_sigma0_constant_value():
    assert sigma0_constant() == Q(2, 3)


def test_sigma_solution_identity_holds():
    assert sigma_solution_identity()
