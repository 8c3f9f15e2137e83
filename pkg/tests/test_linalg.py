import random
from fractions import Fraction as Q

import pytest

from skewtor.linalg import (CQ, certified_eigenspace_dims, certify_annihilation,
                            charpoly, fraction_rows_to_int, int_nullspace,
                            int_rank, invert, is_hermitian, krylov_min_poly,
                            mat_mul, mat_vec, nullspace, poly_eval, rank,
                            rank_mod_p, rational_roots, solve, _PRIMES)


def qm(rows):
    return [[Q(x) for x in row] for row in rows]


def test_gaussian_rational_field_ops():
    a = CQ(Q(1, 2), Q(3))
    b = CQ(2, -1)
    assert a + b == CQ(Q(5, 2), 2)
    assert a * b == CQ(4, Q(11, 2))
    assert (a / b) * b == a
    assert a.conj() == CQ(Q(1, 2), -3)
    assert not CQ(0, 0)
    with pytest.raises(ZeroDivisionError):
        a / CQ(0, 0)


def test_rref_rank_nullspace():
    a = qm([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank(a) == 2
    ker = nullspace(a)
    assert len(ker) == 1
    assert all(x == 0 for x in mat_vec(a, ker[0]))


def test_solve_multiple_rhs():
    a = qm([[1, 0], [0, 1], [1, 1]])
    sols = solve(a, [qm([[1, 2, 3]])[0], qm([[1, 2, 4]])[0]])
    assert sols[0] == [Q(1), Q(2)]
    assert sols[1] is None


def test_invert_round_trip():
    rng = random.Random(1)
    a = [[Q(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(5)] for _ in range(5)]
    a[0][0] += 10  # keep it invertible
    try:
        inv = invert(a)
    except ZeroDivisionError:
        pytest.skip("random matrix happened to be singular")
    prod = mat_mul(a, inv)
    assert all(prod[i][j] == (1 if i == j else 0) for i in range(5) for j in range(5))


def test_charpoly_and_roots_complex():
    m = [[CQ(1), CQ(0, 1)], [CQ(0, -1), CQ(1)]]
    assert is_hermitian(m)
    roots, residual = rational_roots(charpoly(m))
    assert residual is None
    assert [(r if isinstance(r, Q) else r.re, k) for r, k in roots] == [(Q(0), 1), (Q(2), 1)]


def test_rational_roots_with_residual():
    # (x^2 - 2)(x - 3)^2 x
    def pm(p, q):
        out = [Q(0)] * (len(p) + len(q) - 1)
        for i, x in enumerate(p):
            for j, y in enumerate(q):
                out[i + j] += x * y
        return out

    poly = pm(pm(pm([Q(1), Q(0), Q(-2)], [Q(1), Q(-3)]), [Q(1), Q(-3)]), [Q(1), Q(0)])
    roots, residual = rational_roots(poly)
    assert roots == [(Q(0), 1), (Q(3), 2)]
    assert residual == [Q(1), Q(0), Q(-2)]
    assert poly_eval(residual, Q(3)) == 7


def test_integer_echelon_tools():
    a = [[2, 4, 6], [1, 2, 3], [0, 3, 3]]
    assert int_rank(a) == 2
    ker = int_nullspace(a)
    assert len(ker) == 1
    assert all(sum(Q(a[i][j]) * ker[0][j] for j in range(3)) == 0 for i in range(3))
    assert fraction_rows_to_int(qm([["1/2", "1/3", 0]])) == [[3, 2, 0]]


def test_rank_mod_p_is_lower_bound():
    a = [[1, 2], [2, 4]]
    assert rank_mod_p(a, _PRIMES[0]) == 1
    b = [[1, 0], [0, _PRIMES[0]]]  # rank drops mod this prime only
    assert rank_mod_p(b, _PRIMES[0]) == 1
    assert int_rank(b) == 2


def test_krylov_certificates_diagonalizable():
    d = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 2, 0], [0, 0, 0, 5]]

    def matvec(v):
        return [sum(d[i][j] * v[j] for j in range(4)) for i in range(4)]

    mp = krylov_min_poly(matvec, 4)
    # minimal polynomial (x-1)(x-2)(x-5)
    assert mp == [Q(1), Q(-8), Q(17), Q(-10)]
    assert certify_annihilation(d, [1, 2, 5])
    assert not certify_annihilation(d, [1, 2])
    assert certified_eigenspace_dims(d, [1, 2, 5]) == [2, 1, 1]


def test_certify_rejects_nondiagonalizable():
    jordan = [[1, 1], [0, 1]]
    assert not certify_annihilation(jordan, [1])
    assert certify_annihilation(jordan, [1, 1])  # (A-1)^2 = 0 holds
