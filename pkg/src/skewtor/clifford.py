"""Exact complex Clifford modules Delta_n (2 <= n <= 8) and form actions on spinors.

Conventions, pinned by the identities the test suite enforces:
  * e_i . e_i = -1, gamma matrices anti-hermitian over Gaussian rationals;
  * for odd n the volume element Gamma_1 ... Gamma_n is normalized to +Id
    when n = 3 (mod 4) and to -i Id when n = 1 (mod 4).  With this choice the
    canonical 3-form of dimension 7 acts with the simple eigenvalue -7 and
    the Reeb direction of dimension 5 acts by +i on the rank-one subbundles.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DegreeError, DimensionMismatch
from .forms import Form
from .linalg import (CQ, charpoly, is_hermitian, mat_identity, mat_mul,
                     mat_vec, nullspace, rational_roots)

Q = Fraction

_S1 = ((CQ(0), CQ(1)), (CQ(1), CQ(0)))
_S2 = ((CQ(0), CQ(0, -1)), (CQ(0, 1), CQ(0)))
_S3 = ((CQ(1), CQ(0)), (CQ(0), CQ(-1)))
_ID2 = ((CQ(1), CQ(0)), (CQ(0), CQ(1)))


def _kron(a, b):
    nb = len(b)
    size = len(a) * nb
    return [[a[i // nb][j // nb] * b[i % nb][j % nb] for j in range(size)]
            for i in range(size)]


def _itimes(m):
    return [[CQ(0, 1) * x for x in row] for row in m]


class GammaRep:
    """Gamma matrices of Cl(n) acting on C^(2^floor(n/2))."""

    def __init__(self, n, gammas):
        self.n = n
        self.gammas = gammas
        self.dim = len(gammas[0])

    def volume_scalar(self):
        """The scalar by which Gamma_1...Gamma_n acts (odd n only)."""
        vol = self.gammas[0]
        for g in self.gammas[1:]:
            vol = mat_mul(vol, g)
        return vol[0][0]


@lru_cache(maxsize=None)
def build_rep(n: int) -> GammaRep:
    if not 2 <= n <= 8:
        raise DimensionMismatch("spin modules provided for dimensions 2..8")
    half = n // 2
    gammas = []
    for k in range(1, half + 1):
        pre = [_S3] * (k - 1)
        post = [_ID2] * (half - k)
        for mid in (_itimes(_S1), _itimes(_S2)):
            mats = pre + [mid] + post
            out = mats[0]
            for m in mats[1:]:
                out = _kron(out, m)
            gammas.append([list(r) for r in out])
    if n % 2:
        out = _S3
        for _ in range(half - 1):
            out = _kron(out, _S3)
        gammas.append(_itimes(out))
        rep = GammaRep(n, gammas)
        target = CQ(1) if n % 4 == 3 else CQ(0, -1)
        if rep.volume_scalar() != target:
            gammas = [[[-x for x in row] for row in g] for g in gammas]
            rep = GammaRep(n, gammas)
        assert rep.volume_scalar() == target
        return rep
    return GammaRep(n, gammas)


def act_form(rep: GammaRep, form) -> list:
    """Clifford action of a form (or an iterable of homogeneous parts)."""
    parts = [form] if isinstance(form, Form) else list(form)
    size = rep.dim
    out = [[CQ(0)] * size for _ in range(size)]
    for part in parts:
        if part.n != rep.n:
            raise DimensionMismatch("form dimension does not match the spin module")
        for blade, coeff in part.terms.items():
            m = mat_identity(size, CQ(1), CQ(0))
            for i in blade:
                m = mat_mul(m, rep.gammas[i - 1])
            c = CQ(coeff)
            for a in range(size):
                row_m, row_o = m[a], out[a]
                for b in range(size):
                    if row_m[b]:
                        row_o[b] = row_o[b] + c * row_m[b]
    return out


class EigenReport:
    """Exact spectrum: rational eigenvalues with multiplicity plus any residual factor."""

    def __init__(self, size, pairs, residual, hermitian):
        self.size = size
        self.pairs = pairs            # sorted [(Fraction eigenvalue, multiplicity)]
        self.residual = residual      # remaining charpoly factor (coeffs) or None
        self.hermitian = hermitian

    def multiset(self):
        out = []
        for value, mult in self.pairs:
            out.extend([value] * mult)
        return out

    def as_pairs(self):
        return [(str(v), m) for v, m in self.pairs]

    def __repr__(self):
        body = ", ".join(f"{v} x{m}" for v, m in self.pairs)
        if self.residual:
            body += f"; residual degree {len(self.residual) - 1}"
        return f"EigenReport({body})"


def eigen_report(matrix) -> EigenReport:
    size = len(matrix)
    coeffs = charpoly(matrix)
    pairs, residual = rational_roots(coeffs)
    pairs = [(v if isinstance(v, Fraction) else v.re, m) for v, m in pairs]
    total = sum(m for _, m in pairs) + (len(residual) - 1 if residual else 0)
    if total != size:
        raise RuntimeError("spectrum bookkeeping lost degrees")
    return EigenReport(size, sorted(pairs), residual, is_hermitian(matrix))


def common_kernel(endos, dim=None):
    """Exact basis of the intersection of kernels; empty input gives the full module."""
    endos = list(endos)
    if not endos:
        if dim is None:
            raise ValueError("dimension required for an empty kernel problem")
        return [[CQ(1) if i == j else CQ(0) for i in range(dim)] for j in range(dim)]
    size = len(endos[0])
    for m in endos:
        if len(m) != size:
            raise DimensionMismatch("spin endomorphism sizes differ")
    stacked = [row for m in endos for row in m]
    return nullspace(stacked, one=CQ(1))


def kernel_apply(matrix, vector):
    return mat_vec(matrix, vector)


# ---------------------------------------------------------------------------
# dimension-5 closed-form kernel conditions
# ---------------------------------------------------------------------------

def spinor_5d(which: str):
    """Distinguished spinors of Delta_5 in the pinned basis.

    "plus":  rank-one type, Reeb direction acts by +i (a (+/-4)-eigenvector of
             the contact 3-form action);
    "minus": rank-two kernel type, Reeb direction acts by -i.
    """
    if which == "plus":
        return [CQ(1), CQ(0), CQ(0), CQ(0)]
    if which == "minus":
        return [CQ(0), CQ(1), CQ(0), CQ(0)]
    raise ValueError("which must be 'plus' or 'minus'")


def kernel_conditions_5d(t: Form, x: Form, which: str) -> bool:
    """Closed-form test for the distinguished spinor to lie in ker(t . + x .).

    `t` is a 3-form and `x` a 1-form on R^5.  The "plus" variant carries the
    sign pattern x_1 = -t_234, the "minus" variant x_1 = +t_234; both variants
    are certified against direct kernel membership by the test suite.
    """
    if t.n != 5 or x.n != 5:
        raise DimensionMismatch("dimension-5 conditions")
    if t.degree != 3 or x.degree != 1:
        raise DegreeError("expected a 3-form and a 1-form")
    s = 1 if which == "plus" else -1 if which == "minus" else None
    if s is None:
        raise ValueError("which must be 'plus' or 'minus'")
    tc = t.coeff
    xc = {i: x.coeff(i) for i in range(1, 6)}
    eqs = [
        xc[1] + s * tc(2, 3, 4),
        xc[2] - s * tc(1, 3, 4),
        xc[3] + s * tc(1, 2, 4),
        xc[4] - s * tc(1, 2, 3),
        xc[5],
        tc(1, 2, 5) + s * tc(3, 4, 5),
        tc(2, 3, 5) + s * tc(1, 4, 5),
        tc(2, 4, 5) - s * tc(1, 3, 5),
    ]
    return all(not e for e in eqs)


def spin_endo_5d(t: Form, x: Form):
    """The endomorphism sum(t_ijk e_i e_j e_k) + sum(x_i e_i) on Delta_5."""
    rep = build_rep(5)
    return act_form(rep, [t, x])


def restrict(matrix, basis):
    """Matrix of an endomorphism restricted to an invariant subspace basis."""
    size = len(basis)
    images = [mat_vec(matrix, v) for v in basis]
    cols = [[basis[j][i] for j in range(size)] for i in range(len(basis[0]))]
    sols = _solve_in_span(basis, images)
    return [[sols[j][i] for j in range(size)] for i in range(size)]


def _solve_in_span(basis, images):
    from .linalg import solve
    matrix = [[basis[j][i] for j in range(len(basis))] for i in range(len(basis[0]))]
    sols = solve(matrix, images)
    if any(s is None for s in sols):
        raise ValueError("subspace is not invariant")
    return sols


def half_spinor_bases(rep: GammaRep):
    """Eigenbases of the volume element on an even-dimensional module (+i, -i)."""
    if rep.n % 2:
        raise DimensionMismatch("half modules exist in even dimensions")
    vol = rep.gammas[0]
    for g in rep.gammas[1:]:
        vol = mat_mul(vol, g)
    plus, minus = [], []
    size = rep.dim
    for lam, bucket in ((CQ(0, 1), plus), (CQ(0, -1), minus)):
        shifted = [[vol[i][j] - (lam if i == j else CQ(0)) for j in range(size)]
                   for i in range(size)]
        bucket.extend(nullspace(shifted, one=CQ(1)))
    return plus, minus
