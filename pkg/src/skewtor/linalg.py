"""Exact linear algebra: rationals, Gaussian rationals, and certified big-matrix ranks.

Small systems (spinor modules, curvature tables) run a straightforward
fraction-free/field elimination.  The large representation-theoretic matrices
(up to 196 x 196) use integer arithmetic plus a mod-p elimination whose result
is promoted to an exact statement by a separate certificate, never trusted on
its own.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import numpy as np

Q = Fraction


class CQ:
    """Gaussian rational a + b*i with exact Fraction components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Q(re)
        self.im = Q(im)

    @staticmethod
    def of(x):
        if isinstance(x, CQ):
            return x
        return CQ(x)

    def __add__(self, other):
        o = CQ.of(other)
        return CQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = CQ.of(other)
        return CQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return CQ.of(other) - self

    def __mul__(self, other):
        o = CQ.of(other)
        return CQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = CQ.of(other)
        d = o.re * o.re + o.im * o.im
        if not d:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return CQ((self.re * o.re + self.im * o.im) / d,
                  (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        return CQ.of(other) / self

    def __neg__(self):
        return CQ(-self.re, -self.im)

    def conj(self):
        return CQ(self.re, -self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = CQ.of(other) if isinstance(other, (CQ, int, Fraction)) else None
        return o is not None and self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_real(self):
        return not self.im

    def __repr__(self):
        if not self.im:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


I = CQ(0, 1)


# ---------------------------------------------------------------------------
# generic dense matrices (list-of-lists over Fraction or CQ)
# ---------------------------------------------------------------------------

def mat_zero(rows, cols, zero=Q(0)):
    return [[zero] * cols for _ in range(rows)]


def mat_identity(n, one=Q(1), zero=Q(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, s):
    return [[s * x for x in row] for row in a]


def mat_mul(a, b):
    zero = a[0][0] - a[0][0]
    cols_b = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in cols_b:
            acc = zero
            for x, y in zip(row, col):
                if x and y:
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def mat_vec(a, v):
    zero = a[0][0] - a[0][0]
    out = []
    for row in a:
        acc = zero
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def mat_trace(a):
    t = a[0][0] - a[0][0]
    for i in range(len(a)):
        t = t + a[i][i]
    return t


def mat_eq_zero(a):
    return all(not x for row in a for x in row)


def mat_conj_transpose(a):
    return [[a[i][j].conj() if isinstance(a[i][j], CQ) else a[i][j]
             for i in range(len(a))] for j in range(len(a[0]))]


def is_hermitian(a):
    n = len(a)
    for i in range(n):
        for j in range(n):
            x, y = CQ.of(a[i][j]), CQ.of(a[j][i])
            if x.re != y.re or x.im != -y.im:
                return False
    return True


def rref(matrix, pivot_limit=None):
    """Reduced row echelon form over any exact field; returns (rows, pivot_cols).

    The input is copied; entries need +,-,*,/ and truthiness.  Columns at or
    beyond `pivot_limit` are reduced but never chosen as pivots (augmented
    right-hand sides).
    """
    rows = [list(r) for r in matrix]
    m = len(rows)
    n = len(rows[0]) if m else 0
    limit = n if pivot_limit is None else pivot_limit
    pivots = []
    r = 0
    for c in range(limit):
        pivot_row = next((k for k in range(r, m) if rows[k][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        piv = rows[r][c]
        rows[r] = [x / piv for x in rows[r]]
        for k in range(m):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows, pivots


def rank(matrix):
    if not matrix:
        return 0
    return len(rref(matrix)[1])


def nullspace(matrix, one=Q(1)):
    """Exact kernel basis (list of column vectors) of a matrix over a field."""
    if not matrix:
        return []
    rows, pivots = rref(matrix)
    n = len(matrix[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    zero = one - one
    for fc in free:
        v = [zero] * n
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return basis


def solve(matrix, rhs_cols):
    """Solve A x = b for each b in rhs_cols (one particular solution each).

    Returns a list of solution vectors, with None for inconsistent systems.
    Eliminates the matrix once for all right-hand sides.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    k = len(rhs_cols)
    aug = [list(matrix[i]) + [rhs_cols[j][i] for j in range(k)] for i in range(m)]
    rows, pivots = rref(aug, pivot_limit=n)
    zero = matrix[0][0] - matrix[0][0]
    piv = list(enumerate(pivots))
    sols = []
    for j in range(k):
        col = n + j
        consistent = True
        for r in range(len(rows)):
            if rows[r][col] and all(not rows[r][c] for c in range(n)):
                consistent = False
                break
        if not consistent:
            sols.append(None)
            continue
        x = [zero] * n
        for r, pc in piv:
            x[pc] = rows[r][col]
        sols.append(x)
    return sols


def invert(matrix):
    n = len(matrix)
    # build identity in the same field by probing a nonzero entry
    probe = next((x for row in matrix for x in row if x), None)
    if probe is None:
        raise ZeroDivisionError("singular matrix")
    one = probe / probe
    zero = probe - probe
    aug = [list(matrix[i]) + [one if i == j else zero for j in range(n)]
           for i in range(n)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in rows[:n]]


# ---------------------------------------------------------------------------
# characteristic polynomial & rational roots
# ---------------------------------------------------------------------------

def charpoly(matrix):
    """Monic characteristic polynomial det(xI - A), coefficients highest first.

    Faddeev-LeVerrier; exact over Fraction or CQ entries.
    """
    n = len(matrix)
    probe = matrix[0][0]
    one = CQ(1) if isinstance(probe, CQ) else Q(1)
    zero = one - one
    coeffs = [one]
    m = mat_identity(n, one, zero)
    for k in range(1, n + 1):
        am = mat_mul(matrix, m)
        ck = -(mat_trace(am) / k)
        coeffs.append(ck)
        m = [[am[i][j] + (ck if i == j else zero) for j in range(n)] for i in range(n)]
    return coeffs


def poly_eval(coeffs, x):
    acc = coeffs[0] - coeffs[0]
    for c in coeffs:
        acc = acc * x + c
    return acc


def poly_divide_root(coeffs, root):
    """Synthetic division by (x - root); assumes the remainder is zero."""
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + out[-1] * root)
    return out


def _real_coeffs(coeffs):
    real = []
    for c in coeffs:
        if isinstance(c, CQ):
            if c.im:
                return None
            real.append(c.re)
        else:
            real.append(Q(c))
    return real


def rational_roots(coeffs):
    """All rational roots with multiplicity, plus the non-splitting residual.

    `coeffs` is monic-or-not, highest degree first, Fraction or CQ entries.
    Returns (sorted [(root, multiplicity)], residual_coeffs as Fractions or
    original scalars when the polynomial has non-real coefficients).
    """
    work = list(coeffs)
    roots = {}
    # candidate roots come from the real representative; complex evaluation
    # still decides membership exactly
    while len(work) > 1:
        real = _real_coeffs(work)
        if real is None:
            break
        den = 1
        for c in real:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in real]
        while ints and ints[0] == 0:
            ints = ints[1:]
        if not ints or len(ints) == 1:
            break
        if ints[-1] == 0:
            root = Q(0)
        else:
            root = None
            lead, const = abs(ints[0]), abs(ints[-1])
            for p in _divisors(const):
                for q in _divisors(lead):
                    for cand in (Q(p, q), Q(-p, q)):
                        if not poly_eval(work, _like(work[0], cand)):
                            root = cand
                            break
                    if root is not None:
                        break
                if root is not None:
                    break
        if root is None:
            break
        roots[root] = roots.get(root, 0) + 1
        work = poly_divide_root(work, _like(work[0], root))
    residual = work if len(work) > 1 else None
    return sorted(roots.items()), residual


def _like(sample, value):
    return CQ(value) if isinstance(sample, CQ) else Q(value)


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


# ---------------------------------------------------------------------------
# integer matrices: exact echelon, mod-p elimination, certified spectra
# ---------------------------------------------------------------------------

def fraction_rows_to_int(matrix):
    """Clear denominators row by row; preserves row space and kernel."""
    out = []
    for row in matrix:
        den = 1
        for x in row:
            q = Q(x)
            den = den * q.denominator // gcd(den, q.denominator)
        ints = [int(Q(x) * den) for x in row]
        g = 0
        for v in ints:
            g = gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        out.append(ints)
    return out


def int_echelon(matrix):
    """Integer row echelon with per-row gcd reduction; returns (rows, pivot_cols)."""
    rows = [list(r) for r in matrix]
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n):
        # smallest nonzero pivot keeps the integers from exploding
        best = None
        for k in range(r, m):
            v = rows[k][c]
            if v and (best is None or abs(v) < abs(rows[best][c])):
                best = k
        if best is None:
            continue
        rows[r], rows[best] = rows[best], rows[r]
        piv = rows[r][c]
        for k in range(r + 1, m):
            v = rows[k][c]
            if not v:
                continue
            g = gcd(piv, v)
            a, b = piv // g, v // g
            new = [a * x - b * y for x, y in zip(rows[k], rows[r])]
            g2 = 0
            for x in new:
                g2 = gcd(g2, x)
            if g2 > 1:
                new = [x // g2 for x in new]
            rows[k] = new
        pivots.append(c)
        r += 1
        if r == m:
            break
    return rows[:r], pivots


def int_rank(matrix):
    return len(int_echelon(matrix)[1])


def int_nullspace(matrix):
    """Exact rational kernel basis of an integer matrix."""
    ech, pivots = int_echelon(matrix)
    n = len(matrix[0]) if matrix else 0
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Q(0)] * n
        v[fc] = Q(1)
        for r in range(len(ech) - 1, -1, -1):
            pc = pivots[r]
            s = sum(Q(ech[r][c]) * v[c] for c in range(pc + 1, n) if v[c])
            v[pc] = -s / ech[r][pc]
        basis.append(v)
    return basis


_PRIMES = [2097143, 2097133, 2097131, 2097097, 2097091, 2097083, 2097047,
           2097041, 2097031, 2097023, 2097013, 2096993]


def rank_mod_p(matrix, p):
    """Rank of an integer matrix mod p (numpy elimination).

    Always a lower bound for the rationals' rank; callers must certify before
    claiming exactness.
    """
    a = np.array(matrix, dtype=object) % p
    a = a.astype(np.int64)
    m, n = a.shape
    r = 0
    for c in range(n):
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            a[[r, k]] = a[[k, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[r + 1:, c].copy()
        mask = col != 0
        if mask.any():
            a[r + 1:][mask] = (a[r + 1:][mask] - col[mask, None] * a[r][None, :]) % p
        r += 1
        if r == m:
            break
    return r


def _int_matmul(a, b):
    """Exact product of integer numpy-able matrices, guarding int64 overflow."""
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    bound = a.shape[1] * max(1, int(np.abs(a).max())) * max(1, int(np.abs(b).max()))
    if bound < 2 ** 62:
        return (a.astype(np.int64) @ b.astype(np.int64)).astype(object)
    return a @ b


def int_matmul(a, b):
    return _int_matmul(a, b).tolist()


def krylov_min_poly(matvec, n, seeds=3, rng=None):
    """Monic minimal-polynomial candidate of an integer operator via Krylov spans.

    Returns Fraction coefficients (highest first).  The result always divides
    the true minimal polynomial; equality must be certified separately.
    Dependence detection runs mod p; the dependence itself is solved and
    verified exactly, so a bad prime only costs extra iterations.
    """
    import random
    rng = rng or random.Random(20240811)
    poly = [Q(1)]
    for seed in range(seeds):
        v = [rng.randint(1, 9) for _ in range(n)]
        mp = _krylov_single(matvec, n, v)
        poly = poly_lcm(poly, mp)
    return poly


def _krylov_single(matvec, n, v):
    p = _PRIMES[0]
    vecs = [list(v)]
    while len(vecs) <= n + 1:
        vecs.append(matvec(vecs[-1]))
        cols = len(vecs)
        modm = [[vecs[j][i] % p for j in range(cols)] for i in range(n)]
        if rank_mod_p(modm, p) == cols:
            continue
        # dependence suspected: solve sum c_j v_j = 0 with c_last = 1 exactly
        # on pivot rows of the first cols-1 vectors, then verify on all rows
        lead = [[Q(vecs[j][i]) for j in range(cols - 1)] for i in range(n)]
        sol = solve(lead, [[-Q(vecs[-1][i]) for i in range(n)]])[0]
        if sol is None:
            continue
        residual_ok = True
        for i in range(n):
            acc = Q(vecs[-1][i])
            for j in range(cols - 1):
                if sol[j] and vecs[j][i]:
                    acc += sol[j] * vecs[j][i]
            if acc:
                residual_ok = False
                break
        if residual_ok:
            return [Q(1)] + [sol[j] for j in range(cols - 2, -1, -1)]
    raise RuntimeError("krylov failed to terminate")


def poly_lcm(p, q):
    g = poly_gcd(p, q)
    quo, _ = poly_divmod(p, g)
    out = poly_mul(quo, q)
    return [c / out[0] for c in out]


def poly_mul(p, q):
    out = [Q(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def poly_divmod(p, q):
    p = list(p)
    quo = []
    while len(p) >= len(q):
        f = p[0] / q[0]
        quo.append(f)
        p = [a - f * b for a, b in zip(p[1:], q[1:])] + p[len(q):]
    return (quo or [Q(0)]), (p or [Q(0)])


def poly_gcd(p, q):
    a, b = list(p), list(q)
    while any(b):
        _, r = poly_divmod(a, b)
        while len(r) > 1 and not r[0]:
            r = r[1:]
        a, b = b, r
        if len(b) == 1 and not b[0]:
            break
    return [c / a[0] for c in a]


def certify_annihilation(int_matrix, int_roots):
    """Exact proof that prod_k (A - r_k I) = 0 for an integer matrix A.

    Runs the product mod enough primes that CRT covers an a-priori entry
    bound, so a zero residue everywhere implies the exact zero matrix.
    """
    a = np.array(int_matrix, dtype=object)
    n = a.shape[0]
    max_a = max(1, int(np.abs(a).max()))
    bound = max_a + max((abs(r) for r in int_roots), default=0)
    for r in int_roots:
        bound *= n * (max_a + abs(r))
    need = 2 * bound + 1
    prod = 1
    primes = []
    for p in _PRIMES:
        primes.append(p)
        prod *= p
        if prod >= need:
            break
    else:
        raise RuntimeError("prime pool exhausted for certificate")
    for p in primes:
        acc = np.eye(n, dtype=np.int64)
        ap = (a % p).astype(np.int64)
        for r in int_roots:
            term = (ap - (r % p) * np.eye(n, dtype=np.int64)) % p
            acc = (acc @ term) % p
        if np.any(acc):
            return False
    return True


def certified_eigenspace_dims(int_matrix, eigs_scaled):
    """Exact eigenspace dimensions of a diagonalizable integer matrix.

    Requires that `certify_annihilation` already proved the matrix is
    diagonalizable with exactly `eigs_scaled` as eigenvalues.  Mod-p ranks are
    lower bounds for rational ranks, so when the resulting kernel dimensions
    add up to the full dimension each one is exact.
    """
    n = len(int_matrix)
    a = np.array(int_matrix, dtype=object)
    for p in _PRIMES:
        dims = []
        for lam in eigs_scaled:
            shifted = a - lam * np.eye(n, dtype=object)
            dims.append(n - rank_mod_p(shifted.tolist(), p))
        if sum(dims) == n:
            return dims
    raise RuntimeError("no prime certified the eigenspace dimensions")
