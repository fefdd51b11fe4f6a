"""Exact integer and rational linear algebra.

Vectors are tuples of Python ints, matrices are tuples of row tuples.
Python ints give arbitrary precision for free; nothing here ever touches
a float.  Row/column conventions: a lattice basis is a matrix whose ROWS
are the basis vectors, and ``coords . basis == ambient vector``.
"""

from fractions import Fraction
from math import gcd


def vec(entries):
    return tuple(int(e) for e in entries)


def mat(rows):
    out = tuple(tuple(int(e) for e in r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero_matrix(r, c):
    return tuple((0,) * c for _ in range(r))


def transpose(a):
    return tuple(zip(*a)) if a else ()


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a, v):
    """Matrix times column vector."""
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_mat(v, a):
    """Row vector times matrix."""
    return tuple(sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0]))) if a else ()


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vec_neg(u):
    return tuple(-x for x in u)


def vec_scale(u, c):
    return tuple(c * x for x in u)


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v):
    """Divide out the content; the zero vector is returned unchanged."""
    g = vec_gcd(v)
    return v if g in (0, 1) else tuple(x // g for x in v)


def is_zero_vec(v):
    return all(x == 0 for x in v)


# ---------------------------------------------------------------------------
# Hermite and Smith normal forms with transformation matrices.
# ---------------------------------------------------------------------------

def hnf(a):
    """Row Hermite normal form.

    Returns (H, U) with U unimodular and U.a == H.  Pivots are positive,
    entries above a pivot are reduced into [0, pivot), zero rows sink to
    the bottom.
    """
    a = mat(a)
    if not a:
        raise ValueError("empty matrix")
    m, n = len(a), len(a[0])
    h = [list(r) for r in a]
    u = [list(r) for r in identity(m)]

    def row_sub(i, j, q):
        if q:
            h[i] = [x - q * y for x, y in zip(h[i], h[j])]
            u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    r = 0
    for c in range(n):
        rows = [i for i in range(r, m) if h[i][c] != 0]
        if not rows:
            continue
        while len(rows) > 1:
            i0 = min(rows, key=lambda i: abs(h[i][c]))
            for i in rows:
                if i != i0:
                    row_sub(i, i0, h[i][c] // h[i0][c])
            rows = [i for i in range(r, m) if h[i][c] != 0]
        i0 = rows[0]
        if i0 != r:
            h[r], h[i0] = h[i0], h[r]
            u[r], u[i0] = u[i0], u[r]
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            row_sub(i, r, h[i][c] // h[r][c])
        r += 1
        if r == m:
            break
    return mat(h), mat(u)


def snf(a):
    """Smith normal form.

    Returns (S, U, V) with U, V unimodular, U.a.V == S, S diagonal with
    nonnegative entries s1 | s2 | ... .
    """
    a = mat(a)
    if not a:
        raise ValueError("empty matrix")
    m, n = len(a), len(a[0])
    s = [list(r) for r in a]
    u = [list(r) for r in identity(m)]
    v = [list(r) for r in identity(n)]

    def row_sub(i, j, q):
        if q:
            s[i] = [x - q * y for x, y in zip(s[i], s[j])]
            u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_sub(i, j, q):
        if q:
            for row in s:
                row[i] -= q * row[j]
            for row in v:
                row[i] -= q * row[j]

    def swap_rows(i, j):
        if i != j:
            s[i], s[j] = s[j], s[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for row in s:
                row[i], row[j] = row[j], row[i]
            for row in v:
                row[i], row[j] = row[j], row[i]

    t = 0
    while True:
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if s[i][j] != 0 and (best is None or abs(s[i][j]) < best):
                    best = abs(s[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            dirty = False
            for i in range(t + 1, m):
                if s[i][t] != 0:
                    q = s[i][t] // s[t][t]
                    row_sub(i, t, q)
                    if s[i][t] != 0:
                        swap_rows(t, i)
                    dirty = True
            for j in range(t + 1, n):
                if s[t][j] != 0:
                    q = s[t][j] // s[t][t]
                    col_sub(j, t, q)
                    if s[t][j] != 0:
                        swap_cols(t, j)
                    dirty = True
            if not dirty:
                break
        # divisibility fix-up: s[t][t] must divide everything below-right
        fixed = True
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if s[i][j] % s[t][t] != 0:
                    s[t] = [x + y for x, y in zip(s[t], s[i])]
                    u[t] = [x + y for x, y in zip(u[t], u[i])]
                    fixed = False
                    break
            if not fixed:
                break
        if not fixed:
            continue
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1
        if t == min(m, n):
            break
    return mat(s), mat(u), mat(v)


def det_int(a):
    """Determinant of a square integer matrix (Bareiss, exact)."""
    a = mat(a)
    n = len(a)
    if n == 0:
        return 1
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    m = [list(r) for r in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Rational (Fraction) elimination utilities.
# ---------------------------------------------------------------------------

def _frac_rows(a):
    return [[Fraction(x) for x in row] for row in a]


def rank(a):
    if not a:
        return 0
    rows = _frac_rows(a)
    n = len(rows[0])
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


def solve(a, b):
    """One exact solution x of a.x == b over the rationals, or None.

    ``a`` is an m x n integer or Fraction matrix, ``b`` a length-m vector.
    If the system is underdetermined an arbitrary (but deterministic)
    solution is returned; if inconsistent, None.
    """
    if not a:
        return () if is_zero_vec(tuple(b)) else None
    m, n = len(a), len(a[0])
    rows = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = rows[i][n]
    return tuple(x)


def nullspace(a):
    """Basis (tuple of Fraction tuples) of the right kernel of a."""
    if not a:
        return ()
    m, n = len(a), len(a[0])
    rows = _frac_rows(a)
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][fc]
        basis.append(tuple(v))
    return tuple(basis)


def inverse_frac(a):
    """Exact inverse of a square matrix as Fraction rows."""
    n = len(a)
    rows = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
            for i, row in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        rows[c], rows[piv] = rows[piv], rows[c]
        inv = 1 / rows[c][c]
        rows[c] = [x * inv for x in rows[c]]
        for i in range(n):
            if i != c and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return tuple(tuple(row[n:]) for row in rows)


def inverse_int(a):
    """Inverse of a unimodular integer matrix, as integers."""
    inv = inverse_frac(a)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def lattice_coords(basis, v):
    """Integer coordinates c with c.basis == v, or None.

    ``basis`` rows must be linearly independent.
    """
    if not basis:
        return () if is_zero_vec(tuple(v)) else None
    x = solve(transpose(basis), v)
    if x is None:
        return None
    if any(f.denominator != 1 for f in x):
        return None
    return tuple(int(f) for f in x)


def rational_coords(basis, v):
    """Fraction coordinates c with c.basis == v, or None if v is off-span."""
    if not basis:
        return () if is_zero_vec(tuple(v)) else None
    return solve(transpose(basis), v)


def saturation_basis(a):
    """Basis rows of the saturation of the row space of ``a``.

    The result spans rowspace_Q(a) and generates ZZ^n intersected with
    that span (a saturated sublattice).
    """
    a = mat(a)
    s, _u, v = snf(a)
    r = sum(1 for i in range(min(len(s), len(s[0]))) if s[i][i] != 0)
    vinv = inverse_int(v)
    return tuple(vinv[i] for i in range(r))
