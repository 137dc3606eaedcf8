"""Exact integer and rational matrix kernel.

Everything here works with Python ints and fractions.Fraction; no floats
anywhere.  Matrices are tuples of tuples, immutable by convention.
"""

from fractions import Fraction


def mat_from_rows(rows):
    """Freeze a list-of-lists into a tuple-of-tuples matrix."""
    m = tuple(tuple(r) for r in rows)
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def mat_shape(m):
    return (len(m), len(m[0]) if m else 0)


def mat_transpose(m):
    return tuple(zip(*m)) if m else ()


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a):
    return tuple(tuple(-x for x in r) for r in a)


def mat_scale(a, c):
    return tuple(tuple(c * x for x in r) for r in a)


def mat_mul(a, b):
    bt = mat_transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(ra, cb)) for cb in bt) for ra in a)


def mat_identity(n, one=1):
    return tuple(tuple(one if i == j else one * 0 for j in range(n)) for i in range(n))


def det_bareiss(m):
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_rational(m):
    """Determinant of a matrix with Fraction (or int) entries."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    a = [[Fraction(x) for x in r] for r in m]
    det = Fraction(1)
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i][k] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def mat_inverse_rational(m):
    """Exact inverse of a nonsingular matrix over Q."""
    n = len(m)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(m)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return tuple(tuple(r[n:]) for r in a)


def charpoly(m):
    """Characteristic polynomial det(tI - M) as a list of Fractions, low to high.

    Faddeev-LeVerrier; exact over Q.
    """
    n = len(m)
    if n == 0:
        return [Fraction(1)]
    a = [[Fraction(x) for x in r] for r in m]
    coeffs = [Fraction(0)] * n + [Fraction(1)]  # t^n coefficient
    mk = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]  # M^0
    cur = mk
    for k in range(1, n + 1):
        cur = [[sum(a[i][l] * cur[l][j] for l in range(n)) for j in range(n)]
               for i in range(n)]
        # Newton's identity bookkeeping via Faddeev-LeVerrier
        c = -sum(cur[i][i] for i in range(n)) / k
        coeffs[n - k] = c
        if k < n:
            for i in range(n):
                cur[i][i] += c
    return coeffs


class SnfResult:
    """Smith normal form: divisibility-chained invariant factors plus the
    unimodular transforms U, W with U*M*W diagonal."""

    def __init__(self, factors, u, w):
        self.factors = tuple(factors)
        self.u = u
        self.w = w

    def nonzero_factors(self):
        return tuple(d for d in self.factors if d != 0)


def smith_normal_form(m, want_transforms=True):
    """Smith normal form over Z.

    Pivot rule: smallest absolute nonzero value, scanning row-major, so the
    transforms are reproducible.  Returns SnfResult with factors d_1 | d_2 |
    ... (nonnegative, zeros trailing).
    """
    rows, cols = mat_shape(m)
    a = [list(r) for r in m]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    w = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in w:
            r[i], r[j] = r[j], r[i]

    def addmul_row(dst, src, c):
        a[dst] = [x + c * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def addmul_col(dst, src, c):
        for r in a:
            r[dst] += c * r[src]
        for r in w:
            r[dst] += c * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    n = min(rows, cols)
    while t < n:
        # locate smallest-abs nonzero pivot in the remaining block
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        # clear row and column; restart if remainders appear
        while True:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    addmul_row(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    addmul_col(j, t, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                break
        # enforce divisibility of the remaining block by the pivot
        stray = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % a[t][t]:
                    stray = i
                    break
            if stray is not None:
                break
        if stray is not None:
            addmul_row(t, stray, 1)
            continue
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    factors = [a[i][i] if i < cols else 0 for i in range(min(rows, cols))]
    factors = [abs(factors[i]) if i < t else 0 for i in range(len(factors))]
    res = SnfResult(factors, mat_from_rows(u), mat_from_rows(w))
    return res


def diagonalize_symmetric(q):
    """Diagonalize a symmetric nonsingular matrix over Q by congruence.

    Returns (diag_entries, P) with P^T Q P = diag(entries), P invertible
    over Q, each entry nonzero.
    """
    n = len(q)
    a = [[Fraction(x) for x in r] for r in q]
    if any(a[i][j] != a[j][i] for i in range(n) for j in range(n)):
        raise ValueError("not symmetric")
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]

    def add_col(dst, src, c):
        # column op on A (and matching row op, keeping symmetry) and on P
        for i in range(n):
            a[i][dst] += c * a[i][src]
        for j in range(n):
            a[dst][j] += c * a[src][j]
        for i in range(n):
            p[i][dst] += c * p[i][src]

    def swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        a[i], a[j] = a[j], a[i]
        for r in p:
            r[i], r[j] = r[j], r[i]

    for k in range(n):
        if a[k][k] == 0:
            # find a nonzero diagonal further on, else build one from an
            # off-diagonal entry
            piv = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if piv is not None:
                swap(k, piv)
            else:
                off = next(((i, j) for i in range(k, n) for j in range(i + 1, n)
                            if a[i][j] != 0), None)
                if off is None:
                    raise ValueError("degenerate form")
                i, j = off
                add_col(i, j, Fraction(1))
                if i != k:
                    swap(k, i)
        d = a[k][k]
        for j in range(k + 1, n):
            if a[k][j]:
                add_col(j, k, -a[k][j] / d)
    diag = [a[i][i] for i in range(n)]
    if any(x == 0 for x in diag):
        raise ValueError("degenerate form")
    return diag, mat_from_rows(p)
