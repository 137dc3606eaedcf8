"""Seifert matrices: validation, symmetry transforms and connected sums."""

from __future__ import annotations

from ..algebra import intmatrix as im
from ..algebra.laurent import LaurentPoly


class SeifertError(ValueError):
    pass


def validate_seifert(v):
    """Check that v is a square integer matrix with det(V - V^T) = 1.

    Returns the matrix unchanged; raises SeifertError otherwise.  The
    determinant condition forces even rank, so a valid matrix is always
    2g x 2g.
    """
    if not isinstance(v, (list, tuple)) or not v:
        # the empty matrix is the unknot; allow it
        if isinstance(v, (list, tuple)):
            return []
        raise SeifertError("Seifert matrix must be a list of rows")
    n = len(v)
    for row in v:
        if not isinstance(row, (list, tuple)) or len(row) != n:
            raise SeifertError("Seifert matrix must be square")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise SeifertError("Seifert matrix entries must be integers")
    rows = [list(r) for r in v]
    d = im.det_bareiss(im.mat_sub(rows, im.mat_transpose(rows)))
    if d != 1:
        raise SeifertError(
            "det(V - V^T) = %d != 1; not a Seifert matrix of a knot" % d)
    return rows


def negate(v):
    """Seifert matrix of the mirror image -K."""
    return [[-x for x in row] for row in v]


def reverse(v):
    """Seifert matrix of the reverse K^r (same knot, opposite orientation)."""
    return im.mat_transpose([list(r) for r in v])


def transform(v, mirror=False, reversed_=False):
    w = [list(r) for r in v]
    if reversed_:
        w = reverse(w)
    if mirror:
        w = negate(w)
    return w


def connected_sum(*mats):
    """Block sum of Seifert matrices."""
    mats = [m for m in mats if m]
    n = sum(len(m) for m in mats)
    out = [[0] * n for _ in range(n)]
    off = 0
    for m in mats:
        k = len(m)
        for i in range(k):
            for j in range(k):
                out[off + i][off + j] = m[i][j]
        off += k
    return out


def alexander_from_seifert(v):
    """det(V - t V^T) in canonical form."""
    if not v:
        return LaurentPoly(0, [1])
    n = len(v)
    # entries V[i][j] - t*V[j][i] as linear polynomials; evaluate at
    # n+1 integer points and interpolate (degree <= n)
    from .diagram import _lagrange
    pts, vals = [], []
    for x in range(n + 1):
        m = [[v[i][j] - x * v[j][i] for j in range(n)] for i in range(n)]
        pts.append(x)
        vals.append(im.det_bareiss(m))
    coeffs = _lagrange(pts, vals, n)
    return LaurentPoly(0, coeffs).canonical()


def signature(v):
    """Ordinary knot signature sign(V + V^T)."""
    if not v:
        return 0
    q = im.mat_add([list(r) for r in v], im.mat_transpose([list(r) for r in v]))
    diag, _ = im.diagonalize_symmetric(q)
    s = 0
    for d in diag:
        if d > 0:
            s += 1
        elif d < 0:
            s -= 1
    return s


def determinant(v):
    """|H_1 of the double branched cover| = |det(V + V^T)|."""
    if not v:
        return 1
    q = im.mat_add([list(r) for r in v], im.mat_transpose([list(r) for r in v]))
    return abs(im.det_bareiss(q))
