"""Isometric structures and their primary decomposition.

A Seifert matrix V with det V != 0 determines the isometric structure
(Q, T) = (V + V^T, V^{-1}V^T); T is an isometry of Q and its
characteristic polynomial is the Alexander polynomial up to a unit.
Singular V are first replaced by an S-equivalent smaller matrix.
"""

from dataclasses import dataclass
from fractions import Fraction

from ..algebra.intmatrix import (charpoly, det_rational, mat_inverse_rational,
                                 mat_mul, mat_transpose)
from ..algebra.laurent import LaurentPoly
from ..knots.seifert import validate_seifert

__all__ = ["IsometricStructure", "isometric_structure", "symmetric_factors",
           "nonsingular_representative"]


def _frac_rows(m):
    return [[Fraction(x) for x in row] for row in m]


def _null_vector(m):
    """A nonzero rational vector in the right kernel, or None."""
    n = len(m)
    a = _frac_rows(m)
    pivots = {}
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if a[r][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        inv = 1 / a[row][col]
        a[row] = [x * inv for x in a[row]]
        for r in range(n):
            if r != row and a[r][col]:
                c = a[r][col]
                a[r] = [x - c * y for x, y in zip(a[r], a[row])]
        pivots[col] = row
        row += 1
    free = [c for c in range(n) if c not in pivots]
    if not free:
        return None
    f = free[0]
    v = [Fraction(0)] * n
    v[f] = Fraction(1)
    for col, r in pivots.items():
        v[col] = -a[r][f]
    return v


def _congruence(v, p):
    """P^T V P for square rational matrices."""
    return [list(r) for r in mat_mul(mat_transpose(p), mat_mul(v, p))]


def nonsingular_representative(v):
    """Rationally reduce a Seifert matrix until det != 0.

    Whenever V x = 0 for some x != 0 the pairing splits off a metabolic
    rank-2 summand, which can be removed without changing the class in
    G_Q or the Alexander polynomial up to a unit.
    """
    a = _frac_rows(v)
    while a:
        n = len(a)
        x = _null_vector(a)
        if x is None:
            return a
        # basis change sending the last basis vector to x
        j = max(i for i in range(n) if x[i])
        p = [[Fraction(int(c == r)) for c in range(n)] for r in range(n)]
        for r in range(n):
            p[r][n - 1] = x[r]
        if j != n - 1:
            for r in range(n):
                p[r][j] = Fraction(int(r == n - 1))
        a = _congruence(a, p)
        # last column is now zero; its row is not (else V - V^T is singular)
        r = a[n - 1]
        k = max(i for i in range(n - 1) if r[i])
        # clear the last row down to a single unit entry in position n-2
        p = [[Fraction(int(c == r2)) for c in range(n)] for r2 in range(n)]
        for c in range(n - 1):
            if c == k:
                p[k][c] = 1 / r[k]
            elif r[c]:
                p[k][c] = -r[c] / r[k]
        a = _congruence(a, p)
        if k != n - 2:
            p = [[Fraction(int(c == r2)) for c in range(n)] for r2 in range(n)]
            for r2 in range(n):
                p[r2][k], p[r2][n - 2] = p[r2][n - 2], p[r2][k]
            a = _congruence(a, p)
        # rows/cols n-2 and n-1 now carry a metabolic summand: drop them
        if a[n - 1][: n - 2] != [Fraction(0)] * (n - 2) or \
                any(a[i][n - 1] for i in range(n)):
            raise ArithmeticError("S-reduction failed to split a summand")
        a = [row[: n - 2] for row in a[: n - 2]]
    return a


@dataclass(frozen=True)
class IsometricStructure:
    q: tuple      # symmetric rational matrix, rows as tuples
    t: tuple      # isometry with t^T q t = q

    @property
    def rank(self):
        return len(self.q)

    def char_poly(self):
        """Characteristic polynomial of T as a canonical LaurentPoly."""
        cs = charpoly([list(r) for r in self.t])
        return LaurentPoly(0, cs).canonical()


def isometric_structure(v):
    """The pair (V+V^T, V^{-1}V^T) on a nonsingular representative."""
    validate_seifert(v)
    a = nonsingular_representative(v)
    if not a:
        return IsometricStructure((), ())
    at = mat_transpose(a)
    q = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(a, at)]
    t = mat_mul(mat_inverse_rational(a), at)
    chk = _congruence(q, t)
    if [list(r) for r in chk] != [list(r) for r in q]:
        raise ArithmeticError("T is not an isometry of Q")
    return IsometricStructure(tuple(tuple(r) for r in q),
                              tuple(tuple(r) for r in t))


def symmetric_factors(delta):
    """Irreducible factorization of Δ tagged by symmetry.

    Returns [(factor, exponent, is_symmetric)], factors canonical.
    Symmetric means λ(t) ≐ t^deg·λ(1/t); the rest occur in pairs
    g(t), g(1/t) and carry no concordance information.
    """
    c = delta.canonical()
    if c.eval(Fraction(1)) == 0 or c.eval(Fraction(-1)) == 0:
        raise ValueError("Alexander polynomial must not vanish at ±1")
    out = []
    for f, mult in c.factor_over_rationals():
        rev = LaurentPoly(0, list(reversed(f.coeffs)))
        out.append((f, mult, bool(f.associate(rev))))
    return out
