"""Homology of cyclic branched covers from Seifert matrices.

For the double cover, V + V^T is a presentation matrix of H_1(Σ_2).
For higher covers we present the Alexander module by tV - V^T over
Z[t]/(t^n - 1): the resulting integer matrix is the n×n block circulant
with -V^T on the diagonal and V on the first superdiagonal, and the deck
transformation is the block shift.  Its cokernel has order
|∏_{i<n} Δ(ζ_n^i)| = |H_1(Σ_n)| since Δ(1) = ±1.
"""

from dataclasses import dataclass
from fractions import Fraction

from ..algebra.intmatrix import (mat_add, mat_inverse_rational, mat_transpose,
                                 smith_normal_form)
from ..knots.seifert import validate_seifert

__all__ = ["CoverHomology", "cover_homology"]


def _block_circulant(v, n):
    g = len(v)
    big = [[0] * (g * n) for _ in range(g * n)]
    for blk in range(n):
        for i in range(g):
            for j in range(g):
                big[blk * g + i][blk * g + j] = -v[j][i]
                big[blk * g + i][((blk + 1) % n) * g + j] = v[i][j]
    return big


def _block_shift(g, n):
    s = [[0] * (g * n) for _ in range(g * n)]
    for blk in range(n):
        for i in range(g):
            s[((blk + 1) % n) * g + i][blk * g + i] = 1
    return s


@dataclass(frozen=True)
class CoverHomology:
    """H_1 of the n-fold cyclic branched cover.

    factors: the nontrivial invariant factors (each > 1); together with
    `lifts` (integer lift of each generator into the presentation
    lattice) and `presentation` they let callers transport extra
    structure.  `deck` is the matrix of the deck transformation on the
    generators mod the relations; for n = 2 it is -I.
    """
    n: int
    factors: tuple
    lifts: tuple            # one integer vector per factor
    presentation: tuple     # the presentation matrix used
    deck: tuple             # deck action, square over the generators
    order: int

    @property
    def is_finite(self):
        return all(f != 0 for f in self.factors)


def _inverse_int(u):
    """Inverse of a unimodular integer matrix, as integers."""
    inv = mat_inverse_rational([list(r) for r in u])
    out = []
    for row in inv:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise ArithmeticError("transform is not unimodular")
            r.append(x.numerator)
        out.append(r)
    return out


def cover_homology(v, n):
    """Invariant factors, generator lifts and deck action of H_1(Σ_n)."""
    validate_seifert(v)
    if n < 2:
        raise ValueError("cover degree must be at least 2")
    if not v:
        return CoverHomology(n, (), (), (), (), 1)
    if n == 2:
        pres = mat_add(v, mat_transpose(v))
        pres = [list(r) for r in pres]
        deck_big = [[-int(i == j) for j in range(len(pres))]
                    for i in range(len(pres))]
    else:
        pres = _block_circulant(v, n)
        deck_big = _block_shift(len(v), n)
    snf = smith_normal_form(pres)
    if any(f == 0 for f in snf.factors):
        raise ArithmeticError("branched cover homology is not finite")
    uinv = _inverse_int(snf.u)
    keep = [i for i, f in enumerate(snf.factors) if f != 1]
    factors = tuple(snf.factors[i] for i in keep)
    lifts = tuple(tuple(row[i] for row in uinv) for i in keep)
    # deck action in SNF generator coordinates: U S U^{-1}
    m = len(pres)
    us = [[sum(snf.u[i][k] * deck_big[k][j] for k in range(m))
           for j in range(m)] for i in range(m)]
    usu = [[sum(us[i][k] * uinv[k][j] for k in range(m)) for j in range(m)]
           for i in range(m)]
    deck = tuple(tuple(usu[i][j] % factors[a] if factors[a] else usu[i][j]
                       for b, j in enumerate(keep))
                 for a, i in enumerate(keep))
    order = 1
    for f in factors:
        order *= f
    return CoverHomology(n, factors, lifts, tuple(map(tuple, pres)),
                         deck, order)
