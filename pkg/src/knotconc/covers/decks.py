"""Deck-transformation action on the q-torsion of H_1(Σ_p).

The deck transformation acts on H_1(Σ_p; Z_q) with eigenvalues among
the elements of order p in Z_q*; when Δ has a simple pair of roots
a, a^{-1} mod q of order p the action splits into the two eigenspaces,
which constrains invariant metabolisers.
"""

from dataclasses import dataclass

from ..abelian.core import alexander
from .homology import cover_homology

__all__ = ["DeckEigenspaces", "deck_eigenspaces", "deck_matrix_mod_q"]


@dataclass(frozen=True)
class DeckEigenspaces:
    """Eigenvalues of the deck action on H_1(Σ_p; Z_q).

    `split` is True when the eigenvalues form a pair {a, a^{-1} mod q}
    of order p; eigenvalues are sorted.
    """
    p: int
    q: int
    eigenvalues: tuple
    split: bool


def _order_mod(a, q):
    k, x = 1, a % q
    while x != 1:
        x = (x * a) % q
        k += 1
        if k > q:
            raise ArithmeticError("element not invertible mod q")
    return k


def deck_eigenspaces(v, p, q):
    """Deck eigenvalues on H_1(Σ_p; Z_q) via Alexander roots mod q.

    H_1(Σ_p; Z_q) decomposes over the t^p = 1 action; the eigenvalues
    that occur are the a of order p in Z_q* with Δ(a) ≡ 0 mod q.
    """
    if q < 3 or p < 2:
        raise ValueError("need p >= 2 and q >= 3")
    delta = alexander(v)
    eigs = []
    for a in range(1, q):
        if pow(a, p, q) != 1 or _order_mod(a, q) != p:
            continue
        val = 0
        for e, c in delta.items():
            if c.denominator != 1:
                raise ArithmeticError("Alexander polynomial not integral")
            val += c.numerator * pow(a, e % p, q)
        if val % q == 0:
            eigs.append(a)
    eigs.sort()
    split = (len(eigs) == 2 and (eigs[0] * eigs[1]) % q == 1
             and eigs[0] != eigs[1])
    return DeckEigenspaces(p, q, tuple(eigs), split)


def deck_matrix_mod_q(v, p, q):
    """Matrix of the deck action on the Z_q-vector space H_1(Σ_p) ⊗ Z_q.

    Only the invariant factors exactly divisible by q contribute a
    Z_q summand we can normalise; a factor divisible by q² is refused.
    """
    hom = cover_homology(v, p)
    idx = []
    mults = []
    for i, f in enumerate(hom.factors):
        if f % q == 0:
            if (f // q) % q == 0:
                raise ArithmeticError(
                    "q^2 divides an invariant factor; q-part is not "
                    "a vector space over Z_q")
            idx.append(i)
            mults.append(f // q)
    # generator h_i = (f_i/q)·g_i has order q; deck(g) has matrix M over
    # the g's, so deck(h_i) = Σ_j M[j][i]·(m_i/m_j)·h_j mod q.
    mat = []
    for a, j in enumerate(idx):
        row = []
        for b, i in enumerate(idx):
            entry = hom.deck[j][i] * mults[b] * pow(mults[a], -1, q)
            row.append(entry % q)
        mat.append(tuple(row))
    return tuple(mat)
