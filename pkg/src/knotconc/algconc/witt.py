"""Witt groups of F_p and Q_p, Hilbert symbols, Hasse invariants.

Everything works on diagonalizations over Q produced by congruence;
entries are reduced to square-free integers before any local analysis.
"""

from dataclasses import dataclass
from fractions import Fraction

import sympy

from ..algebra.intmatrix import diagonalize_symmetric

__all__ = ["hilbert_symbol", "hasse_invariant", "WittClassFp",
           "witt_class_fp_of_diagonal", "wq2_image", "squarefree_diagonal"]


def _squarefree_int(x):
    """The square-free integer representing x modulo rational squares."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero entry in a nondegenerate form")
    n = x.numerator * x.denominator
    sign = -1 if n < 0 else 1
    out = sign
    for p, e in sympy.factorint(abs(n)).items():
        if e % 2:
            out *= p
    return out


def squarefree_diagonal(sym):
    """Diagonalize a symmetric rational matrix; square-free int entries."""
    if not sym:
        return []
    diag, _ = diagonalize_symmetric(sym)
    return [_squarefree_int(d) for d in diag]


# -- Hilbert symbols ----------------------------------------------------------

def _split(x, p):
    """x = p^a * u with u a p-adic unit; returns (a, u) for rational x."""
    x = Fraction(x)
    a = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        a += 1
    while den % p == 0:
        den //= p
        a -= 1
    return a, Fraction(num, den)


def _legendre_unit(u, p):
    """Legendre symbol of a rational p-adic unit mod p."""
    r = (u.numerator * pow(u.denominator, -1, p)) % p
    return int(sympy.jacobi_symbol(r, p))


def hilbert_symbol(a, b, p):
    """(a,b)_p over Q_p, or over R when p == "real"."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if p == "real":
        return -1 if (a < 0 and b < 0) else 1
    if p == 2:
        alpha, u = _split(a, 2)
        beta, v = _split(b, 2)
        def eps(n):
            # (n-1)/2 mod 2 for an odd rational unit n
            r = (n.numerator * pow(n.denominator, -1, 8)) % 8
            return ((r - 1) // 2) % 2
        def om(n):
            r = (n.numerator * pow(n.denominator, -1, 8)) % 8
            return ((r * r - 1) // 8) % 2
        e = eps(u) * eps(v) + alpha * om(v) + beta * om(u)
        return -1 if e % 2 else 1
    alpha, u = _split(a, p)
    beta, v = _split(b, p)
    e = alpha * beta * ((p - 1) // 2)
    s = (-1) ** (e % 2)
    if beta % 2:
        s *= _legendre_unit(u, p)
    if alpha % 2:
        s *= _legendre_unit(v, p)
    return s


def hasse_invariant(diag, p):
    """S(α) = ∏_{i<j} (d_i, d_j)_p for a diagonalized form."""
    s = 1
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            s *= hilbert_symbol(diag[i], diag[j], p)
    return s


# -- W(F_p) -------------------------------------------------------------------

@dataclass(frozen=True)
class WittClassFp:
    """An element of W(F_p) for odd p.

    For p ≡ 3 mod 4 the group is Z_4 and `value` is the count of
    square-class-[1] entries minus nonsquare entries, mod 4.  For
    p ≡ 1 mod 4 it is Z_2⊕Z_2 and `value` is (rank mod 2,
    0 if the discriminant is a square else 1).
    """
    p: int
    value: object

    @property
    def is_zero(self):
        if self.p % 4 == 3:
            return self.value == 0
        return self.value == (0, 0)

    def __add__(self, other):
        if not isinstance(other, WittClassFp) or other.p != self.p:
            return NotImplemented
        if self.p % 4 == 3:
            return WittClassFp(self.p, (self.value + other.value) % 4)
        return WittClassFp(self.p, ((self.value[0] + other.value[0]) % 2,
                                    (self.value[1] + other.value[1]) % 2))

    def __neg__(self):
        if self.p % 4 == 3:
            return WittClassFp(self.p, (-self.value) % 4)
        return self


def witt_class_fp_of_residues(residues, p):
    """Class in W(F_p) of the diagonal form over F_p given by residues."""
    residues = [r % p for r in residues]
    if any(r == 0 for r in residues):
        raise ValueError("degenerate form over F_p")
    if p % 4 == 3:
        val = sum(1 if sympy.jacobi_symbol(r, p) == 1 else -1
                  for r in residues)
        return WittClassFp(p, val % 4)
    rank = len(residues) % 2
    disc = 1
    for r in residues:
        disc = (disc * r) % p
    nonsq = 0 if (not residues or sympy.jacobi_symbol(disc, p) == 1) else 1
    return WittClassFp(p, (rank, nonsq))


def witt_class_fp_of_diagonal(diag, p):
    """∂_p of a square-free-integer diagonal form: keep the entries
    divisible by p, divide them by p, and read the result in W(F_p)."""
    if p == 2 or p % 2 == 0:
        raise ValueError("odd primes only")
    residues = [d // p for d in diag if d % p == 0]
    return witt_class_fp_of_residues(residues, p)


# -- W(Q_2) zero test ----------------------------------------------------------

def _q2_square_class(x):
    """Class of x in Q_2*/(Q_2*)^2, named in {±1, ±2, ±5, ±10}."""
    a, u = _split(Fraction(x), 2)
    r = (u.numerator * pow(u.denominator, -1, 8)) % 8
    unit = {1: 1, 3: -5, 5: 5, 7: -1}[r]
    return unit * (2 if a % 2 else 1)


def wq2_image(diag):
    """Invariant triple of a form in W(Q_2) and its zero test.

    Returns (rank mod 2, det square class, Hasse at 2, is_zero).  The
    triple determines the class in W(Q_2) ≅ Z_8⊕Z_2⊕Z_2; the class is
    zero exactly when it matches a sum of hyperbolic planes.
    """
    n = len(diag)
    if n == 0:
        return (0, 1, 1, True)
    det = Fraction(1)
    for d in diag:
        det *= Fraction(d)
    rank2 = n % 2
    detc = _q2_square_class(det)
    hasse = hasse_invariant(diag, 2)
    if rank2:
        return (rank2, detc, hasse, False)
    r = n // 2
    det_h = _q2_square_class((-1) ** r)
    hasse_h = hasse_invariant([1, -1] * r, 2)
    return (rank2, detc, hasse, detc == det_h and hasse == hasse_h)
