"""Torus-knot signature machinery and twisted-double obstructions."""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from ..knots.braid import seifert_matrix_from_braid
from ..knots.seifert import validate_seifert

__all__ = ["TorusKnot", "torus_seifert_matrix", "torus_jump", "torus_l2",
           "twisted_double_obstruction", "TwistedDoubleVerdict",
           "twist_knot_matrix"]


@dataclass(frozen=True)
class TorusKnot:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1 or gcd(self.p, self.q) != 1:
            raise ValueError("torus knot needs coprime positive p, q")


def torus_seifert_matrix(t):
    """Seifert matrix of T(p,q) from its positive braid closure."""
    word = list(range(1, t.p)) * t.q
    v = seifert_matrix_from_braid(word)
    validate_seifert(v)
    return v


def torus_jump(t, n):
    """Jump j(n) of the T(p,q) signature function at x = n/pq.

    Zero when p or q divides n; otherwise +1 exactly when
    n = iq + jp has a solution with 0 < i < p, 0 < j < q.
    """
    p, q = t.p, t.q
    if not 1 <= n <= p * q - 1:
        raise ValueError("n must lie in 1..pq-1")
    if n % p == 0 or n % q == 0:
        return 0
    for i in range(1, p):
        j, r = divmod(n - i * q, p)
        if r == 0 and 0 < j < q:
            return 1
    return -1


def torus_l2(t):
    """∫ σ_ω for T(p,q): −(p−1)(p+1)(q−1)(q+1)/(3pq).

    Also recomputed as the integral of the jump staircase; the two must
    agree exactly.
    """
    p, q = t.p, t.q
    closed = -Fraction((p - 1) * (p + 1) * (q - 1) * (q + 1), 3 * p * q)
    run = 0
    total = Fraction(0)
    for n in range(1, p * q):
        run += 2 * torus_jump(t, n)
        total += Fraction(run, p * q)
    if total != closed:
        raise ArithmeticError("torus L2: jump sum disagrees with the "
                              "closed form")
    return closed


def twist_knot_matrix(n):
    """Genus-one Seifert matrix [[−1,1],[0,n]] of the n-twist knot."""
    return [[-1, 1], [0, n]]


@dataclass(frozen=True)
class TwistedDoubleVerdict:
    n: int
    algebraically_slice: bool     # is n of the form m(m+1)?
    m: int                        # meaningful only when algebraically_slice
    required_l2: Fraction         # L2 the companion must have, ditto
    slice_possible: bool
    reason: str


def twisted_double_obstruction(n, l2_of_companion):
    """Sliceness obstruction for the n-twisted double with the given
    companion L² signature.

    The double can be slice only if n = m(m+1) (equivalently 4n+1 is an
    odd square) and the companion's integrated signature equals
    (m−1)(m+2)/3, the negative of the T(m,m+1) value.
    """
    l2 = Fraction(l2_of_companion)
    if n == 0:
        return TwistedDoubleVerdict(0, True, 0, Fraction(0), True,
                                    "trivial Alexander polynomial")
    s = 4 * n + 1
    if s < 0 or isqrt(s) ** 2 != s:
        return TwistedDoubleVerdict(
            n, False, 0, Fraction(0), False,
            "4n+1 is not a square, so the double is not algebraically "
            "slice")
    m = (isqrt(s) - 1) // 2
    required = Fraction((m - 1) * (m + 2), 3)
    if l2 == required:
        return TwistedDoubleVerdict(
            n, True, m, required, True,
            "n = %d·%d and the companion L2 signature matches %s"
            % (m, m + 1, required))
    return TwistedDoubleVerdict(
        n, True, m, required, False,
        "companion L2 signature is %s but sliceness requires %s"
        % (l2, required))
