"""Alexander polynomial, determinant and exact ω-signatures."""

from fractions import Fraction

from ..algebra.intmatrix import det_bareiss, mat_add, mat_transpose
from ..algebra.laurent import LaurentPoly
from ..knots.seifert import validate_seifert, alexander_from_seifert
from . import profile as _prof

__all__ = ["alexander", "knot_determinant", "signed_determinant",
           "signature", "omega_signature"]


def alexander(v):
    """Canonical Alexander polynomial det(V − tV^T)."""
    validate_seifert(v)
    return alexander_from_seifert(v)


def signed_determinant(v):
    """det(V + V^T) with its sign, = ±Δ(−1)."""
    validate_seifert(v)
    if not v:
        return 1
    return det_bareiss(mat_add(v, mat_transpose(v)))


def knot_determinant(v):
    """The knot determinant |det(V + V^T)| = |Δ(−1)|."""
    return abs(signed_determinant(v))


def signature(v):
    """Ordinary knot signature, σ at ω = −1."""
    validate_seifert(v)
    return _prof._sigma_at_minus_one(v)


def _is_alexander_root(delta, x):
    """Is e^{2πix} a root of Δ?  Exact, via cyclotomic divisibility."""
    n = x.denominator
    if n <= 2:
        return False        # Δ(1) = ±1 and Δ(−1) = ±det are nonzero
    import sympy
    t = sympy.Symbol("t")
    cyc = sympy.Poly(sympy.cyclotomic_poly(n, t), t)
    phi = LaurentPoly(0, [Fraction(int(c))
                          for c in reversed(cyc.all_coeffs())])
    _, rem = delta.canonical().divmod_poly(phi)
    return rem.is_zero()


def omega_signature(v, x):
    """Signature of (1−ω)V + (1−ω̄)V^T at ω = e^{2πix}, x rational.

    Exact for every rational x.  At a root of the Alexander polynomial
    the average of the two one-sided limits is returned (an exact
    rational, possibly odd); elsewhere the value is an even integer.
    """
    validate_seifert(v)
    x = Fraction(x) % 1
    if x == 0 or not v:
        return 0
    y = min(x, 1 - x)
    delta = alexander_from_seifert(v)
    if _is_alexander_root(delta, y):
        half = _prof._half_profile(v)
        for i, ex in enumerate(half.exact_x):
            if ex == y:
                return Fraction(half.arcs[i] + half.arcs[i + 1], 2)
        raise AssertionError("root of Delta not located in the profile")
    if y == Fraction(1, 2):
        return _prof._sigma_at_minus_one(v)
    if delta.span() == 0:
        return 0
    half = _prof._half_profile(v)
    if not half.w_intervals:
        return half.arcs[0]
    # enclose w = 2cos(2πy) tightly enough to land in a single gap
    n = y.denominator
    if n in (3, 4, 6):
        w_exact = {3: Fraction(-1), 4: Fraction(0), 6: Fraction(1)}[n]
        w_lo = w_hi = w_exact
        gap = _locate_rational(w_exact, half)
        return half.arcs[gap]
    dps = 30
    while True:
        w_lo, w_hi = _prof._two_cos_2pi_bounds(y, dps)
        try:
            gap = _prof._locate_gap(w_lo, w_hi, half.w_intervals,
                                    half.trace_poly)
            return half.arcs[gap]
        except _prof.GapUndecided:
            dps *= 2
            if dps > 4000:
                raise ArithmeticError("cannot separate x from the "
                                      "Alexander root set")


def _locate_rational(w, half):
    """Gap index for an exact rational non-root cosine value."""
    ivs = half.w_intervals
    from ..algebra.sturm import refine_interval
    for idx, (lo, hi) in enumerate(ivs):
        while lo < w < hi:
            lo, hi = refine_interval(half.trace_poly, lo, hi, (hi - lo) / 4)
        ivs[idx] = (lo, hi)
    return sum(1 for lo, hi in ivs if lo >= w)
