"""Signature jump functions and L² signatures from Seifert matrices.

The ω-signature σ_ω(V) = sign((1−ω)V + (1−ω̄)V^T) is a step function of
ω on the unit circle, jumping only at unit roots of the Alexander
polynomial.  Writing ω = e^{2πix} and w = 2cos(2πx), the unit roots
correspond to real roots of the trace form P(w) with
z^{-g}Δ(z) = P(z + 1/z), so they can be isolated exactly over Q with
Sturm sequences.  On each arc between roots the signature is constant
and is evaluated at a rational value of cos(2πx) via the congruence

    sign H  =  1/2 · sign [[ (1-c)Q, K ], [ K^T, Q/(1+c) ]]

with Q = V+V^T, K = V−V^T, c = cos(2πx), which clears all irrational
entries.  Jump locations are reported as exact rationals when the
corresponding Alexander factor is cyclotomic, and as rigorous rational
bounds otherwise.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import mpmath

from ..algebra.intmatrix import diagonalize_symmetric
from ..algebra.sturm import isolate_roots, refine_interval
from ..knots.seifert import validate_seifert, alexander_from_seifert

__all__ = ["JumpPoint", "SignatureProfile", "jump_function", "l2_signature"]


# -- exact enclosures of trig values -----------------------------------------

def _mpf_frac(v):
    sign, man, exp, bc = v._mpf_
    r = Fraction(man) * Fraction(2) ** exp
    return -r if sign else r


def _two_cos_2pi_bounds(x, dps):
    """Rational bounds on 2cos(2πx) of width about 10^(6-dps)."""
    with mpmath.workdps(dps):
        v = mpmath.cos(2 * mpmath.pi * mpmath.mpf(x.numerator) / x.denominator)
    f = 2 * _mpf_frac(v)
    err = Fraction(1, 10 ** (dps - 6))
    return f - err, f + err


def _x_of_w_bounds(w_lo, w_hi, dps=40):
    """Bounds on x = arccos(w/2)/2π given rational bounds on w."""
    with mpmath.workdps(dps):
        a = mpmath.acos(mpmath.mpf(w_hi.numerator) / w_hi.denominator / 2)
        b = mpmath.acos(mpmath.mpf(w_lo.numerator) / w_lo.denominator / 2)
        x_lo = _mpf_frac(a / (2 * mpmath.pi))
        x_hi = _mpf_frac(b / (2 * mpmath.pi))
    err = Fraction(1, 10 ** (dps - 6))
    return max(Fraction(0), x_lo - err), min(Fraction(1, 2), x_hi + err)


# -- trace form ---------------------------------------------------------------

def trace_form(delta):
    """Coefficients of P(w) with z^{-g}·Δ(z) = P(z + 1/z), low first."""
    c = delta.canonical()
    cs = [Fraction(x) for x in c.coeffs]
    if cs != cs[::-1]:
        raise ValueError("Alexander polynomial is not palindromic")
    if (len(cs) - 1) % 2:
        raise ValueError("Alexander polynomial has odd degree")
    g = (len(cs) - 1) // 2
    # Dickson polynomials: z^k + z^-k = D_k(z + 1/z)
    p = [cs[g]]
    d_prev, d_cur = [Fraction(2)], [Fraction(0), Fraction(1)]
    for k in range(1, g + 1):
        while len(p) < len(d_cur):
            p.append(Fraction(0))
        for i, dc in enumerate(d_cur):
            p[i] += cs[g + k] * dc
        nxt = [Fraction(0)] + d_cur      # D_{k+1} = w·D_k − D_{k−1}
        for i, dc in enumerate(d_prev):
            nxt[i] -= dc
        d_prev, d_cur = d_cur, nxt
    while p and p[-1] == 0:
        p.pop()
    return p


def _arc_sigma(v, c):
    """σ_ω for any ω with cos(2πx) = c rational, Δ(ω) ≠ 0."""
    n = len(v)
    if n == 0:
        return 0
    one_minus_c = 1 - c
    m = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            q = Fraction(v[i][j] + v[j][i])
            k = Fraction(v[i][j] - v[j][i])
            m[i][j] = one_minus_c * q
            m[i][n + j] = k
            m[n + i][j] = -k
            m[n + i][n + j] = q / (1 + c)
    diag, _ = diagonalize_symmetric(m)
    s = sum(1 if d > 0 else -1 for d in diag)
    assert s % 2 == 0
    return s // 2


def _sigma_at_minus_one(v):
    if not v:
        return 0
    q = [[Fraction(v[i][j] + v[j][i]) for j in range(len(v))]
         for i in range(len(v))]
    diag, _ = diagonalize_symmetric(q)
    return sum(1 if d > 0 else -1 for d in diag)


# -- cyclotomic recognition ---------------------------------------------------

def _cyclotomic_order(factor):
    """n with factor = Φ_n, or None.  factor: canonical integer LaurentPoly."""
    import sympy
    d = factor.span()
    if d == 0:
        return None
    coeffs = [int(factor.coeff(e)) for e in range(d + 1)]
    if any(Fraction(x) != factor.coeff(e) for e, x in enumerate(coeffs)):
        return None
    for n in range(3, 2 * d * d + 3):
        if sympy.totient(n) != d:
            continue
        t = sympy.Symbol("t")
        cyc = sympy.Poly(sympy.cyclotomic_poly(n, t), t)
        if [int(x) for x in reversed(cyc.all_coeffs())] == coeffs:
            return n
    return None


# -- the half profile on (0, 1/2) ---------------------------------------------

@dataclass
class _HalfProfile:
    w_intervals: list          # isolating (lo, hi) for w, decreasing in w
    arcs: list                 # k+1 integer arc signatures, x increasing
    exact_x: list              # per interval: exact Fraction x or None
    trace_poly: list


class GapUndecided(Exception):
    """The enclosure of w still straddles a root interval; tighten it."""


def _locate_gap(w_lo, w_hi, ivs, trace_poly):
    """Index of the gap (in x order) containing a non-root w enclosed
    in (w_lo, w_hi); refines the isolating intervals as needed."""
    width_cap = (w_hi - w_lo) / 4
    while True:
        clear = True
        for idx, (lo, hi) in enumerate(ivs):
            if hi <= w_lo or lo >= w_hi:
                continue
            if hi - lo <= width_cap:
                raise GapUndecided
            ivs[idx] = refine_interval(trace_poly, lo, hi, (hi - lo) / 4)
            clear = False
        if clear:
            break
    return sum(1 for lo, hi in ivs if lo >= w_hi)


def _half_profile(v):
    validate_seifert(v)
    delta = alexander_from_seifert(v)
    if delta.span() == 0:
        return _HalfProfile([], [0], [], [])
    p = trace_form(delta)
    roots = isolate_roots(p, Fraction(-2), Fraction(2))
    # pull interval endpoints off w = ±2 so gap samples stay interior
    for i, (lo, hi) in enumerate(roots):
        while lo <= -2 or hi >= 2:
            lo, hi = refine_interval(p, lo, hi, (hi - lo) / 4)
        roots[i] = (lo, hi)
    ivs = list(reversed(roots))          # decreasing w == increasing x
    k = len(ivs)
    # one rational sample cosine per gap
    samples = []
    for i in range(k + 1):
        upper = Fraction(2) if i == 0 else ivs[i - 1][0]
        lower = Fraction(-2) if i == k else ivs[i][1]
        samples.append((upper + lower) / 2)
    arcs = [_arc_sigma(v, w / 2) for w in samples]
    if arcs[0] != 0:
        raise AssertionError("signature near omega=1 must vanish")
    # exact jump locations from cyclotomic Alexander factors
    exact = [None] * k
    for factor, _mult in delta.factor_over_rationals():
        n = _cyclotomic_order(factor)
        if n is None:
            continue
        from math import gcd
        for j in range(1, n // 2 + (n % 2)):
            if gcd(j, n) != 1:
                continue
            x = Fraction(j, n)
            if x >= Fraction(1, 2):
                continue
            idx = _locate_exact(x, ivs, p)
            if exact[idx] is not None and exact[idx] != x:
                raise AssertionError("two roots in one isolating interval")
            exact[idx] = x
    return _HalfProfile(ivs, arcs, exact, p)


def _locate_exact(x, ivs, trace_poly):
    """Which isolating interval holds w = 2cos(2πx) (a known root)."""
    dps = 30
    while True:
        w_lo, w_hi = _two_cos_2pi_bounds(x, dps)
        for idx, (lo, hi) in enumerate(ivs):
            if lo < w_lo and w_hi < hi:
                return idx
        dps *= 2
        if dps > 2000:
            raise ArithmeticError("could not match root to interval")


# -- public profile -----------------------------------------------------------

@dataclass(frozen=True)
class JumpPoint:
    """A jump of the ω-signature at x in (0,1), ω = e^{2πix}."""
    x: Optional[Fraction]      # exact when the root angle is rational
    x_lo: Fraction             # rigorous bounds, always set
    x_hi: Fraction
    jump: int                  # j_K(x): half the change in σ_ω
    sigma: Fraction            # σ_ω at the root (average of the sides)

    def location(self):
        return self.x if self.x is not None else (self.x_lo + self.x_hi) / 2


@dataclass(frozen=True)
class SignatureProfile:
    """Step-function profile of σ_ω over x in (0,1)."""
    jumps: Tuple[JumpPoint, ...]
    arcs: Tuple[int, ...]      # len(jumps)+1 values, left to right

    @property
    def is_exact(self):
        return all(j.x is not None for j in self.jumps)

    def check(self):
        assert len(self.arcs) == len(self.jumps) + 1
        assert self.arcs[0] == 0 and self.arcs[-1] == 0
        run = 0
        for jp, arc in zip(self.jumps, self.arcs[1:]):
            run += jp.jump
            assert arc == 2 * run
        return True


def jump_function(v):
    """Full signature profile of the Seifert matrix v."""
    half = _half_profile(v)
    k = len(half.w_intervals)
    pts = []
    for i in range(k):
        lo, hi = half.w_intervals[i]
        ex = half.exact_x[i]
        if ex is not None:
            x_lo = x_hi = ex
        else:
            x_lo, x_hi = _x_of_w_bounds(lo, hi)
        change = half.arcs[i + 1] - half.arcs[i]
        pts.append(JumpPoint(ex, x_lo, x_hi, change // 2,
                             Fraction(half.arcs[i] + half.arcs[i + 1], 2)))
    mirrored = [JumpPoint(None if p.x is None else 1 - p.x,
                          1 - p.x_hi, 1 - p.x_lo, -p.jump, p.sigma)
                for p in reversed(pts)]
    arcs = tuple(half.arcs + half.arcs[-2::-1])
    prof = SignatureProfile(tuple(pts + mirrored), arcs)
    prof.check()
    return prof


def l2_signature(v):
    """∫_0^1 σ_ω dx as an exact rational.

    Requires every unit Alexander root to lie at a root of unity; with a
    root at an irrational angle the integral is irrational and we refuse
    rather than approximate.
    """
    prof = jump_function(v)
    if not prof.is_exact:
        raise ValueError("L2 signature is irrational: Alexander roots at "
                         "non-rational angles on the unit circle")
    xs = [Fraction(0)] + [j.x for j in prof.jumps] + [Fraction(1)]
    total = Fraction(0)
    for i, arc in enumerate(prof.arcs):
        total += arc * (xs[i + 1] - xs[i])
    return total
