"""Factorization and norm testing over Q(zeta_q)[t, t^-1].

The factorization is the classical norm trick: push f down to Q[t] via the
field norm N(f) = prod of Galois conjugates, factor there, and pull each
rational irreducible factor back up with a gcd.  When N(f) is not
squarefree the substitution t -> t - s*zeta is applied first.

The norm has degree (q-1)*deg(f), which is hopeless for large conductors,
so everything takes a degree cap and reports None ("undecided") instead of
grinding; callers fall back to cheaper structural arguments.
"""

from fractions import Fraction

from .cyclotomic import CyclotomicElem
from .laurent import LaurentPoly

DEFAULT_NORM_DEGREE_CAP = 128


def _one(q):
    return CyclotomicElem.rational(q, 1)


def to_cyclotomic_poly(f, q):
    """Coerce a Q-coefficient Laurent polynomial into Q(zeta_q)[t^+-]."""
    if f.is_cyclotomic():
        if f.coeffs[0].q != q:
            raise ValueError("conductor mismatch")
        return f
    return LaurentPoly.from_dict(
        {e: CyclotomicElem.rational(q, c) for e, c in f.items()})


def poly_gcd_field(a, b):
    """Monic gcd in Q(zeta_q)[t] (lows shifted to 0)."""
    a = LaurentPoly(0, a.coeffs)
    b = LaurentPoly(0, b.coeffs)
    while not b.is_zero():
        _, r = a.divmod_poly(b)
        a, b = b, LaurentPoly(0, r.coeffs)
    if a.is_zero():
        return a
    lead_inv = a.coeffs[-1].inverse() if isinstance(a.coeffs[-1], CyclotomicElem) \
        else 1 / a.coeffs[-1]
    return LaurentPoly(0, [c * lead_inv for c in a.coeffs])


def norm_to_rationals(f):
    """Field norm of f down to Q[t]: the product over all conjugates."""
    q = f.coeffs[0].q
    acc = f
    for n in range(2, q):
        acc = acc * f.galois(n)
    # every coefficient must now be rational
    return LaurentPoly.from_dict({e: c.rational_value() for e, c in acc.items()})


def _squarefree_over_q(g):
    from .laurent import discriminant
    return discriminant(g) != 0


def _shift(f, q, s):
    """t -> t + s*zeta applied to a cyclotomic-coefficient polynomial."""
    zeta_s = CyclotomicElem.zeta(q) * s
    t_plus = LaurentPoly(0, [zeta_s, _one(q)])
    acc = LaurentPoly.zero()
    power = LaurentPoly.constant(_one(q))
    for c in (f.coeffs or []):
        acc = acc + power * c
        power = power * t_plus
    return acc


def factor_over_cyclotomic(f, q, cap=DEFAULT_NORM_DEGREE_CAP):
    """Irreducible factorization of f over Q(zeta_q).

    Returns a list of (monic LaurentPoly over Q(zeta_q), multiplicity), or
    None when the norm degree exceeds the cap (undecided).  t-power units
    are dropped; the unit part is not returned.
    """
    f = to_cyclotomic_poly(f, q)
    if f.is_zero():
        raise ValueError("cannot factor zero")
    f = LaurentPoly(0, f.coeffs)
    if f.span() == 0:
        return []
    if (q - 1) * f.span() > cap:
        return None

    # factor the squarefree part, then count multiplicity of each
    # irreducible by trial division of the original
    d = f.derivative()
    g = poly_gcd_field(f, LaurentPoly(0, d.coeffs))
    sqfree = f.exact_divide(g) if g.span() > 0 else f
    irreducibles = _factor_squarefree(sqfree, q)
    if irreducibles is None:
        return None
    result = []
    rem = f
    for p in irreducibles:
        mult = 0
        while True:
            try:
                rem2 = rem.exact_divide(p)
            except ValueError:
                break
            rem = rem2
            mult += 1
        result.append((p, mult))
    return result


def _factor_squarefree(f, q, max_shift=20):
    """Factor a squarefree monic polynomial over Q(zeta_q) (Trager)."""
    if f.span() == 0:
        return []
    lead_inv = f.coeffs[-1].inverse()
    f = LaurentPoly(0, [c * lead_inv for c in f.coeffs])
    for s in range(max_shift + 1):
        shifted = _shift(f, q, s) if s else f
        norm = norm_to_rationals(shifted)
        if _squarefree_over_q(norm):
            rational_factors = norm.factor_over_rationals()
            out = []
            for gq, _ in rational_factors:
                gcyc = to_cyclotomic_poly(gq, q)
                p_shift = poly_gcd_field(shifted, gcyc)
                if p_shift.span() <= 0:
                    continue
                p = _shift(p_shift, q, -s) if s else p_shift
                li = p.coeffs[-1].inverse()
                p = LaurentPoly(0, [c * li for c in p.coeffs])
                out.append(p)
            return out
    raise RuntimeError("no squarefree shift found")


def involution_fixed(p, q):
    """Whether p is associate to its image under t -> 1/t with conjugated
    coefficients."""
    return p.associate(p.involution())


def is_norm(f, q, cap=DEFAULT_NORM_DEGREE_CAP):
    """Decide whether f(t) = a * t^k * g(t) * conj(g)(1/t) for some g.

    True / False, or None when factorization over Q(zeta_q) is out of reach
    under the degree cap.  Unit factors a in Q(zeta_q)^* are disregarded.
    """
    f = to_cyclotomic_poly(f, q)
    if f.is_zero():
        raise ValueError("zero is not classified")
    if f.span() == 0:
        return True
    if f.span() % 2:
        return False
    factors = factor_over_cyclotomic(f, q, cap=cap)
    if factors is None:
        return None
    remaining = {i: (p, m) for i, (p, m) in enumerate(factors)}
    while remaining:
        i, (p, m) = next(iter(remaining.items()))
        del remaining[i]
        pbar = p.involution()
        if p.associate(pbar):
            if m % 2:
                return False
            continue
        mate = None
        for j, (p2, m2) in remaining.items():
            if p2.associate(pbar):
                mate = j
                break
        if mate is None or remaining[mate][1] != m:
            return False
        del remaining[mate]
    return True
