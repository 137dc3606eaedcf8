"""Twisted Alexander polynomial of the trivial character.

For the trivial character on H_1 of the p-fold branched cover, the
twisted polynomial collapses to a product of Galois twists of the
ordinary Alexander polynomial,

    prod_{i=0}^{p-1} Delta(zeta_p^i s)   with   t = s^p,

which lies in Q[t, t^{-1}] even though the factors do not.
"""

from fractions import Fraction

from ..algebra.cyclotomic import CyclotomicElem
from ..algebra.laurent import LaurentPoly


def trivial_twisted(delta, p):
    """prod_i Delta(zeta_p^i t^(1/p)) as a rational LaurentPoly.

    For p = 2 this is Delta(s) * Delta(-s) with t = s^2.
    """
    if delta.is_zero():
        return LaurentPoly.zero()
    if delta.is_cyclotomic():
        raise ValueError("expected rational coefficients")
    prod = LaurentPoly.constant(CyclotomicElem.rational(p, 1))
    for i in range(p):
        factor = LaurentPoly.from_dict(
            {e: CyclotomicElem.zeta(p, (i * e) % p)
             * CyclotomicElem.rational(p, c)
             for e, c in delta.items()})
        prod = prod * factor
    out = {}
    for e, c in prod.items():
        # invariance under s -> zeta_p s kills all other exponents
        if e % p:
            raise ArithmeticError("product not invariant; bad input")
        if not c.is_rational():
            raise ArithmeticError("product has irrational coefficient")
        out[e // p] = c.rational_value()
    return LaurentPoly.from_dict(out)
