"""Laurent polynomials in one variable t.

Coefficients are Fraction or CyclotomicElem (one domain per polynomial).
A polynomial is stored as (low, coeffs) with coeffs[i] the coefficient of
t^(low+i); coeffs[0] and coeffs[-1] are nonzero unless the polynomial is 0.

Two Laurent polynomials are *associate* when they differ by a unit
c * t^k; most invariants here are only defined up to associates, so
`canonical()` picks a distinguished representative:

  * lowest exponent shifted to 0,
  * over Q: integer coefficients with content 1, leading sign positive
    (positive coefficient of the highest power),
  * over Q(zeta_q): scaled so the top coefficient's first nonzero
    coordinate is positive and coordinates are integral with content 1.
"""

from fractions import Fraction
from math import gcd, lcm

from .cyclotomic import CyclotomicElem


def _is_zero_coeff(c):
    if isinstance(c, CyclotomicElem):
        return c.is_zero()
    return c == 0


class LaurentPoly:
    __slots__ = ("low", "coeffs")

    def __init__(self, low, coeffs):
        cs = list(coeffs)
        while cs and _is_zero_coeff(cs[-1]):
            cs.pop()
        while cs and _is_zero_coeff(cs[0]):
            cs.pop(0)
            low += 1
        if not cs:
            low = 0
        self.low = low
        self.coeffs = tuple(cs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls):
        return cls(0, [])

    @classmethod
    def from_dict(cls, d):
        """Build from {exponent: coefficient}."""
        if not d:
            return cls.zero()
        lo = min(d)
        hi = max(d)
        zero = _zero_like(next(iter(d.values())))
        cs = [d.get(e, zero) for e in range(lo, hi + 1)]
        return cls(lo, cs)

    @classmethod
    def from_int_coeffs(cls, coeffs, low=0):
        return cls(low, [Fraction(c) for c in coeffs])

    @classmethod
    def t(cls, power=1, one=Fraction(1)):
        return cls(power, [one])

    @classmethod
    def constant(cls, c):
        return cls(0, [c if isinstance(c, CyclotomicElem) else Fraction(c)])

    # -- structure ---------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    @property
    def high(self):
        return self.low + len(self.coeffs) - 1

    def span(self):
        """Degree width: high - low (the degree of the shifted polynomial)."""
        return len(self.coeffs) - 1 if self.coeffs else -1

    def coeff(self, e):
        i = e - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self._zero_c()

    def _zero_c(self):
        if self.coeffs and isinstance(self.coeffs[0], CyclotomicElem):
            return CyclotomicElem.rational(self.coeffs[0].q, 0)
        return Fraction(0)

    def items(self):
        for i, c in enumerate(self.coeffs):
            if not _is_zero_coeff(c):
                yield self.low + i, c

    def is_cyclotomic(self):
        return bool(self.coeffs) and isinstance(self.coeffs[0], CyclotomicElem)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other, self)
        if other is NotImplemented:
            return NotImplemented
        d = dict(self.items())
        for e, c in other.items():
            d[e] = d.get(e, 0) + c if e in d else c
        return LaurentPoly.from_dict({e: c for e, c in d.items()})

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.low, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = _coerce_poly(other, self)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce_poly(other, self)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        n = len(self.coeffs) + len(other.coeffs) - 1
        zero = self._zero_c() if self.coeffs else other._zero_c()
        out = [zero] * n
        for i, a in enumerate(self.coeffs):
            if _is_zero_coeff(a):
                continue
            for j, b in enumerate(other.coeffs):
                if not _is_zero_coeff(b):
                    out[i + j] = out[i + j] + a * b
        return LaurentPoly(self.low + other.low, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers only for monomials")
        acc = LaurentPoly.constant(
            CyclotomicElem.rational(self.coeffs[0].q, 1) if self.is_cyclotomic()
            else Fraction(1))
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other) if other != 0 else LaurentPoly.zero()
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.low, self.coeffs))

    # -- evaluation and substitution --------------------------------------------

    def eval(self, x):
        """Evaluate at x (Fraction, int, or CyclotomicElem); x must be invertible
        if low < 0."""
        if self.is_zero():
            return Fraction(0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        if self.low > 0:
            acc = acc * (x ** self.low)
        elif self.low < 0:
            if isinstance(x, CyclotomicElem):
                acc = acc * (x.inverse() ** (-self.low))
            else:
                acc = acc * (Fraction(1) / Fraction(x)) ** (-self.low)
        return acc

    def substitute_power(self, k):
        """t -> t^k (k a nonzero integer)."""
        return LaurentPoly.from_dict({e * k: c for e, c in self.items()})

    def involution(self):
        """The map t -> t^(-1), with complex conjugation on cyclotomic
        coefficients."""
        if self.is_cyclotomic():
            return LaurentPoly.from_dict({-e: c.conj() for e, c in self.items()})
        return LaurentPoly.from_dict({-e: c for e, c in self.items()})

    def galois(self, n):
        """Apply w -> w^n coefficientwise (cyclotomic coefficients only)."""
        if not self.is_cyclotomic():
            return self
        return LaurentPoly(self.low, [c.galois(n) for c in self.coeffs])

    def map_coeffs(self, f):
        return LaurentPoly.from_dict({e: f(c) for e, c in self.items()})

    # -- division -----------------------------------------------------------

    def divmod_poly(self, other):
        """Division with remainder after shifting both to low = 0."""
        if other.is_zero():
            raise ZeroDivisionError
        a = list(self.coeffs)
        b = list(other.coeffs)
        one_over = (b[-1].inverse() if isinstance(b[-1], CyclotomicElem)
                    else 1 / b[-1])
        quo = {}
        while len(a) >= len(b):
            c = a[-1] * one_over
            k = len(a) - len(b)
            quo[k] = c
            for i, y in enumerate(b):
                a[k + i] = a[k + i] - c * y
            while a and _is_zero_coeff(a[-1]):
                a.pop()
        q = LaurentPoly.from_dict(quo)
        r = LaurentPoly(0, a)
        return q, r

    def exact_divide(self, other):
        """Quotient self/other up to the t-power shift; raises if inexact."""
        q, r = self.divmod_poly(other)
        if not r.is_zero():
            raise ValueError("inexact division")
        shift = self.low - other.low
        return LaurentPoly(q.low + shift, q.coeffs)

    # -- canonical form -------------------------------------------------------

    def canonical(self):
        """Distinguished associate (see module docstring)."""
        if self.is_zero():
            return self
        cs = list(self.coeffs)
        if self.is_cyclotomic():
            q = cs[0].q
            denoms = lcm(*[c.denominator_lcm() for c in cs])
            cs = [c * denoms for c in cs]
            nums = [abs(x.numerator) for c in cs for x in c.coeffs if x != 0]
            g = 0
            for v in nums:
                g = gcd(g, v)
            if g > 1:
                cs = [c * Fraction(1, g) for c in cs]
            lead = cs[-1]
            first = next((x for x in lead.coeffs if x != 0), Fraction(1))
            if first < 0:
                cs = [-c for c in cs]
        else:
            denoms = lcm(*[Fraction(c).denominator for c in cs])
            cs = [Fraction(c) * denoms for c in cs]
            g = 0
            for c in cs:
                g = gcd(g, abs(c.numerator))
            if g > 1:
                cs = [c / g for c in cs]
            if cs[-1] < 0:
                cs = [-c for c in cs]
        return LaurentPoly(0, cs)

    def associate(self, other):
        """True if the two polynomials agree up to a unit c * t^k."""
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.is_cyclotomic() != other.is_cyclotomic():
            # coerce the rational side into the other's cyclotomic field
            cyc = self if self.is_cyclotomic() else other
            rat = other if self.is_cyclotomic() else self
            q = cyc.coeffs[0].q
            lifted = LaurentPoly(rat.low,
                                 [CyclotomicElem.rational(q, c)
                                  for c in rat.coeffs])
            return cyc.associate(lifted)
        if self.is_cyclotomic():
            if len(self.coeffs) != len(other.coeffs):
                return False
            # allow any nonzero field constant, not just rationals
            ratio = other.coeffs[-1] * self.coeffs[-1].inverse()
            return all((a * ratio) == b for a, b in zip(self.coeffs, other.coeffs))
        return self.canonical() == other.canonical()

    # -- rational factorization ---------------------------------------------

    def factor_over_rationals(self):
        """Irreducible factorization over Q of the canonical representative.

        Returns a list of (LaurentPoly, multiplicity); t-power units are
        dropped.  Cyclotomic-coefficient polynomials are rejected.
        """
        if self.is_cyclotomic():
            raise ValueError("rational factorization needs Q coefficients")
        if self.is_zero():
            raise ValueError("cannot factor zero")
        import sympy
        t = sympy.Symbol("t")
        c = self.canonical()
        expr = sum(sympy.Integer(x.numerator) * t ** e for e, x in c.items())
        _, factors = sympy.factor_list(sympy.Poly(expr, t))
        out = []
        for f, mult in factors:
            poly = sympy.Poly(f, t)
            cs = [Fraction(int(x)) for x in reversed(poly.all_coeffs())]
            lp = LaurentPoly(0, cs)
            if lp.span() == 0:
                continue
            out.append((lp.canonical(), int(mult)))
        out.sort(key=lambda fm: (fm[0].span(), fm[0].coeffs))
        return out

    def derivative(self):
        return LaurentPoly.from_dict(
            {e - 1: c * e for e, c in self.items() if e != 0})

    def content_free_int_coeffs(self):
        """Canonical integer coefficient list (low-to-high), content 1."""
        c = self.canonical()
        return [int(x) for x in c.coeffs]

    def __repr__(self):
        if self.is_zero():
            return "LaurentPoly(0)"
        terms = []
        for e, c in self.items():
            cc = repr(c) if isinstance(c, CyclotomicElem) else str(c)
            if e == 0:
                terms.append(cc)
            elif e == 1:
                terms.append("(%s)*t" % cc)
            else:
                terms.append("(%s)*t^%d" % (cc, e))
        return "LaurentPoly(%s)" % " + ".join(terms)


def _zero_like(c):
    if isinstance(c, CyclotomicElem):
        return CyclotomicElem.rational(c.q, 0)
    return Fraction(0)


def _coerce_poly(other, like):
    if isinstance(other, LaurentPoly):
        return other
    if isinstance(other, (int, Fraction)):
        if other == 0:
            return LaurentPoly.zero()
        if like.is_cyclotomic():
            return LaurentPoly.constant(
                CyclotomicElem.rational(like.coeffs[0].q, other))
        return LaurentPoly.constant(other)
    if isinstance(other, CyclotomicElem):
        return LaurentPoly.constant(other)
    return NotImplemented


def discriminant(poly):
    """Discriminant of a Q-coefficient polynomial (shifted to low = 0)."""
    import sympy
    t = sympy.Symbol("t")
    c = poly.canonical()
    expr = sum(sympy.Integer(x.numerator) * t ** e for e, x in c.items())
    return Fraction(sympy.discriminant(expr, t))


def resultant(a, b):
    """Resultant of two Q-coefficient polynomials (lows shifted to 0)."""
    import sympy
    t = sympy.Symbol("t")

    def to_expr(p):
        c = p.canonical()
        return sum(sympy.Rational(x) * t ** e for e, x in c.items())

    return Fraction(sympy.resultant(to_expr(a), to_expr(b), t))
