"""Exact arithmetic in Q(zeta_q) for prime q.

Elements are stored on the power basis 1, w, ..., w^(q-2) where w = zeta_q,
with Fraction coordinates; reduction is modulo the cyclotomic polynomial
Phi_q = 1 + t + ... + t^(q-1), i.e. w^(q-1) = -(1 + w + ... + w^(q-2)).
"""

from fractions import Fraction


class CyclotomicElem:
    """An element of Q(zeta_q), q an odd prime (q=2 degenerates to Q).

    Immutable.  Supports +, -, *, /, ==, and exact zero-testing.
    """

    __slots__ = ("q", "coeffs")

    def __init__(self, q, coeffs):
        self.q = q
        d = q - 1
        cs = [Fraction(c) for c in coeffs]
        if len(cs) > d:
            cs = _reduce_mod_phi(q, cs)
        cs += [Fraction(0)] * (d - len(cs))
        self.coeffs = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def rational(cls, q, r):
        return cls(q, [Fraction(r)])

    @classmethod
    def zeta(cls, q, power=1):
        power %= q
        if power == 0:
            return cls.rational(q, 1)
        return cls(q, [0] * power + [1])

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("not rational: %r" % (self,))
        return self.coeffs[0]

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CyclotomicElem):
            if other.q != self.q:
                raise ValueError("mixed conductors %d, %d" % (self.q, other.q))
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicElem.rational(self.q, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElem(self.q, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElem(self.q, [-a for a in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicElem(self.q, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.q - 1
        raw = [Fraction(0)] * (2 * d - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    raw[i + j] += a * b
        return CyclotomicElem(self.q, _reduce_mod_phi(self.q, raw))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via extended Euclid against Phi_q."""
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic zero has no inverse")
        if self.is_rational():
            return CyclotomicElem.rational(self.q, 1 / self.coeffs[0])
        q = self.q
        phi = [Fraction(1)] * q
        a = list(self.coeffs)
        # extended Euclid: find s with s*a = gcd (a unit) mod phi
        r0, r1 = phi, _trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while _deg(r1) > 0:
            qpoly, rem = _polydivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _polysub(s0, _polymul(qpoly, s1))
        if _deg(r1) < 0:
            raise ZeroDivisionError("not invertible")
        c = r1[0]
        inv = [x / c for x in s1]
        return CyclotomicElem(q, inv)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CyclotomicElem):
            return NotImplemented
        return self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.q, self.coeffs))

    # -- Galois action ---------------------------------------------------

    def galois(self, n):
        """Apply the automorphism w -> w^n (n coprime to q)."""
        q = self.q
        n %= q
        if n == 0:
            raise ValueError("n must be coprime to q")
        d = q - 1
        raw = [Fraction(0)] * q
        for i, c in enumerate(self.coeffs):
            if c:
                raw[(i * n) % q] += c
        # fold w^(q-1) .. back; only index q-1 can appear
        out = raw[:d]
        top = raw[q - 1] if len(raw) > q - 1 else Fraction(0)
        if top:
            out = [c - top for c in out]
        return CyclotomicElem(q, out)

    def conj(self):
        """Complex conjugation w -> w^(-1)."""
        return self.galois(self.q - 1)

    def norm_to_q(self):
        """Field norm down to Q (product of all Galois conjugates)."""
        acc = CyclotomicElem.rational(self.q, 1)
        for n in range(1, self.q):
            acc = acc * self.galois(n)
        return acc.rational_value()

    def denominator_lcm(self):
        from math import lcm
        return lcm(*[c.denominator for c in self.coeffs]) if self.coeffs else 1

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("%s*w" % c if c != 1 else "w")
            else:
                terms.append("%s*w^%d" % (c, i) if c != 1 else "w^%d" % i)
        return "Cyc(%d: %s)" % (self.q, " + ".join(terms) if terms else "0")


# -- dense polynomial helpers over Fraction (low-to-high coefficients) ---

def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _deg(p):
    return len(_trim(p)) - 1


def _polysub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _polymul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return _trim(out)


def _polydivmod(a, b):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    rem = list(a)
    while len(rem) >= len(b) and rem:
        c = rem[-1] / b[-1]
        k = len(rem) - len(b)
        quo[k] = c
        for i, y in enumerate(b):
            rem[k + i] -= c * y
        rem = _trim(rem)
    return _trim(quo), rem


def _reduce_mod_phi(q, coeffs):
    """Reduce a coefficient list modulo Phi_q, landing in degree < q-1."""
    cs = [Fraction(c) for c in coeffs]
    # first fold modulo w^q = 1
    if len(cs) > q:
        folded = [Fraction(0)] * q
        for i, c in enumerate(cs):
            folded[i % q] += c
        cs = folded
    cs += [Fraction(0)] * (q - len(cs))
    top = cs[q - 1]
    if top:
        cs = [c - top for c in cs[:q - 1]]
    else:
        cs = cs[:q - 1]
    return cs


# -- Kronecker encoding: Z[zeta_q]/(denominators cleared) -> Z/(Phi_q(N)) --
#
# Sending w -> N mod Phi_q(N) is a ring homomorphism.  For N large enough
# relative to the coefficients of the answer, the map is injective on the
# box of elements with balanced coordinates |c_i| < N/2, so determinants
# computed in the quotient ring decode uniquely.

def kronecker_modulus(q, n):
    """Phi_q(N) = (N^q - 1)/(N - 1)."""
    return (n ** q - 1) // (n - 1)


def kronecker_encode(elem, n, modulus):
    """Integer image of an integral CyclotomicElem under w -> N."""
    acc = 0
    power = 1
    for c in elem.coeffs:
        if c.denominator != 1:
            raise ValueError("non-integral element")
        acc = (acc + c.numerator * power) % modulus
        power = (power * n) % modulus
    return acc


def kronecker_decode(q, value, n, modulus):
    """Recover the CyclotomicElem with balanced coordinates from its image.

    Writes value = sum d_i N^i with balanced digits d_i in (-N/2, N/2],
    i = 0..q-1, then uses w^(q-1) = -(1+w+...+w^(q-2)) to fold the top
    digit: c_i = d_i - d_(q-1).
    """
    v = value % modulus
    # the element may have a representative with a w^(q-1) component once
    # written with q digits; allow one extra digit then fold
    digits = []
    for _ in range(q):
        d = v % n
        if d > n // 2:
            d -= n
        digits.append(d)
        v = (v - d) // n
    if v not in (0, 1):
        # a borrow can wrap around the modulus once; re-balance
        v2 = (value % modulus) - modulus
        digits = []
        for _ in range(q):
            d = v2 % n
            if d > n // 2:
                d -= n
            digits.append(d)
            v2 = (v2 - d) // n
        if v2 != 0:
            raise ValueError("decode overflow; increase N")
    top = digits[q - 1]
    coeffs = [digits[i] - top for i in range(q - 1)]
    return CyclotomicElem(q, coeffs)
