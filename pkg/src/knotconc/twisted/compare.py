"""Comparisons of twisted polynomials modulo norms.

A norm is a product f(t) * conj(f)(t^{-1}) up to a scalar of Q(zeta_q)
and a power of t.  Two polynomials are `doteq` when they agree modulo
norms and units; operationally f doteq g iff f * conj(g)(1/t) is a norm,
which never trips over scalar normalization.

These tests factor over Q(zeta_q) and can come back undecided (None)
when the norm degree exceeds the factorization cap; callers must treat
None as "no certificate", never as success.
"""

from ..algebra import factorcyc
from ..algebra.factorcyc import to_cyclotomic_poly


def _poly(f):
    # accept TwistedPoly or LaurentPoly
    return f.poly if hasattr(f, "poly") else f


def is_norm(f, q, cap=factorcyc.DEFAULT_NORM_DEGREE_CAP):
    return factorcyc.is_norm(_poly(f), q, cap=cap)


def _cancel_norms(factors):
    """Remove norm content from a factor list: merge associates, cancel
    conjugate-inverse pairs, reduce self-conjugate factors mod 2."""
    merged = []
    for h, m in factors:
        for i, (k, mk) in enumerate(merged):
            if h.associate(k):
                merged[i] = (k, mk + m)
                break
        else:
            merged.append((h, m))
    core = []
    left = merged
    while left:
        p, m = left.pop()
        pbar = p.involution()
        if p.associate(pbar):
            if m % 2:
                core.append((p, 1))
            continue
        mate = next((i for i, (r, _k) in enumerate(left)
                     if r.associate(pbar)), None)
        if mate is None:
            core.append((p, m))
            continue
        r, k = left.pop(mate)
        if m > k:
            core.append((p, m - k))
        elif k > m:
            core.append((r, k - m))
    return core


def nonnorm_core(f, q, cap=factorcyc.DEFAULT_NORM_DEGREE_CAP):
    """Irreducible factors of f surviving after removing norm content.

    Conjugate-inverse pairs are cancelled at their minimum multiplicity
    and self-conjugate factors are reduced mod 2; what remains is the
    obstruction to f being a norm.  Returns a list of (factor, odd
    multiplicity) or None if the factorization is out of reach.
    """
    factors = factorcyc.factor_over_cyclotomic(_poly(f), q, cap=cap)
    if factors is None:
        return None
    return _cancel_norms(factors)


def doteq(f, g, q, cap=factorcyc.DEFAULT_NORM_DEGREE_CAP):
    """f = g modulo norms and units; True/False/None.

    Equivalent to f * conj(g)(1/t) being a norm, but factors the inputs
    separately (cheaper than factoring the product) and cancels their
    non-norm cores against each other.
    """
    cf = nonnorm_core(f, q, cap=cap)
    cg = nonnorm_core(g, q, cap=cap)
    if cf is None or cg is None:
        return None
    combined = cf + [(h.involution(), m) for h, m in cg]
    return not _cancel_norms(combined)


def galois_coincidences(f, g, q, cap=factorcyc.DEFAULT_NORM_DEGREE_CAP):
    """The set of n with f = sigma_n(g) modulo norms and units, or None.

    Factors each input once; the Galois action permutes factor lists, so
    the q-1 comparisons are cheap multiset checks.
    """
    cf = nonnorm_core(f, q, cap=cap)
    cg = nonnorm_core(g, q, cap=cap)
    if cf is None or cg is None:
        return None
    hits = set()
    for n in range(1, q):
        twisted = [(h.galois(n).involution(), m) for h, m in cg]
        if not _cancel_norms(cf + twisted):
            hits.add(n)
    return hits


def coprime_up_to_norms(f, g, q, cap=factorcyc.DEFAULT_NORM_DEGREE_CAP):
    """No common irreducible content between the non-norm cores of f and
    g (a factor h of f counts as common when h or its conjugate-inverse
    divides g)."""
    cf = nonnorm_core(f, q, cap=cap)
    cg = nonnorm_core(g, q, cap=cap)
    if cf is None or cg is None:
        return None
    for h, _ in cf:
        hbar = h.involution()
        for k, _ in cg:
            if h.associate(k) or hbar.associate(k):
                return False
    return True


def factor_escapes(chi0_poly, others, q, cap=factorcyc.DEFAULT_NORM_DEGREE_CAP):
    """Is there a nontrivial irreducible factor f of chi0_poly whose
    conjugate-inverse divides none of the given polynomials nor any of
    their Galois conjugates?

    This is the "cannot combine with nontrivial twisted polynomials"
    condition of the infinite-order theorems.  Returns the escaping
    factor, False, or None (undecided).
    """
    factors = factorcyc.factor_over_cyclotomic(_poly(chi0_poly), q, cap=cap)
    if factors is None:
        return None
    other_factors = []
    for g in others:
        fg = factorcyc.factor_over_cyclotomic(_poly(g), q, cap=cap)
        if fg is None:
            return None
        other_factors.extend(p for p, _m in fg)
    for f, _m in factors:
        if f.span() == 0:
            continue
        fbar = f.involution()
        caught = any(
            fbar.galois(n).associate(k)
            for k in other_factors for n in range(1, q))
        if not caught:
            return f
    return False


def orbit_canonical(x, y, a, q, p):
    """Canonical representative of the character pair (x, y) in
    projective Z_q^2 modulo the deck action (x, y) -> (b x, a y).

    Scaling by Z_q^* is Galois conjugation and the deck action fixes the
    polynomial, so pairs in one orbit share a twisted polynomial.  With
    b = a^{-1}, scaling to x = 1 turns the action into y -> a^2 y.
    """
    if pow(a, p, q) != 1 or a % q == 1:
        raise ValueError("a must have order p mod q")
    x, y = x % q, y % q
    if x == 0 and y == 0:
        return (0, 0)
    if x == 0:
        return (0, 1)
    y = (y * pow(x, -1, q)) % q
    step = pow(a, 2, q)
    best = y
    cur = y
    for _ in range(p - 1):
        cur = (cur * step) % q
        if cur < best:
            best = cur
    return (1, best)


def orbit_representatives(a, q, p):
    """One (1, y) representative per orbit of nonzero y, plus (1, 0) and
    (0, 1).  There are (q-1)/p nonzero-y orbits."""
    seen = set()
    reps = [(1, 0), (0, 1)]
    for y in range(1, q):
        r = orbit_canonical(1, y, a, q, p)
        if r not in seen:
            seen.add(r)
            reps.append(r)
    return reps
