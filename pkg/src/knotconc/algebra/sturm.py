"""Real-root isolation for rational polynomials via Sturm sequences.

Polynomials are dense coefficient lists of Fractions, low degree first.
Everything here is exact; no floating point.
"""

from fractions import Fraction

__all__ = [
    "poly_eval", "poly_deriv", "poly_squarefree", "sturm_chain",
    "count_roots", "isolate_roots", "refine_interval",
]


def _trim(cs):
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def poly_eval(cs, x):
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def poly_deriv(cs):
    return [Fraction(k) * cs[k] for k in range(1, len(cs))]


def _poly_rem(a, b):
    """Remainder of a by b (b nonzero), over Q."""
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and _trim(r):
        dr = len(r) - 1
        if dr < db:
            break
        q = r[-1] / lb
        for i in range(db + 1):
            r[dr - db + i] -= q * b[i]
        r.pop()
    return _trim(r)


def _poly_gcd(a, b):
    a, b = list(a), list(b)
    while _trim(b):
        a, b = b, _poly_rem(a, b)
    return a


def poly_squarefree(cs):
    """Square-free part cs / gcd(cs, cs'), monic-scaled."""
    cs = _trim([Fraction(c) for c in cs])
    if len(cs) <= 1:
        return cs
    g = _poly_gcd(cs, poly_deriv(cs))
    if len(g) <= 1:
        out = list(cs)
    else:
        out = _poly_exact_div(cs, g)
    lead = out[-1]
    return [c / lead for c in out]


def _poly_exact_div(a, b):
    r = [Fraction(c) for c in a]
    db = len(b) - 1
    lb = b[-1]
    q = [Fraction(0)] * (len(a) - db)
    while _trim(r) and len(r) - 1 >= db:
        dr = len(r) - 1
        qc = r[-1] / lb
        q[dr - db] = qc
        for i in range(db + 1):
            r[dr - db + i] -= qc * b[i]
        r.pop()
    return q


def sturm_chain(cs):
    """Sturm chain of a square-free polynomial."""
    chain = [_trim([Fraction(c) for c in cs])]
    d = poly_deriv(chain[0])
    if _trim(d):
        chain.append(d)
        while True:
            r = _poly_rem(chain[-2], chain[-1])
            if not r:
                break
            chain.append([-c for c in r])
    return chain


def _sign_changes_at(chain, x):
    signs = []
    for p in chain:
        v = poly_eval(p, x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain, a, b):
    """Number of distinct roots in (a, b]; a, b rationals, a < b."""
    return _sign_changes_at(chain, a) - _sign_changes_at(chain, b)


def _safe_mid(cs, lo, hi):
    # midpoint, nudged off any root of cs
    mid = (lo + hi) / 2
    step = (hi - lo) / 7
    while poly_eval(cs, mid) == 0:
        mid += step
        step /= 3
        if mid >= hi:
            mid = (lo + hi) / 2 - step
    return mid


def isolate_roots(cs, lo, hi):
    """Disjoint isolating intervals for the distinct real roots in (lo, hi).

    Requires cs(lo) != 0 != cs(hi).  Returns [(a_i, b_i)] sorted
    increasing, each open interval containing exactly one root of the
    square-free part of cs.
    """
    sf = poly_squarefree(cs)
    if len(sf) <= 1:
        return []
    if poly_eval(sf, lo) == 0 or poly_eval(sf, hi) == 0:
        raise ValueError("isolation endpoints must not be roots")
    chain = sturm_chain(sf)
    out = []
    stack = [(Fraction(lo), Fraction(hi))]
    while stack:
        a, b = stack.pop()
        k = count_roots(chain, a, b)
        if k == 0:
            continue
        if k == 1:
            out.append((a, b))
            continue
        m = _safe_mid(sf, a, b)
        stack.append((a, m))
        stack.append((m, b))
    out.sort()
    return out


def refine_interval(cs, lo, hi, width):
    """Shrink an isolating interval for cs below the given width."""
    sf = poly_squarefree(cs)
    chain = sturm_chain(sf)
    if count_roots(chain, lo, hi) != 1:
        raise ValueError("not an isolating interval")
    while hi - lo >= width:
        m = _safe_mid(sf, lo, hi)
        if count_roots(chain, lo, m) == 1:
            hi = m
        else:
            lo = m
    return lo, hi
